#include "mapkit/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mapkit {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::VertexCover: return "vc";
    case Problem::FeedbackVertexSet: return "fvs";
    case Problem::LongestCycle: return "longest-cycle";
    case Problem::LongestPath: return "longest-path";
    case Problem::CyclePacking: return "cycle-packing";
  }
  return "?";
}

std::optional<Problem> problem_from_name(const std::string& name) {
  if (name == "vc") return Problem::VertexCover;
  if (name == "fvs") return Problem::FeedbackVertexSet;
  if (name == "longest-cycle") return Problem::LongestCycle;
  if (name == "longest-path") return Problem::LongestPath;
  if (name == "cycle-packing") return Problem::CyclePacking;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from) {
  return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

// ---------------------------------------------------------------------------
// Shared DP context: per-node bags (optionally augmented with two vertices
// added to every bag), designated edges at their decision points, caps.
// ---------------------------------------------------------------------------

struct Ctx {
  const MapGraph* m = nullptr;
  const FewCliquesDecomposition* f = nullptr;
  bool augmented = false;
  Vertex au = -1, av = -1;

  std::vector<std::vector<Vertex>> bag;        // sorted, augmented
  std::vector<std::vector<Vertex>> originals;  // sorted, augmented
  std::vector<std::vector<Edge>> designated;   // per node
  std::vector<long long> cap;                  // per node; LLONG_MAX = uncapped
  // positions of each node-clique's members inside the node bag
  std::vector<std::vector<std::vector<int>>> clique_positions;

  bool adjacent(Vertex a, Vertex b) const {
    if (augmented && ((a == au && b == av) || (a == av && b == au))) return true;
    return m->graph.has_edge(a, b);
  }

  int pos(int t, Vertex v) const {
    const auto& b = bag[static_cast<std::size_t>(t)];
    auto it = std::lower_bound(b.begin(), b.end(), v);
    return (it != b.end() && *it == v) ? static_cast<int>(it - b.begin()) : -1;
  }
};

enum class CapKind { None, PerNodeCycle, Packing };

Ctx build_ctx(const MapGraph& m, const FewCliquesDecomposition& f, CapKind cap_kind,
              std::optional<int> cap_override, bool augmented = false, Vertex au = -1, Vertex av = -1) {
  Ctx ctx;
  ctx.m = &m;
  ctx.f = &f;
  ctx.augmented = augmented;
  ctx.au = au;
  ctx.av = av;
  const int nodes = f.num_nodes();
  ctx.bag.resize(static_cast<std::size_t>(nodes));
  ctx.originals.resize(static_cast<std::size_t>(nodes));
  ctx.designated.resize(static_cast<std::size_t>(nodes));
  ctx.cap.assign(static_cast<std::size_t>(nodes), LLONG_MAX);
  ctx.clique_positions.resize(static_cast<std::size_t>(nodes));

  for (int t = 0; t < nodes; ++t) {
    auto b = f.bag[static_cast<std::size_t>(t)];
    auto o = f.original[static_cast<std::size_t>(t)];
    if (augmented) {
      for (Vertex x : {au, av}) {
        if (!std::binary_search(b.begin(), b.end(), x)) b.insert(std::lower_bound(b.begin(), b.end(), x), x);
        if (!std::binary_search(o.begin(), o.end(), x)) o.insert(std::lower_bound(o.begin(), o.end(), x), x);
      }
    }
    ctx.bag[static_cast<std::size_t>(t)] = std::move(b);
    ctx.originals[static_cast<std::size_t>(t)] = std::move(o);
    const int ncl = static_cast<int>(f.cliques[static_cast<std::size_t>(t)].size());
    if (cap_kind == CapKind::PerNodeCycle)
      ctx.cap[static_cast<std::size_t>(t)] =
          2LL * static_cast<long long>(ctx.originals[static_cast<std::size_t>(t)].size()) + 4LL * ncl;
    else if (cap_kind == CapKind::Packing)
      ctx.cap[static_cast<std::size_t>(t)] = 24LL * (f.source_td->width() + 1);
    if (cap_override && cap_kind != CapKind::None) ctx.cap[static_cast<std::size_t>(t)] = *cap_override;
    auto& cpos = ctx.clique_positions[static_cast<std::size_t>(t)];
    for (int s : f.cliques[static_cast<std::size_t>(t)]) {
      std::vector<int> positions;
      for (Vertex v : m.special_cliques[static_cast<std::size_t>(s)]) {
        int p = ctx.pos(t, v);
        if (p >= 0) positions.push_back(p);
      }
      cpos.push_back(std::move(positions));
    }
  }

  // Decision points: deepest co-residency node, ties by smallest postorder.
  std::map<Edge, int> decision;
  for (int t = 0; t < nodes; ++t) {
    const auto& b = ctx.bag[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!ctx.adjacent(b[i], b[j])) continue;
        Edge e{b[i], b[j]};
        auto it = decision.find(e);
        if (it == decision.end()) {
          decision.emplace(e, t);
          continue;
        }
        int old = it->second;
        int dt = f.depth[static_cast<std::size_t>(t)], dold = f.depth[static_cast<std::size_t>(old)];
        if (dt > dold || (dt == dold && f.postorder_index[static_cast<std::size_t>(t)] <
                                            f.postorder_index[static_cast<std::size_t>(old)]))
          it->second = t;
      }
  }
  for (const auto& [e, t] : decision) ctx.designated[static_cast<std::size_t>(t)].push_back(e);
  for (auto& d : ctx.designated) std::sort(d.begin(), d.end());
  return ctx;
}

// ---------------------------------------------------------------------------
// DP tables
// ---------------------------------------------------------------------------

struct Entry {
  std::string key;
  long long value = 0;
  int pred1 = -1, pred2 = -1;
  std::vector<Edge> added;  // cycle family: edges added at this node
  Vertex chosen = -1;       // deletion family: vertex taken into the solution here
};

struct Table {
  std::vector<Entry> entries;
  std::unordered_map<std::string, int> index;

  void insert(Entry&& e, bool maximize) {
    auto it = index.find(e.key);
    if (it == index.end()) {
      index.emplace(e.key, static_cast<int>(entries.size()));
      entries.push_back(std::move(e));
      return;
    }
    Entry& old = entries[static_cast<std::size_t>(it->second)];
    if (maximize ? e.value > old.value : e.value < old.value) old = std::move(e);
  }
};

// Evaluates the tree bottom-up. With threads > 1 sibling subtrees run as
// OpenMP tasks; unary chains are flattened so recursion depth stays at the
// join-nesting depth. Node results are identical regardless of schedule.
struct TreeEval {
  const std::vector<std::vector<int>>* children = nullptr;
  std::function<void(int)> compute;

  void run(int root, const std::vector<int>& postorder, int threads) {
    if (threads <= 1) {
      for (int t : postorder) compute(t);
      return;
    }
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#pragma omp single
    eval_subtree(root);
#else
    (void)root;
    for (int t : postorder) compute(t);
#endif
  }

  void eval_subtree(int t) {
    std::vector<int> chain;
    int x = t;
    while (true) {
      chain.push_back(x);
      const auto& c = (*children)[static_cast<std::size_t>(x)];
      if (c.size() == 1) {
        x = c[0];
        continue;
      }
      if (c.size() == 2) {
        const int left = c[0], right = c[1];
#ifdef _OPENMP
#pragma omp task default(shared) firstprivate(left)
        eval_subtree(left);
        eval_subtree(right);
#pragma omp taskwait
#else
        eval_subtree(left);
        eval_subtree(right);
#endif
      }
      break;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) compute(*it);
  }
};

// ---------------------------------------------------------------------------
// Cycle family: Longest Cycle and Cycle Packing.
//
// Status bytes per bag position: 0xFE absent, 0xFF saturated, otherwise the
// bag position of the path partner. Longest-cycle keys carry a leading
// closed flag. Edges enter the solution only at their decision points.
// ---------------------------------------------------------------------------

constexpr std::uint8_t kAbsent = 0xFE;
constexpr std::uint8_t kSaturated = 0xFF;

enum class CycMode { LongestCycle, CyclePacking };

struct CycleEngine {
  const Ctx& ctx;
  CycMode mode;
  std::vector<Table> tables;

  explicit CycleEngine(const Ctx& c, CycMode md) : ctx(c), mode(md) {
    tables.resize(static_cast<std::size_t>(c.f->num_nodes()));
  }

  bool lc() const { return mode == CycMode::LongestCycle; }
  int off() const { return lc() ? 1 : 0; }

  std::uint8_t status(const std::string& key, int p) const {
    return static_cast<std::uint8_t>(key[static_cast<std::size_t>(p + off())]);
  }
  static void set_status(std::string& key, int off, int p, std::uint8_t s) {
    key[static_cast<std::size_t>(p + off)] = static_cast<char>(s);
  }
  bool closed(const std::string& key) const { return lc() && key[0] != 0; }

  int endpoint_count(const std::string& key) const {
    int c = 0;
    for (std::size_t i = static_cast<std::size_t>(off()); i < key.size(); ++i)
      if (static_cast<std::uint8_t>(key[i]) < kAbsent) ++c;
    return c;
  }

  // Attempts to add edge (positions pa < pb) to the entry's key in place.
  // Returns false when the addition is inadmissible.
  bool apply_edge(std::string& key, long long& value, int pa, int pb, int& closures) {
    if (closed(key)) return false;
    std::uint8_t sa = status(key, pa), sb = status(key, pb);
    if (sa == kSaturated || sb == kSaturated) return false;
    const int o = off();
    if (sa == kAbsent && sb == kAbsent) {
      set_status(key, o, pa, static_cast<std::uint8_t>(pb));
      set_status(key, o, pb, static_cast<std::uint8_t>(pa));
    } else if (sa == kAbsent) {  // b is an endpoint
      int partner = sb;
      set_status(key, o, pa, static_cast<std::uint8_t>(partner));
      set_status(key, o, partner, static_cast<std::uint8_t>(pa));
      set_status(key, o, pb, kSaturated);
    } else if (sb == kAbsent) {
      int partner = sa;
      set_status(key, o, pb, static_cast<std::uint8_t>(partner));
      set_status(key, o, partner, static_cast<std::uint8_t>(pb));
      set_status(key, o, pa, kSaturated);
    } else {  // both endpoints
      if (static_cast<int>(sa) == pb) {  // closing the path pa..pb
        set_status(key, o, pa, kSaturated);
        set_status(key, o, pb, kSaturated);
        ++closures;
        if (lc()) {
          for (std::size_t i = static_cast<std::size_t>(o); i < key.size(); ++i)
            if (static_cast<std::uint8_t>(key[i]) < kAbsent) return false;  // stranded endpoint
          key[0] = 1;
        }
      } else {
        int qa = sa, qb = sb;
        set_status(key, o, pa, kSaturated);
        set_status(key, o, pb, kSaturated);
        set_status(key, o, qa, static_cast<std::uint8_t>(qb));
        set_status(key, o, qb, static_cast<std::uint8_t>(qa));
      }
    }
    if (lc()) ++value;
    return true;
  }

  void copy_child(Table& tab, int child_id) {
    const Table& child = tables[static_cast<std::size_t>(child_id)];
    for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
      Entry e = child.entries[static_cast<std::size_t>(i)];
      e.pred1 = i;
      e.pred2 = -1;
      e.added.clear();
      e.chosen = -1;
      tab.insert(std::move(e), true);
    }
  }

  Table process_edges(Table&& in, int t) {
    Table cur = std::move(in);
    for (const Edge& e : ctx.designated[static_cast<std::size_t>(t)]) {
      const int pa = ctx.pos(t, e.first), pb = ctx.pos(t, e.second);
      Table next;
      for (int i = 0; i < static_cast<int>(cur.entries.size()); ++i) {
        const Entry& en = cur.entries[static_cast<std::size_t>(i)];
        Entry skip = en;
        next.insert(std::move(skip), true);
        Entry add = en;
        int closures = 0;
        if (apply_edge(add.key, add.value, std::min(pa, pb), std::max(pa, pb), closures)) {
          if (!lc()) add.value += closures;
          add.added.push_back(e);
          next.insert(std::move(add), true);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  void cap_filter(Table& tab, int t) {
    const long long cap = ctx.cap[static_cast<std::size_t>(t)];
    if (cap == LLONG_MAX) return;
    Table out;
    for (auto& e : tab.entries)
      if (endpoint_count(e.key) <= cap) out.insert(std::move(e), true);
    tab = std::move(out);
  }

  void compute(int t) {
    const auto& f = *ctx.f;
    const auto& kids = f.child_list[static_cast<std::size_t>(t)];
    const auto& lab = f.label[static_cast<std::size_t>(t)];
    Table tab;
    switch (lab.kind) {
      case FcdLabel::Leaf: {
        Entry e;
        e.key.assign(static_cast<std::size_t>(off()) + ctx.bag[static_cast<std::size_t>(t)].size(), 0);
        for (std::size_t i = 0; i < ctx.bag[static_cast<std::size_t>(t)].size(); ++i)
          set_status(e.key, off(), static_cast<int>(i), kAbsent);
        tab.insert(std::move(e), true);
        break;
      }
      case FcdLabel::Introduce: {
        if (ctx.augmented && (lab.vertex == ctx.au || lab.vertex == ctx.av)) {
          // vertex is pinned into every bag: nothing enters or leaves
          copy_child(tab, kids.at(0));
          break;
        }
        const Table& child = tables[static_cast<std::size_t>(kids.at(0))];
        const int p = ctx.pos(t, lab.vertex);
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          const Entry& ce = child.entries[static_cast<std::size_t>(i)];
          Entry e;
          e.value = ce.value;
          e.pred1 = i;
          e.key.reserve(ce.key.size() + 1);
          e.key = ce.key;
          // shift partner positions >= p, then insert the new slot
          for (std::size_t q = static_cast<std::size_t>(off()); q < e.key.size(); ++q) {
            std::uint8_t s = static_cast<std::uint8_t>(e.key[q]);
            if (s < kAbsent && s >= p) e.key[q] = static_cast<char>(s + 1);
          }
          e.key.insert(e.key.begin() + off() + p, static_cast<char>(kAbsent));
          tab.insert(std::move(e), true);
        }
        break;
      }
      case FcdLabel::FakeIntroduce:
      case FcdLabel::Redundant:
        copy_child(tab, kids.at(0));
        break;
      case FcdLabel::Forget:
      case FcdLabel::ForgetSet: {
        const int c = kids.at(0);
        const Table& child = tables[static_cast<std::size_t>(c)];
        std::vector<Vertex> removed = lab.kind == FcdLabel::Forget
                                          ? std::vector<Vertex>{lab.vertex}
                                          : lab.removed_set;
        std::vector<int> rpos;
        for (Vertex v : removed) {
          if (ctx.augmented && (v == ctx.au || v == ctx.av)) continue;  // pinned
          int p = ctx.pos(c, v);
          if (p >= 0) rpos.push_back(p);
        }
        std::sort(rpos.begin(), rpos.end());
        const std::size_t child_sz = ctx.bag[static_cast<std::size_t>(c)].size();
        std::vector<int> newpos(child_sz);
        {
          int shift = 0;
          std::size_t ri = 0;
          for (std::size_t q = 0; q < child_sz; ++q) {
            if (ri < rpos.size() && static_cast<int>(q) == rpos[ri]) {
              newpos[q] = -1;
              ++ri;
              ++shift;
            } else {
              newpos[q] = static_cast<int>(q) - shift;
            }
          }
        }
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          const Entry& ce = child.entries[static_cast<std::size_t>(i)];
          bool ok = true;
          for (int p : rpos) {
            std::uint8_t s = status(ce.key, p);
            if (s != kAbsent && s != kSaturated) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          Entry e;
          e.value = ce.value;
          e.pred1 = i;
          e.key.assign(static_cast<std::size_t>(off()) + child_sz - rpos.size(), 0);
          if (lc()) e.key[0] = ce.key[0];
          for (std::size_t q = 0; q < child_sz; ++q) {
            if (newpos[q] < 0) continue;
            std::uint8_t s = status(ce.key, static_cast<int>(q));
            if (s < kAbsent) s = static_cast<std::uint8_t>(newpos[static_cast<std::size_t>(s)]);
            set_status(e.key, off(), newpos[q], s);
          }
          tab.insert(std::move(e), true);
        }
        break;
      }
      case FcdLabel::Join:
        tab = join(t, kids.at(0), kids.at(1));
        break;
    }
    tab = process_edges(std::move(tab), t);
    cap_filter(tab, t);
    tables[static_cast<std::size_t>(t)] = std::move(tab);
  }

  Table join(int t, int c1, int c2) {
    const Table& t1 = tables[static_cast<std::size_t>(c1)];
    const Table& t2 = tables[static_cast<std::size_t>(c2)];
    const auto& bag = ctx.bag[static_cast<std::size_t>(t)];
    const auto& b1 = ctx.bag[static_cast<std::size_t>(c1)];
    const auto& b2 = ctx.bag[static_cast<std::size_t>(c2)];
    const int n = static_cast<int>(bag.size());
    // position maps: bag(t) position -> child positions (-1 if absent)
    std::vector<int> p1(static_cast<std::size_t>(n), -1), p2(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      p1[static_cast<std::size_t>(i)] = ctx.pos(c1, bag[static_cast<std::size_t>(i)]);
      p2[static_cast<std::size_t>(i)] = ctx.pos(c2, bag[static_cast<std::size_t>(i)]);
    }
    // child position -> bag(t) position
    std::vector<int> back1(b1.size()), back2(b2.size());
    for (int i = 0; i < n; ++i) {
      if (p1[static_cast<std::size_t>(i)] >= 0) back1[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])] = i;
      if (p2[static_cast<std::size_t>(i)] >= 0) back2[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])] = i;
    }

    Table out;
    for (int i1 = 0; i1 < static_cast<int>(t1.entries.size()); ++i1) {
      const Entry& e1 = t1.entries[static_cast<std::size_t>(i1)];
      for (int i2 = 0; i2 < static_cast<int>(t2.entries.size()); ++i2) {
        const Entry& e2 = t2.entries[static_cast<std::size_t>(i2)];
        Entry merged;
        if (!compose(t, e1, e2, p1, p2, back1, back2, merged)) continue;
        merged.pred1 = i1;
        merged.pred2 = i2;
        out.insert(std::move(merged), true);
      }
    }
    return out;
  }

  // Composes two child states: degrees add on shared vertices, endpoint
  // pairings concatenate; composition cycles are closures.
  bool compose(int t, const Entry& e1, const Entry& e2, const std::vector<int>& p1,
               const std::vector<int>& p2, const std::vector<int>& back1, const std::vector<int>& back2,
               Entry& out) {
    const int n = static_cast<int>(ctx.bag[static_cast<std::size_t>(t)].size());
    const bool closed1 = closed(e1.key), closed2 = closed(e2.key);
    if (lc() && closed1 && closed2) return false;

    auto deg_of = [](std::uint8_t s) { return s == kAbsent ? 0 : (s == kSaturated ? 2 : 1); };
    std::vector<std::uint8_t> s1(static_cast<std::size_t>(n), kAbsent), s2(static_cast<std::size_t>(n), kAbsent);
    for (int i = 0; i < n; ++i) {
      if (p1[static_cast<std::size_t>(i)] >= 0) s1[static_cast<std::size_t>(i)] = status(e1.key, p1[static_cast<std::size_t>(i)]);
      if (p2[static_cast<std::size_t>(i)] >= 0) s2[static_cast<std::size_t>(i)] = status(e2.key, p2[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i)
      if (deg_of(s1[static_cast<std::size_t>(i)]) + deg_of(s2[static_cast<std::size_t>(i)]) > 2) return false;

    // links: endpoint pairs from both sides, in bag(t) positions
    struct Link {
      int a, b;
      bool used = false;
    };
    std::vector<Link> links;
    std::vector<std::vector<int>> at(static_cast<std::size_t>(n));
    auto collect = [&](const std::vector<std::uint8_t>& s, const std::vector<int>& back) {
      for (int i = 0; i < n; ++i) {
        std::uint8_t st = s[static_cast<std::size_t>(i)];
        if (st >= kAbsent) continue;
        int j = back[static_cast<std::size_t>(st)];
        if (i < j) {
          at[static_cast<std::size_t>(i)].push_back(static_cast<int>(links.size()));
          at[static_cast<std::size_t>(j)].push_back(static_cast<int>(links.size()));
          links.push_back({i, j, false});
        }
      }
    };
    collect(s1, back1);
    collect(s2, back2);

    std::vector<std::uint8_t> res(static_cast<std::size_t>(n), kAbsent);
    for (int i = 0; i < n; ++i) {
      int d = deg_of(s1[static_cast<std::size_t>(i)]) + deg_of(s2[static_cast<std::size_t>(i)]);
      if (d == 2 && at[static_cast<std::size_t>(i)].size() != 2) res[static_cast<std::size_t>(i)] = kSaturated;
    }
    int closures = 0;
    // trace open chains from link-degree-1 vertices
    for (int i = 0; i < n; ++i) {
      if (at[static_cast<std::size_t>(i)].size() != 1) continue;
      int lid = at[static_cast<std::size_t>(i)][0];
      if (links[static_cast<std::size_t>(lid)].used) continue;
      int cur = i, curlink = lid;
      while (true) {
        Link& L = links[static_cast<std::size_t>(curlink)];
        L.used = true;
        int next = L.a == cur ? L.b : L.a;
        const auto& nl = at[static_cast<std::size_t>(next)];
        int follow = -1;
        for (int cand : nl)
          if (cand != curlink && !links[static_cast<std::size_t>(cand)].used) follow = cand;
        if (follow == -1) {
          res[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(next);
          res[static_cast<std::size_t>(next)] = static_cast<std::uint8_t>(i);
          break;
        }
        res[static_cast<std::size_t>(next)] = kSaturated;
        cur = next;
        curlink = follow;
      }
    }
    // remaining links lie on composition cycles
    for (std::size_t lid = 0; lid < links.size(); ++lid) {
      if (links[lid].used) continue;
      ++closures;
      int start = links[lid].a, cur = start, curlink = static_cast<int>(lid);
      while (true) {
        Link& L = links[static_cast<std::size_t>(curlink)];
        L.used = true;
        res[static_cast<std::size_t>(L.a)] = kSaturated;
        res[static_cast<std::size_t>(L.b)] = kSaturated;
        int next = L.a == cur ? L.b : L.a;
        if (next == start) break;
        int follow = -1;
        for (int cand : at[static_cast<std::size_t>(next)])
          if (cand != curlink && !links[static_cast<std::size_t>(cand)].used) follow = cand;
        if (follow == -1) break;
        cur = next;
        curlink = follow;
      }
    }

    bool closed_out = closed1 || closed2;
    if (lc()) {
      if (closures > 1) return false;
      if (closures == 1) {
        if (closed_out) return false;
        closed_out = true;
      }
      if (closed_out)
        for (int i = 0; i < n; ++i)
          if (res[static_cast<std::size_t>(i)] < kAbsent) return false;
    }

    out.key.assign(static_cast<std::size_t>(off() + n), 0);
    if (lc()) out.key[0] = closed_out ? 1 : 0;
    for (int i = 0; i < n; ++i) set_status(out.key, off(), i, res[static_cast<std::size_t>(i)]);
    out.value = e1.value + e2.value + (lc() ? 0 : closures);
    return true;
  }
};

// ---------------------------------------------------------------------------
// Deletion family: Vertex Cover and Feedback Vertex Set.
//
// Key bytes per bag position: 0 = taken into the solution set; otherwise a
// survivor. FVS survivors carry 1 + canonical block id of the forest
// partition; VC survivors are plain 1. Every stored state keeps at most 2
// survivors (FVS) / 1 uncovered vertex (VC) per bag clique.
// ---------------------------------------------------------------------------

enum class DelMode { VertexCover, FeedbackVertexSet };

struct DeletionEngine {
  const Ctx& ctx;
  DelMode mode;
  long long limit;  // prune states whose solution size exceeds this
  std::vector<Table> tables;

  DeletionEngine(const Ctx& c, DelMode md, long long lim) : ctx(c), mode(md), limit(lim) {
    tables.resize(static_cast<std::size_t>(c.f->num_nodes()));
  }

  bool fvs() const { return mode == DelMode::FeedbackVertexSet; }

  static void canonicalize(std::string& key) {
    // renumber block ids by first appearance
    std::map<char, char> remap;
    char next = 1;
    for (char& c : key) {
      if (c == 0) continue;
      auto it = remap.find(c);
      if (it == remap.end()) {
        remap.emplace(c, next);
        c = next;
        ++next;
      } else {
        c = it->second;
      }
    }
  }

  bool clique_rule_ok(const std::string& key, int t) const {
    const int max_survivors = fvs() ? 2 : 1;
    for (const auto& positions : ctx.clique_positions[static_cast<std::size_t>(t)]) {
      int survivors = 0;
      for (int p : positions)
        if (key[static_cast<std::size_t>(p)] != 0) ++survivors;
      if (survivors > max_survivors) return false;
    }
    return true;
  }

  // Designated-edge handling is deterministic: a surviving pair merges blocks
  // (FVS, rejecting same-block merges) or rejects outright (VC).
  bool apply_edges(std::string& key, int t) const {
    for (const Edge& e : ctx.designated[static_cast<std::size_t>(t)]) {
      const int pa = ctx.pos(t, e.first), pb = ctx.pos(t, e.second);
      char a = key[static_cast<std::size_t>(pa)], b = key[static_cast<std::size_t>(pb)];
      if (a == 0 || b == 0) continue;
      if (!fvs()) return false;  // uncovered edge
      if (a == b) return false;  // survivor-survivor edge closes a cycle
      for (char& c : key)
        if (c == b) c = a;
    }
    return true;
  }

  void finish_entry(Table& tab, Entry&& e, int t) {
    if (e.value > limit) return;
    if (!apply_edges(e.key, t)) return;
    if (!clique_rule_ok(e.key, t)) return;
    canonicalize(e.key);
    tab.insert(std::move(e), false);
  }

  void compute(int t) {
    const auto& f = *ctx.f;
    const auto& kids = f.child_list[static_cast<std::size_t>(t)];
    const auto& lab = f.label[static_cast<std::size_t>(t)];
    Table tab;
    switch (lab.kind) {
      case FcdLabel::Leaf: {
        Entry e;
        e.key.assign(ctx.bag[static_cast<std::size_t>(t)].size(), 0);
        // an augmented bag never occurs in this family; leaves are empty
        finish_entry(tab, std::move(e), t);
        break;
      }
      case FcdLabel::Introduce: {
        const Table& child = tables[static_cast<std::size_t>(kids.at(0))];
        const int p = ctx.pos(t, lab.vertex);
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          const Entry& ce = child.entries[static_cast<std::size_t>(i)];
          {  // take v into the solution
            Entry e;
            e.key = ce.key;
            e.key.insert(e.key.begin() + p, char(0));
            e.value = ce.value + 1;
            e.pred1 = i;
            e.chosen = lab.vertex;
            finish_entry(tab, std::move(e), t);
          }
          {  // v survives: fresh singleton block (FVS) / uncovered (VC)
            Entry e;
            e.key = ce.key;
            char fresh = 1;
            for (char c : ce.key) fresh = std::max(fresh, static_cast<char>(c + 1));
            e.key.insert(e.key.begin() + p, fvs() ? fresh : char(1));
            e.value = ce.value;
            e.pred1 = i;
            finish_entry(tab, std::move(e), t);
          }
        }
        break;
      }
      case FcdLabel::FakeIntroduce:
      case FcdLabel::Redundant: {
        const Table& child = tables[static_cast<std::size_t>(kids.at(0))];
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          Entry e = child.entries[static_cast<std::size_t>(i)];
          e.pred1 = i;
          e.pred2 = -1;
          e.added.clear();
          e.chosen = -1;
          finish_entry(tab, std::move(e), t);
        }
        break;
      }
      case FcdLabel::Forget:
      case FcdLabel::ForgetSet: {
        const int c = kids.at(0);
        const Table& child = tables[static_cast<std::size_t>(c)];
        std::vector<Vertex> removed = lab.kind == FcdLabel::Forget
                                          ? std::vector<Vertex>{lab.vertex}
                                          : lab.removed_set;
        std::vector<int> rpos;
        for (Vertex v : removed) {
          int p = ctx.pos(c, v);
          if (p >= 0) rpos.push_back(p);
        }
        std::sort(rpos.begin(), rpos.end(), std::greater<int>());
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          Entry e = child.entries[static_cast<std::size_t>(i)];
          e.pred1 = i;
          e.pred2 = -1;
          e.chosen = -1;
          for (int p : rpos) e.key.erase(e.key.begin() + p);
          finish_entry(tab, std::move(e), t);
        }
        break;
      }
      case FcdLabel::Join:
        tab = join(t, kids.at(0), kids.at(1));
        break;
    }
    tables[static_cast<std::size_t>(t)] = std::move(tab);
  }

  Table join(int t, int c1, int c2) {
    const Table& t1 = tables[static_cast<std::size_t>(c1)];
    const Table& t2 = tables[static_cast<std::size_t>(c2)];
    const auto& bag = ctx.bag[static_cast<std::size_t>(t)];
    const int n = static_cast<int>(bag.size());
    std::vector<int> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
    std::vector<int> shared;  // bag(t) positions present in both children
    for (int i = 0; i < n; ++i) {
      p1[static_cast<std::size_t>(i)] = ctx.pos(c1, bag[static_cast<std::size_t>(i)]);
      p2[static_cast<std::size_t>(i)] = ctx.pos(c2, bag[static_cast<std::size_t>(i)]);
      if (p1[static_cast<std::size_t>(i)] >= 0 && p2[static_cast<std::size_t>(i)] >= 0) shared.push_back(i);
    }
    Table out;
    for (int i1 = 0; i1 < static_cast<int>(t1.entries.size()); ++i1) {
      const Entry& e1 = t1.entries[static_cast<std::size_t>(i1)];
      for (int i2 = 0; i2 < static_cast<int>(t2.entries.size()); ++i2) {
        const Entry& e2 = t2.entries[static_cast<std::size_t>(i2)];
        // compatibility: equal in/out decisions on shared vertices
        bool ok = true;
        long long shared_taken = 0;
        for (int i : shared) {
          const bool d1 = e1.key[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])] == 0;
          const bool d2 = e2.key[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])] == 0;
          if (d1 != d2) {
            ok = false;
            break;
          }
          if (d1) ++shared_taken;
        }
        if (!ok) continue;
        Entry e;
        e.value = e1.value + e2.value - shared_taken;
        if (e.value > limit) continue;
        e.pred1 = i1;
        e.pred2 = i2;
        e.key.assign(static_cast<std::size_t>(n), 0);
        if (!fvs()) {
          for (int i = 0; i < n; ++i) {
            bool surv;
            if (p1[static_cast<std::size_t>(i)] >= 0)
              surv = e1.key[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])] != 0;
            else
              surv = e2.key[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])] != 0;
            e.key[static_cast<std::size_t>(i)] = surv ? 1 : 0;
          }
          finish_entry(out, std::move(e), t);
          continue;
        }
        // FVS: fuse forest partitions, rejecting fusions that close a cycle.
        std::vector<int> uf(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) uf[static_cast<std::size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
          while (uf[static_cast<std::size_t>(x)] != x) {
            uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            x = uf[static_cast<std::size_t>(x)];
          }
          return x;
        };
        std::vector<char> alive(static_cast<std::size_t>(n), 0);
        auto fuse_side = [&](const Entry& ce, const std::vector<int>& pmap, bool detect) {
          std::map<char, int> block_rep;
          for (int i = 0; i < n; ++i) {
            int p = pmap[static_cast<std::size_t>(i)];
            if (p < 0) continue;
            char b = ce.key[static_cast<std::size_t>(p)];
            if (b == 0) continue;
            alive[static_cast<std::size_t>(i)] = 1;
            auto it = block_rep.find(b);
            if (it == block_rep.end()) {
              block_rep.emplace(b, i);
              continue;
            }
            int ra = find(it->second), rb = find(i);
            if (ra == rb) {
              if (detect) return false;
              continue;
            }
            uf[static_cast<std::size_t>(rb)] = ra;
          }
          return true;
        };
        fuse_side(e1, p1, false);
        if (!fuse_side(e2, p2, true)) continue;
        for (int i = 0; i < n; ++i)
          if (alive[static_cast<std::size_t>(i)])
            e.key[static_cast<std::size_t>(i)] = static_cast<char>(1 + find(i));
        finish_entry(out, std::move(e), t);
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Certificate reconstruction
// ---------------------------------------------------------------------------

template <typename Visit>
void walk_provenance(const std::vector<Table>& tables, const FewCliquesDecomposition& f, int root_node,
                     int root_entry, Visit&& visit) {
  std::vector<std::pair<int, int>> stack{{root_node, root_entry}};
  while (!stack.empty()) {
    auto [t, idx] = stack.back();
    stack.pop_back();
    const Entry& e = tables[static_cast<std::size_t>(t)].entries[static_cast<std::size_t>(idx)];
    visit(e);
    const auto& kids = f.child_list[static_cast<std::size_t>(t)];
    if (e.pred1 >= 0 && !kids.empty()) stack.emplace_back(kids[0], e.pred1);
    if (e.pred2 >= 0 && kids.size() > 1) stack.emplace_back(kids[1], e.pred2);
  }
}

std::vector<Cycle> edges_to_cycles(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<Vertex> done;
  std::vector<Cycle> out;
  for (auto& [start, nb0] : adj) {
    if (done.count(start)) continue;
    Cycle c{start};
    done.insert(start);
    Vertex prev = -1, cur = start;
    while (true) {
      auto& nb = adj[cur];
      std::sort(nb.begin(), nb.end());
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      if (next == start) break;
      c.push_back(next);
      done.insert(next);
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(c));
  }
  return out;
}

void fill_stats(SolverStats& st, const std::vector<Table>& tables, const Ctx& ctx) {
  st.width_D = ctx.f->source_td->width();
  st.maxbag_Dprime = ctx.f->max_bag_size();
  st.states_per_node.clear();
  st.states_per_node.reserve(tables.size());
  for (const auto& t : tables) {
    st.states_per_node.push_back(static_cast<long long>(t.entries.size()));
    st.max_states = std::max(st.max_states, static_cast<long long>(t.entries.size()));
  }
  long long cmax = 0;
  for (long long c : ctx.cap)
    if (c != LLONG_MAX) cmax = std::max(cmax, c);
  st.cap_max = static_cast<int>(cmax);
}

}  // namespace

// ---------------------------------------------------------------------------
// Early exits
// ---------------------------------------------------------------------------

std::optional<SolveResult> check_early_exit(const MapGraph& m, Problem p, int k) {
  int best = -1, best_size = -1;
  for (int s = 0; s < m.num_specials(); ++s) {
    int size = static_cast<int>(m.special_cliques[static_cast<std::size_t>(s)].size());
    if (size > best_size) {
      best_size = size;
      best = s;
    }
  }
  if (best < 0) return std::nullopt;
  const auto& clique = m.special_cliques[static_cast<std::size_t>(best)];
  SolveResult r;
  r.stats.early_exit = "clique";
  switch (p) {
    case Problem::FeedbackVertexSet:
      if (best_size >= k + 3) {
        r.decision = false;
        r.vertex_set.assign(clique.begin(), clique.begin() + (k + 3));
        return r;
      }
      return std::nullopt;
    case Problem::LongestCycle: {
      const int len = std::max(k, 3);
      if (best_size >= k && best_size >= 3) {
        r.decision = true;
        r.cycle.assign(clique.begin(), clique.begin() + len);
        return r;
      }
      return std::nullopt;
    }
    case Problem::CyclePacking:
      if (k >= 1 && best_size >= 3 * k) {
        r.decision = true;
        for (int i = 0; i < k; ++i)
          r.cycles.push_back({clique[static_cast<std::size_t>(3 * i)], clique[static_cast<std::size_t>(3 * i + 1)],
                              clique[static_cast<std::size_t>(3 * i + 2)]});
        return r;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Public solvers
// ---------------------------------------------------------------------------

namespace {

SolveResult run_deletion(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts,
                         DelMode mode) {
  const auto start = Clock::now();
  SolveResult r;
  const Problem prob = mode == DelMode::VertexCover ? Problem::VertexCover : Problem::FeedbackVertexSet;
  if (opts.k && opts.use_early_exit) {
    if (auto exit = check_early_exit(m, prob, *opts.k)) {
      exit->stats.millis = elapsed_ms(start);
      exit->stats.width_D = f.source_td->width();
      exit->stats.maxbag_Dprime = f.max_bag_size();
      return *exit;
    }
  }
  const long long limit = opts.k ? std::min<long long>(*opts.k, m.num_nations()) : m.num_nations();
  Ctx ctx = build_ctx(m, f, CapKind::None, std::nullopt);
  DeletionEngine eng(ctx, mode, limit);
  TreeEval eval;
  eval.children = &f.child_list;
  eval.compute = [&](int t) { eng.compute(t); };
  eval.run(f.root, f.postorder, opts.threads);

  const Table& root = eng.tables[static_cast<std::size_t>(f.root)];
  fill_stats(r.stats, eng.tables, ctx);
  if (!root.entries.empty()) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(root.entries.size()); ++i)
      if (root.entries[static_cast<std::size_t>(i)].value < root.entries[static_cast<std::size_t>(best)].value)
        best = i;
    r.optimum = static_cast<int>(root.entries[static_cast<std::size_t>(best)].value);
    std::set<Vertex> sol;
    walk_provenance(eng.tables, f, f.root, best, [&](const Entry& e) {
      if (e.chosen >= 0) sol.insert(e.chosen);
    });
    r.vertex_set.assign(sol.begin(), sol.end());
    r.decision = !opts.k || *r.optimum <= *opts.k;
  } else {
    r.decision = false;  // nothing within the k budget
  }
  r.stats.millis = elapsed_ms(start);
  return r;
}

struct CycleRun {
  std::optional<int> best;  // longest cycle length (edges); nullopt if none
  std::vector<Edge> edges;  // edges of the winner
  SolverStats stats;
};

CycleRun run_cycle_engine(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts,
                          CycMode mode, bool augmented = false, Vertex au = -1, Vertex av = -1) {
  const CapKind kind = mode == CycMode::LongestCycle ? CapKind::PerNodeCycle : CapKind::Packing;
  Ctx ctx = build_ctx(m, f, kind, opts.cap_override, augmented, au, av);
  CycleEngine eng(ctx, mode);
  TreeEval eval;
  eval.children = &f.child_list;
  eval.compute = [&](int t) { eng.compute(t); };
  eval.run(f.root, f.postorder, opts.threads);

  CycleRun out;
  fill_stats(out.stats, eng.tables, ctx);
  const Table& root = eng.tables[static_cast<std::size_t>(f.root)];
  int best = -1;
  for (int i = 0; i < static_cast<int>(root.entries.size()); ++i) {
    const Entry& e = root.entries[static_cast<std::size_t>(i)];
    if (mode == CycMode::LongestCycle && !eng.closed(e.key)) continue;
    if (best == -1 || e.value > root.entries[static_cast<std::size_t>(best)].value) best = i;
  }
  if (best >= 0) {
    out.best = static_cast<int>(root.entries[static_cast<std::size_t>(best)].value);
    walk_provenance(eng.tables, f, f.root, best, [&](const Entry& e) {
      out.edges.insert(out.edges.end(), e.added.begin(), e.added.end());
    });
  }
  return out;
}

}  // namespace

SolveResult solve_vertex_cover(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  return run_deletion(m, f, opts, DelMode::VertexCover);
}

SolveResult solve_fvs(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  return run_deletion(m, f, opts, DelMode::FeedbackVertexSet);
}

SolveResult solve_longest_cycle(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  const auto start = Clock::now();
  if (opts.k && opts.use_early_exit) {
    if (auto exit = check_early_exit(m, Problem::LongestCycle, *opts.k)) {
      exit->stats.millis = elapsed_ms(start);
      exit->stats.width_D = f.source_td->width();
      exit->stats.maxbag_Dprime = f.max_bag_size();
      return *exit;
    }
  }
  SolveResult r;
  CycleRun run = run_cycle_engine(m, f, opts, CycMode::LongestCycle);
  r.stats = run.stats;
  r.optimum = run.best.value_or(0);
  if (run.best) r.cycle = edges_to_cycles(run.edges).at(0);
  r.decision = opts.k ? (*r.optimum >= *opts.k && *r.optimum >= 3) : (*r.optimum >= 3);
  r.stats.millis = elapsed_ms(start);
  return r;
}

SolveResult solve_longest_path(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  const auto start = Clock::now();
  SolveResult r;
  const int n = m.num_nations();
  if (n == 0) {
    r.optimum = 0;
    r.decision = opts.k ? *opts.k <= 0 : true;
    return r;
  }
  // paths on one or two vertices, then the cycle reduction for three or more
  int best = 1;
  Cycle best_path{0};
  if (m.graph.num_edges() > 0) {
    auto e = m.graph.edges().front();
    best = 2;
    best_path = {e.first, e.second};
  }
  SolverStats agg;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      CycleRun run = run_cycle_engine(m, f, opts, CycMode::LongestCycle, true, u, v);
      agg.width_D = run.stats.width_D;
      agg.maxbag_Dprime = run.stats.maxbag_Dprime;
      agg.cap_max = std::max(agg.cap_max, run.stats.cap_max);
      agg.max_states = std::max(agg.max_states, run.stats.max_states);
      if (!run.best || *run.best < 3 || *run.best <= best) continue;
      // turn the cycle into a path: split at the virtual edge if it is used
      Cycle cyc = edges_to_cycles(run.edges).at(0);
      const std::size_t len = cyc.size();
      std::size_t cut = len - 1;  // default: between last and first
      if (!m.graph.has_edge(u, v)) {
        for (std::size_t i = 0; i < len; ++i) {
          Vertex a = cyc[i], b = cyc[(i + 1) % len];
          if ((a == u && b == v) || (a == v && b == u)) {
            cut = i;
            break;
          }
        }
      }
      Cycle path;
      for (std::size_t i = 1; i <= len; ++i) path.push_back(cyc[(cut + i) % len]);
      best = static_cast<int>(*run.best);
      best_path = std::move(path);
    }
  }
  r.optimum = best;
  r.cycle = best_path;
  r.decision = opts.k ? best >= *opts.k : true;
  r.stats = agg;
  r.stats.millis = elapsed_ms(start);
  return r;
}

SolveResult solve_cycle_packing(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  const auto start = Clock::now();
  if (opts.k && opts.use_early_exit) {
    if (auto exit = check_early_exit(m, Problem::CyclePacking, *opts.k)) {
      exit->stats.millis = elapsed_ms(start);
      exit->stats.width_D = f.source_td->width();
      exit->stats.maxbag_Dprime = f.max_bag_size();
      return *exit;
    }
  }
  SolveResult r;
  CycleRun run = run_cycle_engine(m, f, opts, CycMode::CyclePacking);
  r.stats = run.stats;
  r.optimum = run.best.value_or(0);
  if (!run.edges.empty()) r.cycles = edges_to_cycles(run.edges);
  r.decision = opts.k ? *r.optimum >= *opts.k : *r.optimum > 0;
  r.stats.millis = elapsed_ms(start);
  return r;
}

SolveResult solve(Problem p, const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts) {
  switch (p) {
    case Problem::VertexCover: return solve_vertex_cover(m, f, opts);
    case Problem::FeedbackVertexSet: return solve_fvs(m, f, opts);
    case Problem::LongestCycle: return solve_longest_cycle(m, f, opts);
    case Problem::LongestPath: return solve_longest_path(m, f, opts);
    case Problem::CyclePacking: return solve_cycle_packing(m, f, opts);
  }
  throw std::logic_error("unknown problem");
}

// ---------------------------------------------------------------------------
// Certificate validation and formatting
// ---------------------------------------------------------------------------

namespace {

bool acyclic_after_removal(const Graph& g, const std::vector<Vertex>& removed) {
  std::set<Vertex> rem(removed.begin(), removed.end());
  std::vector<int> uf(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (rem.count(u) || rem.count(v)) continue;
    int a = find(u), b = find(v);
    if (a == b) return false;
    uf[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_simple_path(const Cycle& p, const Graph& g) {
  if (p.empty()) return false;
  std::set<Vertex> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

}  // namespace

bool validate_certificate(const MapGraph& m, Problem p, const SolveResult& r) {
  const Graph& g = m.graph;
  switch (p) {
    case Problem::VertexCover: {
      std::set<Vertex> cover(r.vertex_set.begin(), r.vertex_set.end());
      for (auto [u, v] : g.edges())
        if (!cover.count(u) && !cover.count(v)) return false;
      if (r.optimum && static_cast<int>(cover.size()) != *r.optimum) return false;
      return true;
    }
    case Problem::FeedbackVertexSet: {
      if (!r.decision && !r.optimum) {
        // early NO: the witness is a clique
        for (std::size_t i = 0; i < r.vertex_set.size(); ++i)
          for (std::size_t j = i + 1; j < r.vertex_set.size(); ++j)
            if (!g.has_edge(r.vertex_set[i], r.vertex_set[j])) return false;
        return true;
      }
      if (!acyclic_after_removal(g, r.vertex_set)) return false;
      if (r.optimum && static_cast<int>(r.vertex_set.size()) != *r.optimum) return false;
      return true;
    }
    case Problem::LongestCycle: {
      if (r.optimum && *r.optimum == 0) return r.cycle.empty();
      if (r.cycle.empty()) return !r.decision;
      if (!is_simple_cycle(r.cycle, g)) return false;
      if (r.optimum && static_cast<int>(r.cycle.size()) != *r.optimum) return false;
      return true;
    }
    case Problem::LongestPath: {
      if (r.optimum && *r.optimum == 0) return r.cycle.empty();
      if (!is_simple_path(r.cycle, g)) return false;
      if (r.optimum && static_cast<int>(r.cycle.size()) != *r.optimum) return false;
      return true;
    }
    case Problem::CyclePacking: {
      std::set<Vertex> used;
      for (const auto& c : r.cycles) {
        if (!is_simple_cycle(c, g)) return false;
        for (Vertex v : c)
          if (!used.insert(v).second) return false;
      }
      if (r.optimum && static_cast<int>(r.cycles.size()) != *r.optimum) return false;
      if (r.decision && !r.optimum && r.cycles.empty()) return false;
      return true;
    }
  }
  return false;
}

std::string format_certificate(Problem p, const SolveResult& r, std::optional<int> k) {
  std::string out = "SOLUTION " + problem_name(p) + " k=";
  out += k ? std::to_string(*k) : "-";
  out += " value=";
  if (r.optimum)
    out += std::to_string(*r.optimum);
  else if (p == Problem::LongestCycle && r.decision)
    out += std::to_string(r.cycle.size());
  else if (p == Problem::CyclePacking && r.decision)
    out += std::to_string(r.cycles.size());
  else
    out += "-1";
  out += '\n';
  auto line = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(vs[i] + 1);
    }
    out += '\n';
  };
  switch (p) {
    case Problem::VertexCover:
    case Problem::FeedbackVertexSet:
      line(r.vertex_set);
      break;
    case Problem::LongestCycle:
    case Problem::LongestPath:
      line(r.cycle);
      break;
    case Problem::CyclePacking:
      for (const auto& c : r.cycles) line(c);
      break;
  }
  return out;
}

}  // namespace mapkit
