#include "mapkit/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "mapkit/rng.hpp"

namespace mapkit {

namespace {

// Builds a decomposition from an elimination order: the bag of v is {v} plus
// its neighborhood at elimination time; the bag's parent is the bag of the
// first of those neighbors eliminated later.
TreeDecomposition from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  if (n == 0) {
    TreeDecomposition td;
    td.parent = {-1};
    td.bags = {{}};
    td.root = 0;
    return td;
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[static_cast<std::size_t>(u)].insert(v);

  TreeDecomposition td;
  td.bags.assign(static_cast<std::size_t>(n), {});
  td.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> bag_of(static_cast<std::size_t>(n));  // vertex -> bag index (= elimination step)
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    bag_of[static_cast<std::size_t>(v)] = i;
    std::vector<Vertex> bag(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[static_cast<std::size_t>(i)] = std::move(bag);
    // fill the neighborhood into a clique, then remove v
    std::vector<Vertex> nbrs(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        adj[static_cast<std::size_t>(nbrs[a])].insert(nbrs[b]);
        adj[static_cast<std::size_t>(nbrs[b])].insert(nbrs[a]);
      }
    for (Vertex u : nbrs) adj[static_cast<std::size_t>(u)].erase(v);
    adj[static_cast<std::size_t>(v)].clear();
    for (Vertex u : nbrs) adj[static_cast<std::size_t>(v)].insert(u);  // keep for parent lookup
  }
  // Parents: earliest later-eliminated neighbor; isolated tails chain together
  // so the result stays one tree even on disconnected graphs.
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    int best = -1;
    for (Vertex u : adj[static_cast<std::size_t>(v)])
      if (position[static_cast<std::size_t>(u)] > i &&
          (best == -1 || position[static_cast<std::size_t>(u)] < best))
        best = position[static_cast<std::size_t>(u)];
    if (best >= 0)
      td.parent[static_cast<std::size_t>(i)] = best;
    else if (i + 1 < n)
      td.parent[static_cast<std::size_t>(i)] = i + 1;
  }
  td.root = n - 1;
  // Convention: the root is node 0. Swap ids 0 and n-1.
  if (td.root != 0) {
    const int r = td.root;
    auto remap = [&](int x) { return x == r ? 0 : (x == 0 ? r : x); };
    std::swap(td.bags[0], td.bags[static_cast<std::size_t>(r)]);
    std::swap(td.parent[0], td.parent[static_cast<std::size_t>(r)]);
    for (auto& p : td.parent)
      if (p >= 0) p = remap(p);
    td.root = 0;
  }
  return td;
}

}  // namespace

TreeDecomposition heuristic_decompose(const Graph& g, std::uint64_t seed) {
  const int n = g.num_vertices();
  Rng rng(seed);
  std::vector<int> shuffle_key(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shuffle_key[static_cast<std::size_t>(i)] = i;
  rng.shuffle(shuffle_key);

  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[static_cast<std::size_t>(u)].insert(v);
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long long best_deg = 0, best_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      long long deg = static_cast<long long>(adj[static_cast<std::size_t>(v)].size());
      if (best != -1 && deg > best_deg) continue;
      // fill-in: non-adjacent neighbor pairs
      long long fill = 0;
      std::vector<Vertex> nb(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
          if (!adj[static_cast<std::size_t>(nb[a])].count(nb[b])) ++fill;
      auto key = std::make_tuple(deg, fill, shuffle_key[static_cast<std::size_t>(v)], v);
      auto best_key = std::make_tuple(best_deg, best_fill,
                                      best == -1 ? 0 : shuffle_key[static_cast<std::size_t>(best)], best);
      if (best == -1 || key < best_key) {
        best = v;
        best_deg = deg;
        best_fill = fill;
      }
    }
    order.push_back(best);
    gone[static_cast<std::size_t>(best)] = 1;
    std::vector<Vertex> nb(adj[static_cast<std::size_t>(best)].begin(), adj[static_cast<std::size_t>(best)].end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[static_cast<std::size_t>(nb[a])].insert(nb[b]);
        adj[static_cast<std::size_t>(nb[b])].insert(nb[a]);
      }
    for (Vertex u : nb) adj[static_cast<std::size_t>(u)].erase(best);
  }
  return from_elimination_order(g, order);
}

std::optional<TreeDecomposition> exact_decompose_small(const Graph& g, int width_budget) {
  const int n = g.num_vertices();
  if (n > 25) throw std::invalid_argument("exact_decompose_small is guarded to |V| <= 25");
  if (n == 0) return from_elimination_order(g, {});

  // Q(R, v): neighbors of v among R after eliminating V \ R, i.e. vertices of
  // R reachable from v through eliminated vertices only.
  auto reach = [&](std::uint32_t remaining, Vertex v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, result = 0;
    while (frontier) {
      int u = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      for (Vertex w : g.neighbors(u)) {
        std::uint32_t bit = 1u << w;
        if (seen & bit) continue;
        seen |= bit;
        if (remaining & bit)
          result |= bit;
        else
          frontier |= bit;
      }
    }
    return result;
  };

  constexpr int kInfeasible = 127;
  std::unordered_map<std::uint32_t, std::int8_t> memo;
  std::function<int(std::uint32_t)> solve = [&](std::uint32_t remaining) -> int {
    if (remaining == 0) return -1;  // width of an empty suffix
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    int best = kInfeasible;
    for (std::uint32_t bits = remaining; bits;) {
      int v = __builtin_ctz(bits);
      bits &= bits - 1;
      int q = __builtin_popcount(reach(remaining & ~(1u << v), v));
      if (q > width_budget) continue;
      int rest = solve(remaining & ~(1u << v));
      best = std::min(best, std::max(q, rest));
    }
    memo[remaining] = static_cast<std::int8_t>(best);
    return best;
  };

  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  if (solve(all) > width_budget) return std::nullopt;

  // Replay the optimal choices to recover an elimination order.
  std::vector<Vertex> order;
  std::uint32_t remaining = all;
  while (remaining) {
    int target = solve(remaining);
    for (std::uint32_t bits = remaining; bits;) {
      int v = __builtin_ctz(bits);
      bits &= bits - 1;
      int q = __builtin_popcount(reach(remaining & ~(1u << v), v));
      if (q > width_budget) continue;
      if (std::max(q, solve(remaining & ~(1u << v))) == target) {
        order.push_back(v);
        remaining &= ~(1u << v);
        break;
      }
    }
  }
  return from_elimination_order(g, order);
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition out;

  int add_node(std::vector<Vertex> bag, NiceNodeLabel label, int child0 = -1, int child1 = -1) {
    int id = out.td.num_nodes();
    out.td.bags.push_back(std::move(bag));
    out.td.parent.push_back(-1);
    out.labels.push_back(label);
    if (child0 >= 0) out.td.parent[static_cast<std::size_t>(child0)] = id;
    if (child1 >= 0) out.td.parent[static_cast<std::size_t>(child1)] = id;
    return id;
  }

  // Chain of introduces building `bag` from an empty leaf, ascending.
  int leaf_chain(const std::vector<Vertex>& bag) {
    int cur = add_node({}, {NiceLabel::Leaf, -1});
    std::vector<Vertex> acc;
    for (Vertex v : bag) {
      acc.push_back(v);
      cur = add_node(acc, {NiceLabel::IntroduceV, v}, cur);
    }
    return cur;
  }

  // Morphs the subtree top (with bag `from`) into bag `to`: forgets of
  // from\to ascending, then introduces of to\from ascending.
  int morph(int top, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> cur = from;
    std::vector<Vertex> drop, add;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(add));
    for (Vertex v : drop) {
      cur.erase(std::lower_bound(cur.begin(), cur.end(), v));
      top = add_node(cur, {NiceLabel::ForgetV, v}, top);
    }
    for (Vertex v : add) {
      cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
      top = add_node(cur, {NiceLabel::IntroduceV, v}, top);
    }
    return top;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  NiceBuilder b;
  auto ch = td.children();

  // Returns the id of the produced subtree whose top bag equals td.bags[t].
  std::function<int(int)> build = [&](int t) -> int {
    const auto& bag = td.bags[static_cast<std::size_t>(t)];
    const auto& kids = ch[static_cast<std::size_t>(t)];
    if (kids.empty()) return b.leaf_chain(bag);
    std::vector<int> tops;
    tops.reserve(kids.size());
    for (int c : kids)
      tops.push_back(b.morph(build(c), td.bags[static_cast<std::size_t>(c)], bag));
    int cur = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
      cur = b.add_node(bag, {NiceLabel::Join, -1}, cur, tops[static_cast<std::size_t>(i)]);
    return cur;
  };

  int top = build(td.root);
  // Root chain: forget everything, ascending, ending at an empty root bag.
  top = b.morph(top, td.bags[static_cast<std::size_t>(td.root)], {});
  if (!b.out.td.bags[static_cast<std::size_t>(top)].empty())
    throw std::logic_error("make_nice: root bag not empty");
  b.out.td.root = top;
  return b.out;
}

}  // namespace mapkit
