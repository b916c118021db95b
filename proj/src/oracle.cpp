#include "mapkit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace mapkit {

namespace {

bool mask_acyclic(const Graph& g, std::uint32_t kept) {
  std::vector<int> uf(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (!((kept >> u) & 1) || !((kept >> v) & 1)) continue;
    int a = find(u), b = find(v);
    if (a == b) return false;
    uf[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool mask_covers(const Graph& g, std::uint32_t cover) {
  for (auto [u, v] : g.edges())
    if (!((cover >> u) & 1) && !((cover >> v) & 1)) return false;
  return true;
}

std::vector<Vertex> mask_to_set(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1) out.push_back(v);
  return out;
}

OracleResult solve_subset(const MapGraph& m, bool vertex_cover) {
  const int n = m.num_nations();
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  std::uint32_t best_mask = all;
  int best = n;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = vertex_cover ? mask_covers(m.graph, mask) : mask_acyclic(m.graph, all & ~mask);
    if (ok) {
      best = size;
      best_mask = mask;
    }
    if (mask == all) break;
  }
  OracleResult r;
  r.optimum = best;
  r.vertex_set = mask_to_set(best_mask, n);
  return r;
}

// Longest cycle / path by DFS backtracking with a reachable-count bound.
struct LongestSearch {
  const Graph& g;
  bool cycle_mode;
  int n;
  std::vector<char> on_path;
  std::vector<Vertex> path;
  int best = 0;
  std::vector<Vertex> best_seq;

  LongestSearch(const Graph& g_, bool cyc) : g(g_), cycle_mode(cyc), n(g_.num_vertices()) {
    on_path.assign(static_cast<std::size_t>(n), 0);
  }

  void run() {
    for (Vertex s = 0; s < n; ++s) {
      if (best == n) return;
      path = {s};
      on_path.assign(static_cast<std::size_t>(n), 0);
      on_path[static_cast<std::size_t>(s)] = 1;
      if (!cycle_mode && best < 1) {
        best = 1;
        best_seq = path;
      }
      extend(s);
    }
  }

  void extend(Vertex start) {
    if (best == n) return;
    if (!cycle_mode && static_cast<int>(path.size()) > best) {
      best = static_cast<int>(path.size());
      best_seq = path;
    }
    Vertex cur = path.back();
    for (Vertex nxt : g.neighbors(cur)) {
      if (cycle_mode && nxt == start && path.size() >= 3 && static_cast<int>(path.size()) > best) {
        best = static_cast<int>(path.size());
        best_seq = path;
      }
      if (on_path[static_cast<std::size_t>(nxt)]) continue;
      // cycles are rooted at their smallest vertex; paths must try every root
      if (cycle_mode && nxt < start) continue;
      if (static_cast<int>(path.size()) + reachable_bound(nxt) <= best) continue;
      on_path[static_cast<std::size_t>(nxt)] = 1;
      path.push_back(nxt);
      extend(start);
      path.pop_back();
      on_path[static_cast<std::size_t>(nxt)] = 0;
    }
  }

  int reachable_bound(Vertex from) {
    // vertices reachable without touching the current path
    std::vector<char> seen = on_path;
    std::vector<Vertex> stack{from};
    if (seen[static_cast<std::size_t>(from)]) return 0;
    seen[static_cast<std::size_t>(from)] = 1;
    int count = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    return count;
  }
};

// Maximum number of vertex-disjoint cycles, memoized on the remaining set.
struct PackingSearch {
  const Graph& g;
  int n;
  std::map<std::uint32_t, int> memo;
  std::map<std::uint32_t, Cycle> memo_cycle;  // a cycle used by the optimum, if any

  explicit PackingSearch(const Graph& g_) : g(g_), n(g_.num_vertices()) {}

  int best(std::uint32_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int low = -1;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) {
        low = v;
        break;
      }
    if (low < 0) return 0;
    // branch 1: lowest remaining vertex unused
    int result = best(mask & ~(1u << low));
    Cycle used;
    // branch 2: a cycle through the lowest vertex
    std::vector<Vertex> path{low};
    std::uint32_t on = 1u << low;
    std::function<void(Vertex)> dfs = [&](Vertex cur) {
      for (Vertex nxt : g.neighbors(cur)) {
        if (!((mask >> nxt) & 1)) continue;
        if (nxt == low && path.size() >= 3) {
          std::uint32_t cyc = on;
          int cand = 1 + best(mask & ~cyc);
          if (cand > result) {
            result = cand;
            used = path;
          }
          continue;
        }
        if ((on >> nxt) & 1 || nxt < low) continue;
        on |= 1u << nxt;
        path.push_back(nxt);
        dfs(nxt);
        path.pop_back();
        on &= ~(1u << nxt);
      }
    };
    dfs(low);
    memo[mask] = result;
    memo_cycle[mask] = used;
    return result;
  }

  std::vector<Cycle> reconstruct(std::uint32_t mask) {
    std::vector<Cycle> out;
    while (mask) {
      best(mask);
      const Cycle& c = memo_cycle[mask];
      int low = __builtin_ctz(mask);
      if (c.empty()) {
        mask &= ~(1u << low);
        continue;
      }
      out.push_back(c);
      for (Vertex v : c) mask &= ~(1u << v);
    }
    return out;
  }
};

}  // namespace

OracleResult brute_force_solve(const MapGraph& m, Problem p) {
  const int n = m.num_nations();
  const bool subset_problem = p == Problem::VertexCover || p == Problem::FeedbackVertexSet;
  if (subset_problem && n > 18)
    throw std::invalid_argument("brute_force_solve: VC/FVS oracle guarded to |V(G)| <= 18");
  if (!subset_problem && n > 14)
    throw std::invalid_argument("brute_force_solve: cycle oracles guarded to |V(G)| <= 14");

  OracleResult r;
  switch (p) {
    case Problem::VertexCover:
      return solve_subset(m, true);
    case Problem::FeedbackVertexSet:
      return solve_subset(m, false);
    case Problem::LongestCycle: {
      LongestSearch s(m.graph, true);
      s.run();
      r.optimum = s.best;
      r.cycle = s.best_seq;
      return r;
    }
    case Problem::LongestPath: {
      LongestSearch s(m.graph, false);
      s.run();
      r.optimum = n == 0 ? 0 : std::max(s.best, 1);
      r.cycle = s.best_seq;
      return r;
    }
    case Problem::CyclePacking: {
      PackingSearch s(m.graph);
      const std::uint32_t all = n == 0 ? 0 : ((n == 32 ? ~0u : (1u << n) - 1));
      r.optimum = n == 0 ? 0 : s.best(all);
      r.cycles = s.reconstruct(all);
      return r;
    }
  }
  throw std::logic_error("unknown problem");
}

}  // namespace mapkit
