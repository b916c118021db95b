#pragma once

// Shared fixtures and small independent oracles for the test suites.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mapkit/crossing.hpp"
#include "mapkit/decompose.hpp"
#include "mapkit/few_cliques.hpp"
#include "mapkit/generate.hpp"
#include "mapkit/map_graph.hpp"
#include "mapkit/rng.hpp"
#include "mapkit/witness.hpp"

namespace testutil {

inline mapkit::BipartiteWitness star_witness(int leaves) {
  return mapkit::generate({mapkit::Family::Star, {static_cast<double>(leaves)}, 0});
}

// The running example: star witness on four nations, one special, with the
// nice decomposition built per-leaf and joined above (width 1).
struct StarFixture {
  mapkit::BipartiteWitness witness;
  mapkit::MapGraph map;
  mapkit::NiceTreeDecomposition nice;
  std::vector<int> forget_nation_nodes;  // the four forget(v_i) nodes
  int forget_special_node = -1;
};

class NtdBuilder {
 public:
  int add(std::vector<int> bag, mapkit::NiceLabel kind, int vertex, std::vector<int> children) {
    int id = static_cast<int>(ntd.td.bags.size());
    std::sort(bag.begin(), bag.end());
    ntd.td.bags.push_back(std::move(bag));
    ntd.td.parent.push_back(-1);
    ntd.labels.push_back({kind, vertex});
    for (int c : children) ntd.td.parent[static_cast<std::size_t>(c)] = id;
    return id;
  }
  mapkit::NiceTreeDecomposition finish(int root) {
    ntd.td.root = root;
    return ntd;
  }

 private:
  mapkit::NiceTreeDecomposition ntd;
};

inline StarFixture star_fixture() {
  StarFixture fx;
  fx.witness = star_witness(4);
  fx.map = mapkit::half_square(fx.witness);
  NtdBuilder b;
  const int r = 4;
  std::vector<int> branch_tops;
  for (int v = 0; v < 4; ++v) {
    int leaf = b.add({}, mapkit::NiceLabel::Leaf, -1, {});
    int iv = b.add({v}, mapkit::NiceLabel::IntroduceV, v, {leaf});
    int ir = b.add({v, r}, mapkit::NiceLabel::IntroduceV, r, {iv});
    int fv = b.add({r}, mapkit::NiceLabel::ForgetV, v, {ir});
    fx.forget_nation_nodes.push_back(fv);
    branch_tops.push_back(fv);
  }
  int j01 = b.add({r}, mapkit::NiceLabel::Join, -1, {branch_tops[0], branch_tops[1]});
  int j23 = b.add({r}, mapkit::NiceLabel::Join, -1, {branch_tops[2], branch_tops[3]});
  int top = b.add({r}, mapkit::NiceLabel::Join, -1, {j01, j23});
  fx.forget_special_node = b.add({}, mapkit::NiceLabel::ForgetV, r, {top});
  fx.nice = b.finish(fx.forget_special_node);
  return fx;
}

// All-pairs distance-2 oracle over the witness: BFS from every nation.
inline mapkit::Graph half_square_bfs_oracle(const mapkit::BipartiteWitness& w) {
  mapkit::Graph g(w.nation_count);
  for (int u = 0; u < w.nation_count; ++u) {
    std::set<int> dist2;
    for (int s : w.graph.neighbors(u))
      for (int v : w.graph.neighbors(s))
        if (v != u) dist2.insert(v);
    for (int v : dist2)
      if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

// Exhaustive rotation-system planarity oracle for tiny graphs: a graph is
// planar iff some rotation system of each component traces E - V + 2 faces.
inline bool planar_by_rotation_systems(const mapkit::Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    int edges = 0;
    for (int v : comp) edges += g.degree(v);
    edges /= 2;
    if (edges < 9) continue;  // fewer than 9 edges is always planar
    const int target_faces = edges - static_cast<int>(comp.size()) + 2;

    // rotation[v] is a permutation of neighbors; enumerate cyclic orders by
    // fixing the first neighbor and permuting the rest.
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
    for (int v : comp) rotation[static_cast<std::size_t>(v)] = g.neighbors(v);
    std::function<bool(std::size_t)> enumerate = [&](std::size_t idx) -> bool {
      if (idx == comp.size()) {
        // trace faces: successor of dart (u,v) is (v,w) with w after u at v
        std::set<std::pair<int, int>> visited;
        int faces = 0;
        for (int v : comp)
          for (int u : g.neighbors(v)) {
            if (visited.count({v, u})) continue;
            ++faces;
            int a = v, bdir = u;
            while (!visited.count({a, bdir})) {
              visited.insert({a, bdir});
              const auto& rot = rotation[static_cast<std::size_t>(bdir)];
              auto it = std::find(rot.begin(), rot.end(), a);
              int next = rot[static_cast<std::size_t>((it - rot.begin() + 1) % static_cast<long>(rot.size()))];
              a = bdir;
              bdir = next;
            }
          }
        return faces == target_faces;
      }
      int v = comp[idx];
      auto& rot = rotation[static_cast<std::size_t>(v)];
      if (rot.size() <= 2) return enumerate(idx + 1);
      std::sort(rot.begin() + 1, rot.end());
      do {
        if (enumerate(idx + 1)) return true;
      } while (std::next_permutation(rot.begin() + 1, rot.end()));
      return false;
    };
    if (!enumerate(0)) return false;
  }
  return true;
}

// A seeded witness useful across suites: mixes the generator families.
inline mapkit::BipartiteWitness random_witness(std::uint64_t seed, int max_b_vertices = 30) {
  mapkit::Rng rng(seed ^ 0xabcdef12345ULL);
  for (;;) {
    mapkit::GenSpec spec;
    switch (rng.below(4)) {
      case 0:
        spec = {mapkit::Family::Star, {static_cast<double>(rng.range(1, 7))}, rng.next_u64()};
        break;
      case 1:
        spec = {mapkit::Family::Grid, {static_cast<double>(rng.range(1, 3)), static_cast<double>(rng.range(2, 4))},
                rng.next_u64()};
        break;
      case 2:
        spec = {mapkit::Family::RandomIncidence,
                {static_cast<double>(rng.range(3, 9)), 0.25 + 0.5 * (rng.below(100) / 100.0)},
                rng.next_u64()};
        break;
      default:
        spec = {mapkit::Family::RandomPlanarBipartite, {static_cast<double>(rng.range(4, 14))}, rng.next_u64()};
        break;
    }
    auto w = mapkit::generate(spec);
    if (w.num_vertices() <= max_b_vertices && w.nation_count >= 1) return w;
  }
}

struct Instance {
  mapkit::BipartiteWitness witness;
  mapkit::MapGraph map;
  mapkit::NiceTreeDecomposition nice;
  mapkit::FewCliquesDecomposition fcd;
};

inline Instance make_instance(const mapkit::BipartiteWitness& w, std::uint64_t seed) {
  Instance inst;
  inst.witness = w;
  inst.map = mapkit::half_square(inst.witness);
  inst.nice = mapkit::make_nice(mapkit::heuristic_decompose(inst.witness.graph, seed));
  inst.fcd = mapkit::derive_fcd(inst.nice, inst.map, inst.witness);
  return inst;
}

inline Instance random_instance(std::uint64_t seed, int max_b_vertices = 30) {
  return make_instance(random_witness(seed, max_b_vertices), seed);
}

struct RandomPathSystem {
  mapkit::PathSystem q;
  std::vector<int> order;
};

// Random disjoint paths (singletons allowed) with a shuffled endpoint order.
inline RandomPathSystem random_path_system(mapkit::Rng& rng, int min_endpoints = 3, int max_endpoints = 12) {
  const int ell = rng.range(min_endpoints, max_endpoints);
  int remaining = ell;
  int singletons = 0, paths = 0;
  while (remaining > 0) {
    if (remaining >= 2 && rng.chance(0.55)) {
      ++paths;
      remaining -= 2;
    } else {
      ++singletons;
      remaining -= 1;
    }
  }
  std::vector<int> vertices;
  std::vector<mapkit::Edge> edges;
  std::vector<int> endpoints;
  int next = 0;
  for (int i = 0; i < singletons; ++i) {
    vertices.push_back(next);
    endpoints.push_back(next);
    ++next;
  }
  for (int i = 0; i < paths; ++i) {
    int len = rng.range(1, 4);
    int first = next;
    for (int j = 0; j <= len; ++j) vertices.push_back(next++);
    for (int j = first; j < next - 1; ++j) edges.push_back({j, j + 1});
    endpoints.push_back(first);
    endpoints.push_back(next - 1);
  }
  rng.shuffle(endpoints);
  return {mapkit::PathSystem(vertices, edges), endpoints};
}

// Randomized DFS cycle search, for harvesting test cycles.
inline std::optional<std::vector<int>> find_some_cycle(const mapkit::Graph& g, mapkit::Rng& rng) {
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  for (int attempt = 0; attempt < 4 * n + 8; ++attempt) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> path{start};
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    on[static_cast<std::size_t>(start)] = 1;
    for (int steps = 0; steps < 4 * n; ++steps) {
      auto nbrs = g.neighbors(path.back());
      rng.shuffle(nbrs);
      bool moved = false;
      for (int w : nbrs) {
        if (w == start && path.size() >= 3 && rng.chance(0.5)) return path;
        if (!on[static_cast<std::size_t>(w)]) {
          on[static_cast<std::size_t>(w)] = 1;
          path.push_back(w);
          moved = true;
          break;
        }
      }
      if (!moved) {
        for (int w : nbrs)
          if (w == start && path.size() >= 3) return path;
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace testutil
