#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mapkit/few_cliques.hpp"
#include "mapkit/graph.hpp"

namespace mapkit {

using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// A disjoint union of paths (components of length 0 allowed): max degree 2,
// no cycles. endpoint_list() is the set of vertices of degree <= 1.
class PathSystem {
 public:
  PathSystem() = default;
  PathSystem(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Vertex> endpoint_list() const;
  int degree(Vertex v) const;
  // other endpoint of the path containing v (v itself for a length-0 path)
  Vertex path_other_end(Vertex v) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;  // indexed by position in vertices_
  std::vector<int> index_of_;             // vertex id -> position, -1 otherwise
  int pos(Vertex v) const;
};

// Completes a path system to a single cycle inside a clique on the listed
// endpoints. The chosen edges cross every prefix cut of `order` at most
// twice, and if order[0] has degree 1 exactly one chosen edge touches it.
std::vector<Edge> complete_paths_to_cycle(const std::vector<Vertex>& order, const PathSystem& q);

// sigma = sigma1 sigma2: clique members in postorder of their fake-introduce
// nodes, then the never-fakely-introduced members in ascending id.
std::vector<Vertex> clique_fake_order(const FewCliquesDecomposition& f, int special_id);

// A simple cycle as its vertex sequence (closing edge implied).
using Cycle = std::vector<Vertex>;

// Rewires the cycle inside one special clique so that at every node at most 4
// of its clique edges leave the closure from the clique's fake vertices.
// Edges outside E(K_s) are untouched and the length is preserved.
Cycle reroute_cycle_in_clique(const Cycle& c, int special_id, const FewCliquesDecomposition& f);

// Applies reroute_cycle_in_clique over all specials in ascending id. The
// result crosses every node at most 2|original(t)| + 4|cliques(t)| times.
Cycle normalize_cycle(const Cycle& c, const FewCliquesDecomposition& f);

struct HostedTriangle {
  std::array<Vertex, 3> vertices;
  int special_id;
};

// Regroups vertex-disjoint in-clique triangles along each clique's fake order
// in consecutive blocks of three; count and vertex set are preserved.
std::vector<HostedTriangle> normalize_triangle_packing(const std::vector<HostedTriangle>& ts,
                                                       const FewCliquesDecomposition& f);

// One representative per set, pairwise distinct. Preconditions: sets nonempty,
// all but at most one of size exactly 2, each element in at most two sets.
std::vector<int> system_of_distinct_representatives(const std::vector<std::vector<int>>& sets);

struct CrossingProfile {
  std::vector<int> per_node;  // edges with one endpoint in bag(t), other outside gamma'(t)
  int max() const {
    int m = 0;
    for (int c : per_node) m = std::max(m, c);
    return m;
  }
};

CrossingProfile crossing_profile(const std::vector<Edge>& edges, const FewCliquesDecomposition& f);

// Cycle helpers shared by the solvers and the test suites.
std::vector<Edge> cycle_edges(const Cycle& c);
bool is_simple_cycle(const Cycle& c, const Graph& g);

}  // namespace mapkit
