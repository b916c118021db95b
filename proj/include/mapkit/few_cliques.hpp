#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapkit/graph.hpp"
#include "mapkit/map_graph.hpp"
#include "mapkit/tree_decomposition.hpp"

namespace mapkit {

enum class FcdLabel { Leaf, Introduce, FakeIntroduce, Forget, ForgetSet, Join, Redundant };

struct FcdNodeLabel {
  FcdLabel kind = FcdLabel::Leaf;
  Vertex vertex = -1;                // Introduce / FakeIntroduce / Forget
  std::vector<Vertex> removed_set;   // ForgetSet: bag(child) \ bag(this)
};

// The labeled few-cliques decomposition of the map graph G, derived from a
// nice tree decomposition of the witness B. Every special vertex in a source
// bag is replaced by the part of its clique already seen below the node, so
// each bag is original(t) plus subcliques of the cliques listed in cliques(t).
struct FewCliquesDecomposition {
  // tree shape shared with the source decomposition
  std::vector<int> parent;
  std::vector<std::vector<int>> child_list;
  int root = 0;

  std::vector<std::vector<Vertex>> bag;        // original(t) union fake(t), sorted
  std::vector<std::vector<Vertex>> original;   // nations of the source bag
  std::vector<std::vector<Vertex>> fake;       // nations injected by special replacement
  std::vector<std::vector<int>> cliques;       // special ids s with s in source bag
  std::vector<FcdNodeLabel> label;
  std::vector<VertexSet> gamma;                // closure over V(G), per node

  // source structures
  const NiceTreeDecomposition* source_td = nullptr;
  const MapGraph* map = nullptr;

  // derived navigation
  std::vector<int> postorder;       // node ids in postorder
  std::vector<int> postorder_index; // node id -> position in postorder
  std::vector<int> depth;

  int num_nodes() const { return static_cast<int>(bag.size()); }
  bool in_gamma(int t, Vertex v) const { return gamma[static_cast<std::size_t>(t)].test(v); }
  bool in_bag(int t, Vertex v) const {
    const auto& b = bag[static_cast<std::size_t>(t)];
    return std::binary_search(b.begin(), b.end(), v);
  }
  int max_bag_size() const {
    int m = 0;
    for (const auto& b : bag) m = std::max(m, static_cast<int>(b.size()));
    return m;
  }
  // true iff a is an ancestor of b or a == b
  bool is_ancestor(int a, int b) const {
    while (b != -1) {
      if (a == b) return true;
      b = parent[static_cast<std::size_t>(b)];
    }
    return false;
  }
};

// Single bottom-up pass computing bags, Original/Fake/Cliques and labels.
// Throws if d is not a valid nice decomposition of m's witness.
FewCliquesDecomposition derive_fcd(const NiceTreeDecomposition& d, const MapGraph& m,
                                   const BipartiteWitness& w);

struct FcdReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the derived structure: decomposition axioms for G, the fake-path
// property, redundant-node and join-node identities, fake-introduce
// uniqueness with its upward-path conditions, bag budget, and exhaustive
// crossing-edge classification at every node.
FcdReport validate_fcd(const FewCliquesDecomposition& f);

struct CrossingClassification {
  std::vector<std::pair<Vertex, Vertex>> incident_original;  // class (A)
  std::vector<std::pair<Vertex, Vertex>> inside_clique;      // class (B)
};

// Partitions the edges with one endpoint in gamma'(t) and the other outside.
// An edge fitting neither class falsifies the two-kinds lemma: hard error.
CrossingClassification crossing_classification(const FewCliquesDecomposition& f, int t);

// Maps every edge of G to the unique node where the DP decides it: the
// deepest co-residency node, ties broken by smallest postorder index.
std::map<std::pair<Vertex, Vertex>, int> edge_decision_points(const FewCliquesDecomposition& f);

}  // namespace mapkit
