#pragma once

#include <string>
#include <vector>

#include "mapkit/graph.hpp"
#include "mapkit/witness.hpp"

namespace mapkit {

// The half-square G of a witness B: vertices are the nations, two nations are
// adjacent iff they share a special neighbor in B. special_cliques[i] is
// N_B(s_i) for the i-th special vertex, each of which induces a clique in G.
struct MapGraph {
  Graph graph;  // on nation_count vertices
  std::vector<std::vector<Vertex>> special_cliques;
  std::string witness_back_ref;

  int num_nations() const { return graph.num_vertices(); }
  int num_specials() const { return static_cast<int>(special_cliques.size()); }
};

MapGraph half_square(const BipartiteWitness& w);

}  // namespace mapkit
