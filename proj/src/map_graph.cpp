#include "mapkit/map_graph.hpp"

namespace mapkit {

MapGraph half_square(const BipartiteWitness& w) {
  MapGraph m;
  m.graph = Graph(w.nation_count);
  m.witness_back_ref = w.source;
  m.special_cliques.reserve(static_cast<std::size_t>(w.special_count));
  for (Vertex s = w.nation_count; s < w.num_vertices(); ++s) {
    const auto& members = w.graph.neighbors(s);  // already sorted
    m.special_cliques.push_back(members);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!m.graph.has_edge(members[i], members[j])) m.graph.add_edge(members[i], members[j]);
  }
  return m;
}

}  // namespace mapkit
