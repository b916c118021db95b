#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapkit/witness.hpp"

namespace mapkit {

enum class Family { Star, Grid, RandomIncidence, RandomPlanarBipartite };

// Deterministic per (family, params, seed): identical specs give bitwise
// identical witnesses.
struct GenSpec {
  Family family = Family::Star;
  std::vector<double> params;
  std::uint64_t seed = 0;

  std::string name() const;
};

// star(l): one special adjacent to l nations (map graph K_l).
// grid(a,b): nations are grid vertices, one degree-2 special per grid edge.
// random_incidence(n,p): incidence graph of a seeded stacked triangulation on
//   n vertices, each edge-special kept with probability p.
// random_planar_bipartite(n): stacked triangulation with random side
//   assignment; same-side edges are dropped.
BipartiteWitness generate(const GenSpec& spec);

}  // namespace mapkit
