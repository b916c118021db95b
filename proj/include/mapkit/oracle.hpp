#pragma once

#include <vector>

#include "mapkit/crossing.hpp"
#include "mapkit/map_graph.hpp"
#include "mapkit/solvers.hpp"

namespace mapkit {

struct OracleResult {
  int optimum = 0;
  std::vector<Vertex> vertex_set;  // VC / FVS
  Cycle cycle;                     // longest cycle / path
  std::vector<Cycle> cycles;       // packing
};

// Exhaustive reference solver, independent of the decomposition machinery.
// Guards: |V(G)| <= 18 for VC/FVS, <= 14 for the cycle problems.
OracleResult brute_force_solve(const MapGraph& m, Problem p);

}  // namespace mapkit
