#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapkit/crossing.hpp"
#include "mapkit/few_cliques.hpp"
#include "mapkit/map_graph.hpp"

namespace mapkit {

enum class Problem { VertexCover, FeedbackVertexSet, LongestCycle, LongestPath, CyclePacking };

std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(const std::string& name);

struct SolverStats {
  int width_D = -1;          // width of the source nice decomposition
  int maxbag_Dprime = 0;     // largest derived bag
  int cap_max = 0;           // largest per-node cap in effect (cycle problems)
  long long max_states = 0;  // largest per-node table
  std::vector<long long> states_per_node;
  double millis = 0.0;
  std::string early_exit;    // "clique" when a clique-size exit fired
};

// Certificates re-validate against G independently of the DP:
// vertex_set for VC / FVS (and the clique witness of an FVS early NO),
// cycle for Longest Cycle (vertex cycle) and Longest Path (vertex path),
// cycles for Cycle Packing.
struct SolveResult {
  bool decision = false;
  std::optional<int> optimum;  // exact optimum whenever the DP ran
  std::vector<Vertex> vertex_set;
  Cycle cycle;
  std::vector<Cycle> cycles;
  SolverStats stats;
};

struct SolveOptions {
  std::optional<int> k;             // decision threshold; nullopt: optimum only
  std::optional<int> cap_override;  // replaces the per-node crossing cap
  int threads = 1;
  bool use_early_exit = true;
};

// Clique-size early answers: FVS is a No-instance when some special clique
// has k+3 vertices; a clique of k vertices yields a k-cycle; one of 3k
// vertices yields k triangles. Returns nullopt when no exit applies.
std::optional<SolveResult> check_early_exit(const MapGraph& m, Problem p, int k);

SolveResult solve_vertex_cover(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);
SolveResult solve_fvs(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);
SolveResult solve_longest_cycle(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);
SolveResult solve_longest_path(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);
SolveResult solve_cycle_packing(const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);

SolveResult solve(Problem p, const MapGraph& m, const FewCliquesDecomposition& f, const SolveOptions& opts);

// Independent adjacency-level check of a result's certificate.
bool validate_certificate(const MapGraph& m, Problem p, const SolveResult& r);

// Certificate text: `SOLUTION <problem> k=<k> value=<v>` followed by one line
// per set / cycle with 1-based vertex ids.
std::string format_certificate(Problem p, const SolveResult& r, std::optional<int> k);

}  // namespace mapkit
