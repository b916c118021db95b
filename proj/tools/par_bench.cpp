// Compares the serial DP evaluation against the OpenMP task-parallel one on
// generated instances and checks that both return identical results.

#include <chrono>
#include <iostream>
#include <string>

#include "mapkit/decompose.hpp"
#include "mapkit/few_cliques.hpp"
#include "mapkit/generate.hpp"
#include "mapkit/solvers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mapkit;

namespace {

double run_once(Problem p, const MapGraph& m, const FewCliquesDecomposition& f, int k, int threads,
                SolveResult& out) {
  SolveOptions opts;
  opts.k = k;
  opts.threads = threads;
  opts.use_early_exit = false;
  auto start = std::chrono::steady_clock::now();
  out = solve(p, m, f, opts);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 4;
  if (argc > 1) threads = std::stoi(argv[1]);
#ifndef _OPENMP
  std::cerr << "built without OpenMP; parallel lane degrades to serial\n";
#endif
  std::cout << "instance,problem,k,serial_ms,parallel_ms(threads=" << threads << "),speedup,agree\n";
  const Problem probs[] = {Problem::LongestCycle, Problem::CyclePacking, Problem::FeedbackVertexSet};
  bool all_agree = true;
  for (int size = 4; size <= 7; ++size) {
    GenSpec spec{Family::Grid, {static_cast<double>(size), static_cast<double>(size)}, 1};
    BipartiteWitness w = generate(spec);
    MapGraph m = half_square(w);
    auto nice = make_nice(heuristic_decompose(w.graph, 1));
    auto fcd = derive_fcd(nice, m, w);
    for (Problem p : probs) {
      const int k = size;
      SolveResult serial, parallel;
      double serial_ms = run_once(p, m, fcd, k, 1, serial);
      double parallel_ms = run_once(p, m, fcd, k, threads, parallel);
      bool agree = serial.decision == parallel.decision && serial.optimum == parallel.optimum &&
                   serial.vertex_set == parallel.vertex_set && serial.cycle == parallel.cycle &&
                   serial.cycles == parallel.cycles;
      all_agree = all_agree && agree;
      std::cout << spec.name() << ',' << problem_name(p) << ',' << k << ',' << serial_ms << ',' << parallel_ms
                << ',' << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << ',' << (agree ? "yes" : "NO")
                << '\n';
    }
  }
  return all_agree ? 0 : 1;
}
