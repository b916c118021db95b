#include "mapkit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "mapkit/decompose.hpp"
#include "mapkit/generate.hpp"
#include "mapkit/oracle.hpp"
#include "mapkit/solvers.hpp"
#include "mapkit/td_io.hpp"

namespace mapkit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitOracleMismatch = 4;

std::uint64_t env_seed() {
  const char* s = std::getenv("MAPKIT_SEED");
  if (!s) return 0;
  try {
    return std::stoull(s);
  } catch (...) {
    return 0;
  }
}

struct Pipeline {
  BipartiteWitness witness;
  MapGraph map;
  NiceTreeDecomposition nice;
  FewCliquesDecomposition fcd;
};

// witness -> half-square -> decomposition of B -> nice form -> derived fcd
Pipeline build_pipeline(const std::string& path, std::uint64_t seed, bool exact) {
  Pipeline p;
  p.witness = parse_witness_file(path);
  auto report = validate_witness(p.witness);
  if (!report.valid()) throw std::runtime_error("invalid witness: " + report.violations.front());
  p.map = half_square(p.witness);
  TreeDecomposition td;
  if (exact) {
    if (p.witness.num_vertices() > 25)
      throw std::runtime_error("--exact is guarded to |V(B)| <= 25");
    auto opt = exact_decompose_small(p.witness.graph, p.witness.num_vertices());
    td = *opt;  // budget n always succeeds
  } else {
    td = heuristic_decompose(p.witness.graph, seed);
  }
  p.nice = make_nice(td);
  p.fcd = derive_fcd(p.nice, p.map, p.witness);
  return p;
}

bool oracle_in_guard(Problem prob, int n) {
  if (prob == Problem::VertexCover || prob == Problem::FeedbackVertexSet) return n <= 18;
  return n <= 14;
}

bool oracle_agrees(Problem prob, const SolveResult& r, const OracleResult& o, std::optional<int> k) {
  if (r.optimum) return *r.optimum == o.optimum;
  if (!k) return false;
  // early exits report only the decision
  switch (prob) {
    case Problem::FeedbackVertexSet: return r.decision == (o.optimum <= *k);
    case Problem::VertexCover: return r.decision == (o.optimum <= *k);
    default: return r.decision == (o.optimum >= *k);
  }
}

int cmd_solve(const std::string& problem_name_arg, const std::string& file, std::optional<int> k,
              std::optional<int> cap, bool want_oracle, bool want_cert, int threads, std::uint64_t seed,
              const std::string& emit_profile, std::ostream& out, std::ostream& err) {
  auto prob = problem_from_name(problem_name_arg);
  if (!prob) {
    err << "unknown problem: " << problem_name_arg << '\n';
    return kExitUsage;
  }
  Pipeline p = build_pipeline(file, seed, false);
  SolveOptions opts;
  opts.k = k;
  opts.cap_override = cap;
  opts.threads = threads;
  SolveResult r = solve(*prob, p.map, p.fcd, opts);

  if (k)
    out << (r.decision ? "YES" : "NO") << '\n';
  else
    out << "OPT=" << (r.optimum ? *r.optimum : -1) << '\n';
  if (!r.stats.early_exit.empty()) out << "early_exit=" << r.stats.early_exit << '\n';
  if (r.optimum) out << "value=" << *r.optimum << '\n';
  out << "width_D=" << r.stats.width_D << " maxbag_Dprime=" << r.stats.maxbag_Dprime
      << " cap=" << r.stats.cap_max << " max_states=" << r.stats.max_states << '\n';
  err << "millis=" << r.stats.millis << '\n';
  if (want_cert) out << format_certificate(*prob, r, k);

  if (!emit_profile.empty()) {
    std::vector<Edge> edges;
    if (*prob == Problem::LongestCycle && !r.cycle.empty()) edges = cycle_edges(r.cycle);
    for (const auto& c : r.cycles) {
      auto ce = cycle_edges(c);
      edges.insert(edges.end(), ce.begin(), ce.end());
    }
    auto profile = crossing_profile(edges, p.fcd);
    std::ofstream pf(emit_profile);
    pf << "node,crossing\n";
    for (std::size_t t = 0; t < profile.per_node.size(); ++t) pf << t + 1 << ',' << profile.per_node[t] << '\n';
  }

  if (want_oracle) {
    if (!oracle_in_guard(*prob, p.map.num_nations())) {
      err << "--oracle: instance exceeds the oracle size guard\n";
      return kExitUsage;
    }
    OracleResult o = brute_force_solve(p.map, *prob);
    if (!validate_certificate(p.map, *prob, r)) {
      err << "oracle check: solver certificate failed validation\n";
      return kExitOracleMismatch;
    }
    if (!oracle_agrees(*prob, r, o, k)) {
      err << "oracle mismatch: oracle optimum " << o.optimum << '\n';
      return kExitOracleMismatch;
    }
    out << "oracle=ok\n";
  }
  return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& problem_name_arg, int kmax, const std::string& out_csv,
              int threads, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  auto prob = problem_from_name(problem_name_arg);
  if (!prob) {
    err << "unknown problem: " << problem_name_arg << '\n';
    return kExitUsage;
  }
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tmap") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "no .tmap files in " << dir << '\n';
    return kExitInvalidInput;
  }
  std::ofstream csv(out_csv);
  if (!csv) {
    err << "cannot open " << out_csv << '\n';
    return kExitInvalidInput;
  }
  csv << "instance,problem,k,width_D,maxbag_Dprime,cap,max_states,answer,millis\n";
  for (const auto& file : files) {
    Pipeline p = build_pipeline(file, seed, false);
    for (int k = 1; k <= kmax; ++k) {
      SolveOptions opts;
      opts.k = k;
      opts.threads = threads;
      SolveResult r = solve(*prob, p.map, p.fcd, opts);
      csv << std::filesystem::path(file).filename().string() << ',' << problem_name_arg << ',' << k << ','
          << r.stats.width_D << ',' << r.stats.maxbag_Dprime << ',' << r.stats.cap_max << ','
          << r.stats.max_states << ',' << (r.decision ? "YES" : "NO") << ',' << r.stats.millis << '\n';
    }
  }
  out << "wrote " << out_csv << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"map-graph decomposition and subexponential solvers"};
  app.require_subcommand(1);

  // validate
  std::string v_file;
  bool v_strict = false;
  auto* validate_cmd = app.add_subcommand("validate", "check a witness file");
  validate_cmd->add_option("file", v_file)->required();
  validate_cmd->add_flag("--strict", v_strict, "run the exact planarity decision");

  // decompose
  std::string d_file, d_emit_td, d_emit_fcd;
  bool d_exact = false;
  std::uint64_t d_seed = env_seed();
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose the witness and derive the map-graph form");
  decompose_cmd->add_option("file", d_file)->required();
  decompose_cmd->add_flag("--exact", d_exact);
  decompose_cmd->add_option("--seed", d_seed);
  decompose_cmd->add_option("--emit-td", d_emit_td);
  decompose_cmd->add_option("--emit-fcd", d_emit_fcd);

  // solve
  std::string s_problem, s_file, s_profile;
  int s_k = -1, s_cap = -1, s_threads = 1;
  bool s_oracle = false, s_cert = false;
  std::uint64_t s_seed = env_seed();
  auto* solve_cmd = app.add_subcommand("solve", "run a solver");
  solve_cmd->add_option("problem", s_problem, "vc|fvs|longest-cycle|longest-path|cycle-packing")->required();
  solve_cmd->add_option("file", s_file)->required();
  solve_cmd->add_option("-k", s_k, "decision threshold; omit to report the optimum");
  solve_cmd->add_option("--cap", s_cap, "override the per-node crossing cap");
  solve_cmd->add_flag("--oracle", s_oracle, "cross-check against the brute-force oracle");
  solve_cmd->add_flag("--cert", s_cert, "print the certificate");
  solve_cmd->add_option("--threads", s_threads);
  solve_cmd->add_option("--seed", s_seed);
  solve_cmd->add_option("--emit-profile", s_profile, "write the solution crossing profile CSV");

  // gen
  std::string g_family, g_out;
  std::vector<double> g_params;
  std::uint64_t g_seed = env_seed();
  auto* gen_cmd = app.add_subcommand("gen", "generate a witness");
  gen_cmd->add_option("--family", g_family, "star|grid|incidence|bipartite")->required();
  gen_cmd->add_option("--params", g_params)->required()->delimiter(',');
  gen_cmd->add_option("--seed", g_seed);
  gen_cmd->add_option("-o", g_out)->required();

  // bench
  std::string b_dir, b_problem, b_out;
  int b_kmax = 1, b_threads = 1;
  std::uint64_t b_seed = env_seed();
  auto* bench_cmd = app.add_subcommand("bench", "run a solver over a directory of witnesses");
  bench_cmd->add_option("dir", b_dir)->required();
  bench_cmd->add_option("--problem", b_problem)->required();
  bench_cmd->add_option("--kmax", b_kmax)->required();
  bench_cmd->add_option("-o", b_out)->required();
  bench_cmd->add_option("--threads", b_threads);
  bench_cmd->add_option("--seed", b_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate_cmd) {
      BipartiteWitness w;
      try {
        w = parse_witness_file(v_file);
      } catch (const WitnessParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInvalidInput;
      }
      auto report = validate_witness(w, v_strict);
      if (report.valid()) {
        out << "valid witness: W=" << w.nation_count << " U=" << w.special_count
            << " E=" << w.graph.num_edges() << '\n';
        return kExitOk;
      }
      for (const auto& v : report.violations) out << "violation: " << v << '\n';
      return kExitInvalidInput;
    }

    if (*decompose_cmd) {
      Pipeline p = build_pipeline(d_file, d_seed, d_exact);
      out << "width_D=" << p.nice.width() << " nodes_D=" << p.nice.num_nodes()
          << " maxbag_Dprime=" << p.fcd.max_bag_size() << '\n';
      if (!d_emit_td.empty()) {
        std::ofstream f(d_emit_td);
        f << write_td(p.nice, p.witness.num_vertices());
      }
      if (!d_emit_fcd.empty()) {
        std::ofstream f(d_emit_fcd);
        f << write_fcd(p.fcd, p.witness.nation_count);
      }
      return kExitOk;
    }

    if (*solve_cmd) {
      std::optional<int> k = s_k >= 0 ? std::optional<int>(s_k) : std::nullopt;
      std::optional<int> cap = s_cap >= 0 ? std::optional<int>(s_cap) : std::nullopt;
      return cmd_solve(s_problem, s_file, k, cap, s_oracle, s_cert, s_threads, s_seed, s_profile, out, err);
    }

    if (*gen_cmd) {
      GenSpec spec;
      if (g_family == "star")
        spec.family = Family::Star;
      else if (g_family == "grid")
        spec.family = Family::Grid;
      else if (g_family == "incidence")
        spec.family = Family::RandomIncidence;
      else if (g_family == "bipartite")
        spec.family = Family::RandomPlanarBipartite;
      else {
        err << "unknown family: " << g_family << '\n';
        return kExitUsage;
      }
      spec.params = g_params;
      spec.seed = g_seed;
      BipartiteWitness w = generate(spec);
      std::ofstream f(g_out);
      if (!f) {
        err << "cannot open " << g_out << '\n';
        return kExitInvalidInput;
      }
      f << "c " << spec.name() << '\n' << serialize_witness(w);
      out << "wrote " << g_out << '\n';
      return kExitOk;
    }

    if (*bench_cmd) return cmd_bench(b_dir, b_problem, b_kmax, b_out, b_threads, b_seed, out, err);
  } catch (const WitnessParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mapkit
