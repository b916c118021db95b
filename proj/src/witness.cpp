#include "mapkit/witness.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace mapkit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

}  // namespace

BipartiteWitness parse_witness(std::istream& in, const std::string& source) {
  BipartiteWitness w;
  w.source = source;
  bool have_header = false;
  long long expected_edges = 0, seen_edges = 0;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Trailing whitespace is ignored; anything else must tokenize cleanly.
    auto toks = tokenize(line);
    if (toks.empty()) throw WitnessParseError(lineno, "blank line");
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw WitnessParseError(lineno, "duplicate header");
      long long W, U, M;
      if (toks.size() != 5 || toks[1] != "tmap" || !parse_int(toks[2], W) ||
          !parse_int(toks[3], U) || !parse_int(toks[4], M) || W < 0 || U < 0 || M < 0)
        throw WitnessParseError(lineno, "malformed header, expected 'p tmap <W> <U> <M>'");
      w.nation_count = static_cast<int>(W);
      w.special_count = static_cast<int>(U);
      w.graph = Graph(w.num_vertices());
      expected_edges = M;
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw WitnessParseError(lineno, "edge before header");
      long long a, b;
      if (toks.size() != 3 || !parse_int(toks[1], a) || !parse_int(toks[2], b))
        throw WitnessParseError(lineno, "malformed edge line");
      if (a < 1 || a > w.num_vertices() || b < 1 || b > w.num_vertices())
        throw WitnessParseError(lineno, "vertex index out of range");
      const bool a_nation = a <= w.nation_count, b_nation = b <= w.nation_count;
      if (a_nation == b_nation)
        throw WitnessParseError(lineno, "edge joins two vertices of the same side");
      if (!a_nation)
        throw WitnessParseError(lineno, "edge must list the nation first (a <= W < b)");
      auto key = std::make_pair(static_cast<int>(a), static_cast<int>(b));
      if (!seen.insert(key).second) throw WitnessParseError(lineno, "duplicate edge");
      w.graph.add_edge(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
      ++seen_edges;
      continue;
    }
    throw WitnessParseError(lineno, "unrecognized line");
  }
  if (!have_header) throw WitnessParseError(lineno, "missing header");
  if (seen_edges != expected_edges)
    throw WitnessParseError(lineno, "edge count mismatch: header declares " +
                                        std::to_string(expected_edges) + ", found " +
                                        std::to_string(seen_edges));
  return w;
}

BipartiteWitness parse_witness_string(const std::string& text, const std::string& source) {
  std::istringstream ss(text);
  return parse_witness(ss, source);
}

BipartiteWitness parse_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_witness(in, path);
}

std::string serialize_witness(const BipartiteWitness& w) {
  std::ostringstream out;
  out << "p tmap " << w.nation_count << ' ' << w.special_count << ' ' << w.graph.num_edges()
      << '\n';
  for (Vertex u = 0; u < w.nation_count; ++u)
    for (Vertex v : w.graph.neighbors(u)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

bool is_planar(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
  for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

ValidationReport validate_witness(const BipartiteWitness& w, bool strict) {
  ValidationReport report;
  const int n = w.num_vertices();
  if (w.graph.num_vertices() != n)
    report.violations.push_back("graph size does not match W+U");
  for (Vertex u = 0; u < w.graph.num_vertices(); ++u) {
    for (Vertex v : w.graph.neighbors(u)) {
      if (u < v && w.is_nation(u) == w.is_nation(v)) {
        report.violations.push_back("same-side edge {" + std::to_string(u + 1) + "," +
                                    std::to_string(v + 1) + "}");
      }
    }
  }
  if (n >= 3) {
    const int m = w.graph.num_edges();
    const int bound = 2 * n - 4;
    if (m > bound)
      report.violations.push_back("Euler bound violated: " + std::to_string(m) + " edges > 2(W+U)-4 = " +
                                  std::to_string(bound));
  }
  if (strict && !is_planar(w.graph)) report.violations.push_back("graph is not planar");
  return report;
}

}  // namespace mapkit
