#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapkit/graph.hpp"

namespace mapkit {

// The planar bipartite graph B encoding a map graph. Vertices 0..W-1 are
// nations, W..W+U-1 are special vertices.
struct BipartiteWitness {
  Graph graph;
  int nation_count = 0;   // W
  int special_count = 0;  // U
  std::string source;     // back-reference for reports, e.g. file name

  int num_vertices() const { return nation_count + special_count; }
  bool is_nation(Vertex v) const { return v >= 0 && v < nation_count; }
  bool is_special(Vertex v) const { return v >= nation_count && v < num_vertices(); }
};

struct WitnessParseError : std::runtime_error {
  WitnessParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

// Witness file format: comment lines start with 'c', exactly one header
// `p tmap <W> <U> <M>`, then M lines `e <a> <b>` with 1 <= a <= W < b <= W+U.
// Indices are 1-based in files, 0-based in memory.
BipartiteWitness parse_witness(std::istream& in, const std::string& source = "<stream>");
BipartiteWitness parse_witness_string(const std::string& text, const std::string& source = "<string>");
BipartiteWitness parse_witness_file(const std::string& path);

// Canonical serialization: header followed by edges sorted by (nation, special).
std::string serialize_witness(const BipartiteWitness& w);

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the witness invariants: bipartite across the declared sides, simple,
// and the Euler bound |E| <= 2(W+U) - 4 for W+U >= 3. With strict=true an
// exact planarity decision runs as well.
ValidationReport validate_witness(const BipartiteWitness& w, bool strict = false);

// Exact planarity decision (Boyer-Myrvold).
bool is_planar(const Graph& g);

}  // namespace mapkit
