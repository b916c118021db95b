#pragma once

#include <iosfwd>
#include <string>

#include "mapkit/few_cliques.hpp"
#include "mapkit/tree_decomposition.hpp"

namespace mapkit {

// PACE-style format: header `s td <numBags> <maxBagSize> <n>`, bag lines
// `b <id> <v...>`, then tree edges `<id> <id>`. Node ids and vertices are
// 1-based in files. Labels ride along as `c label <id> <LABEL> [<v>]`.
std::string write_td(const TreeDecomposition& td, int n_vertices);
std::string write_td(const NiceTreeDecomposition& ntd, int n_vertices);

// Adds `c original/fake/cliques <id> ...` lines for the derived structure.
// Special ids are written in witness coordinates (W+1 .. W+U).
std::string write_fcd(const FewCliquesDecomposition& f, int nation_count);

// Reads the plain PACE-style part (bags and tree edges); label comments are
// ignored. The root is the node with no parent after orienting edge lists
// away from node 1.
TreeDecomposition read_td(std::istream& in);

}  // namespace mapkit
