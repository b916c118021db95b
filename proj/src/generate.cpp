#include "mapkit/generate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mapkit/rng.hpp"

namespace mapkit {

namespace {

int int_param(const GenSpec& spec, std::size_t idx, const char* what) {
  if (idx >= spec.params.size()) throw std::invalid_argument(std::string("generate: missing parameter ") + what);
  double v = spec.params[idx];
  int out = static_cast<int>(v);
  if (out < 0 || static_cast<double>(out) != v)
    throw std::invalid_argument(std::string("generate: parameter ") + what + " must be a non-negative integer");
  return out;
}

// Seeded stacked (Apollonian-style) triangulation: planar by construction.
std::vector<std::pair<int, int>> stacked_triangulation(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n <= 1) return edges;
  if (n == 2) return {{0, 1}};
  edges = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    std::size_t fi = static_cast<std::size_t>(rng.below(faces.size()));
    auto f = faces[fi];
    for (int corner : f) edges.emplace_back(std::min(corner, v), std::max(corner, v));
    faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(fi));
    faces.push_back({f[0], f[1], v});
    faces.push_back({f[0], f[2], v});
    faces.push_back({f[1], f[2], v});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

BipartiteWitness build_witness(int nations, const std::vector<std::vector<int>>& special_members,
                               const std::string& source) {
  BipartiteWitness w;
  w.nation_count = nations;
  w.special_count = static_cast<int>(special_members.size());
  w.graph = Graph(w.num_vertices());
  w.source = source;
  for (int s = 0; s < w.special_count; ++s)
    for (int v : special_members[static_cast<std::size_t>(s)]) w.graph.add_edge(v, nations + s);
  return w;
}

}  // namespace

std::string GenSpec::name() const {
  std::ostringstream out;
  switch (family) {
    case Family::Star: out << "star"; break;
    case Family::Grid: out << "grid"; break;
    case Family::RandomIncidence: out << "incidence"; break;
    case Family::RandomPlanarBipartite: out << "bipartite"; break;
  }
  out << '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ',';
    out << params[i];
  }
  out << ")#" << seed;
  return out.str();
}

BipartiteWitness generate(const GenSpec& spec) {
  Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc908ULL);
  switch (spec.family) {
    case Family::Star: {
      const int leaves = int_param(spec, 0, "leaf count");
      std::vector<std::vector<int>> members(1);
      for (int v = 0; v < leaves; ++v) members[0].push_back(v);
      return build_witness(leaves, members, spec.name());
    }
    case Family::Grid: {
      const int a = int_param(spec, 0, "rows"), b = int_param(spec, 1, "cols");
      if (a < 1 || b < 1) throw std::invalid_argument("generate: grid needs positive dimensions");
      auto id = [&](int i, int j) { return i * b + j; };
      std::vector<std::vector<int>> members;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
          if (j + 1 < b) members.push_back({id(i, j), id(i, j + 1)});
          if (i + 1 < a) members.push_back({id(i, j), id(i + 1, j)});
        }
      return build_witness(a * b, members, spec.name());
    }
    case Family::RandomIncidence: {
      const int n = int_param(spec, 0, "vertex count");
      if (spec.params.size() < 2) throw std::invalid_argument("generate: incidence needs (n, p)");
      const double p = spec.params[1];
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate: keep probability outside [0,1]");
      auto edges = stacked_triangulation(n, rng);
      std::vector<std::vector<int>> members;
      for (auto [u, v] : edges)
        if (rng.chance(p)) members.push_back({u, v});
      return build_witness(n, members, spec.name());
    }
    case Family::RandomPlanarBipartite: {
      const int n = int_param(spec, 0, "vertex count");
      if (n < 2) throw std::invalid_argument("generate: bipartite family needs n >= 2");
      auto edges = stacked_triangulation(n, rng);
      // vertex 0 is always a nation and vertex 1 a special so both sides exist
      std::vector<char> nation(static_cast<std::size_t>(n));
      nation[0] = 1;
      nation[1] = 0;
      for (int v = 2; v < n; ++v) nation[static_cast<std::size_t>(v)] = rng.chance(0.5) ? 1 : 0;
      std::vector<int> nation_id(static_cast<std::size_t>(n), -1), special_id(static_cast<std::size_t>(n), -1);
      int nations = 0, specials = 0;
      for (int v = 0; v < n; ++v) {
        if (nation[static_cast<std::size_t>(v)])
          nation_id[static_cast<std::size_t>(v)] = nations++;
        else
          special_id[static_cast<std::size_t>(v)] = specials++;
      }
      std::vector<std::vector<int>> members(static_cast<std::size_t>(specials));
      for (auto [u, v] : edges) {
        if (nation[static_cast<std::size_t>(u)] == nation[static_cast<std::size_t>(v)]) continue;
        const int nat = nation[static_cast<std::size_t>(u)] ? u : v;
        const int spc = nation[static_cast<std::size_t>(u)] ? v : u;
        members[static_cast<std::size_t>(special_id[static_cast<std::size_t>(spc)])].push_back(
            nation_id[static_cast<std::size_t>(nat)]);
      }
      for (auto& mem : members) std::sort(mem.begin(), mem.end());
      return build_witness(nations, members, spec.name());
    }
  }
  throw std::logic_error("generate: unknown family");
}

}  // namespace mapkit
