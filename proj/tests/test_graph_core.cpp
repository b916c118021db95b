#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "mapkit/map_graph.hpp"
#include "mapkit/witness.hpp"

using namespace mapkit;

namespace {

const char* kStarText =
    "c the four-nations star\n"
    "p tmap 4 1 4\n"
    "e 1 5\n"
    "e 2 5\n"
    "e 3 5\n"
    "e 4 5\n";

}  // namespace

TEST_CASE("parse star witness") {
  auto w = parse_witness_string(kStarText);
  CHECK(w.nation_count == 4);
  CHECK(w.special_count == 1);
  CHECK(w.graph.num_edges() == 4);
  for (int v = 0; v < 4; ++v) CHECK(w.graph.has_edge(v, 4));
  CHECK(validate_witness(w).valid());
}

TEST_CASE("parse single-nation witness") {
  auto w = parse_witness_string("p tmap 1 0 0\n");
  CHECK(w.nation_count == 1);
  CHECK(w.special_count == 0);
  CHECK(w.graph.num_edges() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_witness_string(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const WitnessParseError& e) {
      CHECK(e.line_number == line);
    }
  };
  expect_error("p tmap x 1 0\n", 1);                          // malformed header
  expect_error("p tmap 2 1 1\ne 1 9\n", 2);                   // out of range
  expect_error("p tmap 2 1 1\ne 1 2\n", 2);                   // same-side edge
  expect_error("p tmap 2 1 2\ne 1 3\ne 1 3\n", 3);            // duplicate edge
  expect_error("p tmap 2 1 1\nq broken\ne 1 3\n", 2);         // unknown line
  expect_error("p tmap 1 1 0\np tmap 1 1 0\n", 2);            // duplicate header
  expect_error("e 1 2\n", 1);                                 // edge before header
}

TEST_CASE("round-trip serialization over random witnesses") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto w = testutil::random_witness(seed);
    std::string canonical = serialize_witness(w);
    auto reparsed = parse_witness_string(canonical);
    CHECK(serialize_witness(reparsed) == canonical);
    CHECK(reparsed.graph == w.graph);
  }
}

TEST_CASE("parser ignores comments and trailing whitespace") {
  std::string text = "c comment\np tmap 4 1 4   \ne 1 5\t\nc mid comment\ne 2 5\ne 3 5\ne 4 5\r\n";
  auto w = parse_witness_string(text);
  CHECK(serialize_witness(w) == serialize_witness(parse_witness_string(kStarText)));
}

TEST_CASE("euler bound violation is reported") {
  // K_{3,3}: 9 edges > 2*6-4 = 8
  BipartiteWitness w;
  w.nation_count = 3;
  w.special_count = 3;
  w.graph = Graph(6);
  for (int u = 0; u < 3; ++u)
    for (int s = 3; s < 6; ++s) w.graph.add_edge(u, s);
  auto report = validate_witness(w);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().find("Euler") != std::string::npos);
}

TEST_CASE("strict planarity flags K33 and agrees with the rotation oracle") {
  BipartiteWitness k33;
  k33.nation_count = 3;
  k33.special_count = 3;
  k33.graph = Graph(6);
  for (int u = 0; u < 3; ++u)
    for (int s = 3; s < 6; ++s) k33.graph.add_edge(u, s);
  CHECK_FALSE(is_planar(k33.graph));
  CHECK_FALSE(testutil::planar_by_rotation_systems(k33.graph));
  auto report = validate_witness(k33, true);
  bool planarity_flagged = false;
  for (const auto& v : report.violations) planarity_flagged |= v.find("planar") != std::string::npos;
  CHECK(planarity_flagged);

  // subdividing one edge of K33 keeps it non-planar
  BipartiteWitness sub;
  sub.nation_count = 4;  // nations 0..3 (3 = subdivision midpoint side W)
  sub.special_count = 4;
  sub.graph = Graph(8);
  // K33 sides {0,1,2} and {4,5,6}; edge 0-4 subdivided through special 7 / nation 3
  for (int u = 0; u < 3; ++u)
    for (int s = 4; s < 7; ++s)
      if (!(u == 0 && s == 4)) sub.graph.add_edge(u, s);
  sub.graph.add_edge(0, 7);
  sub.graph.add_edge(3, 7);
  sub.graph.add_edge(3, 4);
  CHECK_FALSE(is_planar(sub.graph));
  CHECK_FALSE(testutil::planar_by_rotation_systems(sub.graph));

  // the star is planar by both deciders
  auto star = testutil::star_witness(4);
  CHECK(is_planar(star.graph));
  CHECK(testutil::planar_by_rotation_systems(star.graph));
  CHECK(validate_witness(star, true).valid());
}

TEST_CASE("strict planarity matches the rotation oracle on random witnesses") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto w = testutil::random_witness(seed, 16);
    CHECK(is_planar(w.graph) == testutil::planar_by_rotation_systems(w.graph));
  }
}

TEST_CASE("half-square of the star is K4") {
  auto w = parse_witness_string(kStarText);
  auto m = half_square(w);
  CHECK(m.graph.num_vertices() == 4);
  CHECK(m.graph.num_edges() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(m.graph.has_edge(u, v));
  REQUIRE(m.special_cliques.size() == 1);
  CHECK(m.special_cliques[0] == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("half-square with no specials is edgeless") {
  auto w = parse_witness_string("p tmap 5 0 0\n");
  auto m = half_square(w);
  CHECK(m.graph.num_vertices() == 5);
  CHECK(m.graph.num_edges() == 0);
}

TEST_CASE("half-square matches the distance-2 BFS oracle on random witnesses") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto w = testutil::random_witness(seed);
    auto m = half_square(w);
    CHECK(m.graph == testutil::half_square_bfs_oracle(w));
  }
}

TEST_CASE("special cliques are cliques and the edge bound holds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto w = testutil::random_witness(seed);
    auto m = half_square(w);
    long long pair_sum = 0;
    for (const auto& clique : m.special_cliques) {
      const long long c = static_cast<long long>(clique.size());
      pair_sum += c * (c - 1) / 2;
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(m.graph.has_edge(clique[i], clique[j]));
    }
    CHECK(m.graph.num_edges() <= pair_sum);
  }
}

TEST_CASE("permuting special indices leaves the map graph unchanged") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = testutil::random_witness(seed);
    // rebuild with specials in reverse order
    BipartiteWitness rev;
    rev.nation_count = w.nation_count;
    rev.special_count = w.special_count;
    rev.graph = Graph(w.num_vertices());
    for (int s = 0; s < w.special_count; ++s) {
      int orig = w.nation_count + (w.special_count - 1 - s);
      for (int v : w.graph.neighbors(orig)) rev.graph.add_edge(v, w.nation_count + s);
    }
    auto a = half_square(w), b = half_square(rev);
    CHECK(a.graph == b.graph);
    auto cliques_sorted = [](MapGraph m) {
      std::sort(m.special_cliques.begin(), m.special_cliques.end());
      return m.special_cliques;
    };
    CHECK(cliques_sorted(a) == cliques_sorted(b));
  }
}
