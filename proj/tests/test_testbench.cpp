#include <doctest.h>

#include "helpers.hpp"
#include "mapkit/generate.hpp"
#include "mapkit/oracle.hpp"

using namespace mapkit;

TEST_CASE("oracle answers on K4") {
  auto m = half_square(testutil::star_witness(4));
  CHECK(brute_force_solve(m, Problem::FeedbackVertexSet).optimum == 2);
  CHECK(brute_force_solve(m, Problem::VertexCover).optimum == 3);
  CHECK(brute_force_solve(m, Problem::LongestCycle).optimum == 4);
  CHECK(brute_force_solve(m, Problem::LongestPath).optimum == 4);
  CHECK(brute_force_solve(m, Problem::CyclePacking).optimum == 1);
}

TEST_CASE("oracle answers on a forest") {
  // path map graph: grid(1,4)
  auto w = generate({Family::Grid, {1, 4}, 0});
  auto m = half_square(w);
  CHECK(brute_force_solve(m, Problem::FeedbackVertexSet).optimum == 0);
  CHECK(brute_force_solve(m, Problem::CyclePacking).optimum == 0);
  CHECK(brute_force_solve(m, Problem::LongestCycle).optimum == 0);
  CHECK(brute_force_solve(m, Problem::LongestPath).optimum == 4);
}

TEST_CASE("oracle size guards are hard errors") {
  auto w = generate({Family::Star, {19}, 0});
  auto m = half_square(w);
  CHECK_THROWS_AS((void)brute_force_solve(m, Problem::VertexCover), std::invalid_argument);
  auto w2 = generate({Family::Star, {15}, 0});
  auto m2 = half_square(w2);
  CHECK_THROWS_AS((void)brute_force_solve(m2, Problem::LongestCycle), std::invalid_argument);
}

TEST_CASE("oracle certificates are consistent with their optima") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto w = testutil::random_witness(seed, 16);
    auto m = half_square(w);
    if (m.num_nations() > 14) continue;
    auto fvs = brute_force_solve(m, Problem::FeedbackVertexSet);
    CHECK(static_cast<int>(fvs.vertex_set.size()) == fvs.optimum);
    auto vc = brute_force_solve(m, Problem::VertexCover);
    CHECK(static_cast<int>(vc.vertex_set.size()) == vc.optimum);
    auto lc = brute_force_solve(m, Problem::LongestCycle);
    if (lc.optimum > 0) {
      CHECK(static_cast<int>(lc.cycle.size()) == lc.optimum);
      CHECK(is_simple_cycle(lc.cycle, m.graph));
    }
    auto cp = brute_force_solve(m, Problem::CyclePacking);
    CHECK(static_cast<int>(cp.cycles.size()) == cp.optimum);
    std::set<Vertex> used;
    for (const auto& c : cp.cycles) {
      CHECK(is_simple_cycle(c, m.graph));
      for (Vertex v : c) CHECK(used.insert(v).second);
    }
    // cross-problem consistency
    CHECK(fvs.optimum >= cp.optimum);  // every disjoint cycle needs a deleted vertex
    if (cp.optimum >= 1) CHECK(lc.optimum >= 3);
  }
}

TEST_CASE("generator families are deterministic and valid") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto a = testutil::random_witness(seed);
    auto b = testutil::random_witness(seed);
    CHECK(serialize_witness(a) == serialize_witness(b));
    CHECK(validate_witness(a).valid());
    CHECK(validate_witness(a, true).valid());  // planar by construction
  }
}

TEST_CASE("star(4) is the four-nation one-special witness") {
  auto w = generate({Family::Star, {4}, 0});
  CHECK(serialize_witness(w) == "p tmap 4 1 4\ne 1 5\ne 2 5\ne 3 5\ne 4 5\n");
}

TEST_CASE("grid(1,2) is a single shared special") {
  auto w = generate({Family::Grid, {1, 2}, 0});
  CHECK(w.nation_count == 2);
  CHECK(w.special_count == 1);
  auto m = half_square(w);
  CHECK(m.graph.num_edges() == 1);
}

TEST_CASE("grid(3,3) half-square is the 3x3 grid graph") {
  auto w = generate({Family::Grid, {3, 3}, 0});
  auto m = half_square(w);
  CHECK(m.graph.num_edges() == 12);
  Graph expect(9);
  auto id = [](int i, int j) { return i * 3 + j; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (j + 1 < 3) expect.add_edge(id(i, j), id(i, j + 1));
      if (i + 1 < 3) expect.add_edge(id(i, j), id(i + 1, j));
    }
  CHECK(m.graph == expect);
}

TEST_CASE("incidence family keeps specials of degree two") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto w = generate({Family::RandomIncidence, {8, 0.7}, seed});
    for (int s = w.nation_count; s < w.num_vertices(); ++s) CHECK(w.graph.degree(s) == 2);
    CHECK(validate_witness(w, true).valid());
  }
}

TEST_CASE("bipartite family keeps both sides nonempty") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto w = generate({Family::RandomPlanarBipartite, {10}, seed});
    CHECK(w.nation_count >= 1);
    CHECK(w.special_count >= 1);
    CHECK(validate_witness(w, true).valid());
  }
}

TEST_CASE("generator rejects bad parameters") {
  CHECK_THROWS_AS((void)generate({Family::Grid, {0, 3}, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)generate({Family::RandomIncidence, {5, 1.5}, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)generate({Family::Star, {}, 0}), std::invalid_argument);
}
