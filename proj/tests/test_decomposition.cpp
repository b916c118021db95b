#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "mapkit/decompose.hpp"
#include "mapkit/td_io.hpp"

using namespace mapkit;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph grid_graph(int a, int b) {
  Graph g(a * b);
  auto id = [&](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b) g.add_edge(id(i, j), id(i, j + 1));
      if (i + 1 < a) g.add_edge(id(i, j), id(i + 1, j));
    }
  return g;
}

}  // namespace

TEST_CASE("heuristic width on named graphs") {
  CHECK(heuristic_decompose(path_graph(5), 7).width() == 1);
  CHECK(heuristic_decompose(complete_graph(4), 7).width() == 3);
  auto grid = grid_graph(3, 3);
  auto td = heuristic_decompose(grid, 7);
  CHECK(validate_td(td, grid).valid());
  auto exact = exact_decompose_small(grid, 8);
  REQUIRE(exact.has_value());
  CHECK(exact->width() == 3);
  CHECK(td.width() == 3);
}

TEST_CASE("heuristic output is a valid decomposition across seeds and graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto w = testutil::random_witness(seed);
    auto td = heuristic_decompose(w.graph, seed);
    CHECK(validate_td(td, w.graph).valid());
    // identical seed, identical result
    auto again = heuristic_decompose(w.graph, seed);
    CHECK(again.bags == td.bags);
    CHECK(again.parent == td.parent);
  }
}

TEST_CASE("exact decomposition on named graphs") {
  auto c5 = cycle_graph(5);
  auto td = exact_decompose_small(c5, 10);
  REQUIRE(td.has_value());
  CHECK(td->width() == 2);
  CHECK(validate_td(*td, c5).valid());

  CHECK_FALSE(exact_decompose_small(complete_graph(4), 2).has_value());
  CHECK(exact_decompose_small(complete_graph(4), 3).has_value());

  CHECK_THROWS_AS((void)exact_decompose_small(Graph(26), 3), std::invalid_argument);
}

TEST_CASE("heuristic width is never below the exact width") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto w = testutil::random_witness(seed, 20);
    auto heur = heuristic_decompose(w.graph, seed);
    auto exact = exact_decompose_small(w.graph, w.num_vertices());
    REQUIRE(exact.has_value());
    CHECK(heur.width() >= exact->width());
  }
}

TEST_CASE("make_nice on a single bag is the forced chain") {
  TreeDecomposition td;
  td.parent = {-1};
  td.bags = {{2, 5}};
  td.root = 0;
  auto nice = make_nice(td);
  // Leaf -> Introduce(2) -> Introduce(5) -> Forget(2) -> Forget(5)
  REQUIRE(nice.num_nodes() == 5);
  std::vector<std::pair<NiceLabel, Vertex>> expected = {
      {NiceLabel::Leaf, -1},
      {NiceLabel::IntroduceV, 2},
      {NiceLabel::IntroduceV, 5},
      {NiceLabel::ForgetV, 2},
      {NiceLabel::ForgetV, 5},
  };
  for (int t = 0; t < 5; ++t) {
    CHECK(nice.labels[static_cast<std::size_t>(t)].kind == expected[static_cast<std::size_t>(t)].first);
    CHECK(nice.labels[static_cast<std::size_t>(t)].vertex == expected[static_cast<std::size_t>(t)].second);
  }
  CHECK(nice.td.root == 4);
  CHECK(nice.td.bags[static_cast<std::size_t>(nice.td.root)].empty());
}

TEST_CASE("make_nice preserves width and validates on random inputs") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto w = testutil::random_witness(seed);
    auto td = heuristic_decompose(w.graph, seed);
    auto nice = make_nice(td);
    CHECK(nice.width() == td.width());
    CHECK(validate_td(nice, w.graph).valid());
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("validate_td flags constructed violations") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);

  SUBCASE("valid decomposition gives an empty report") {
    TreeDecomposition td;
    td.parent = {-1, 0};
    td.bags = {{0, 1}, {1, 2}};
    td.root = 0;
    CHECK(validate_td(td, g).valid());
  }

  SUBCASE("vertex occurring in two disconnected bags violates axiom (c)") {
    TreeDecomposition td;
    td.parent = {-1, 0, 1};
    td.bags = {{0, 1}, {1, 2}, {0}};  // 0 reappears below without being in the middle bag
    td.root = 0;
    auto report = validate_td(td, g);
    REQUIRE_FALSE(report.valid());
    bool named = false;
    for (const auto& v : report.violations)
      named |= v.find("axiom (c)") != std::string::npos && v.find("vertex 0") != std::string::npos;
    CHECK(named);
  }

  SUBCASE("missing co-residency violates axiom (b)") {
    TreeDecomposition td;
    td.parent = {-1, 0};
    td.bags = {{0, 1}, {2}};
    td.root = 0;
    auto report = validate_td(td, g);
    REQUIRE_FALSE(report.valid());
    bool named = false;
    for (const auto& v : report.violations)
      named |= v.find("axiom (b)") != std::string::npos && v.find("{1,2}") != std::string::npos;
    CHECK(named);
  }
}

TEST_CASE("nice label grammar is checked") {
  auto fx = testutil::star_fixture();
  CHECK(validate_td(fx.nice, fx.witness.graph).valid());
  // corrupt one introduce label
  auto broken = fx.nice;
  broken.labels[1].vertex = 3;
  CHECK_FALSE(validate_td(broken, fx.witness.graph).valid());
}

TEST_CASE("td io round-trips") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto w = testutil::random_witness(seed);
    auto td = heuristic_decompose(w.graph, seed);
    std::istringstream in(write_td(td, w.num_vertices()));
    auto back = read_td(in);
    CHECK(back.num_nodes() == td.num_nodes());
    CHECK(validate_td(back, w.graph).valid());
    auto nice = make_nice(td);
    std::istringstream in2(write_td(nice, w.num_vertices()));
    auto back2 = read_td(in2);
    CHECK(back2.num_nodes() == nice.num_nodes());
    CHECK(validate_td(back2, w.graph).valid());
  }
}
