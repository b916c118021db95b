#include "mapkit/tree_decomposition.hpp"

#include <algorithm>
#include <functional>

namespace mapkit {

namespace {

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

void check_tree_shape(const TreeDecomposition& td, TdReport& report) {
  const int n = td.num_nodes();
  if (n == 0) {
    report.violations.push_back("decomposition has no nodes");
    return;
  }
  if (static_cast<int>(td.parent.size()) != n) {
    report.violations.push_back("parent array size mismatch");
    return;
  }
  int roots = 0;
  for (int t = 0; t < n; ++t) {
    int p = td.parent[static_cast<std::size_t>(t)];
    if (p == -1) {
      ++roots;
      if (t != td.root) report.violations.push_back("node " + std::to_string(t) + " is parentless but not the root");
    } else if (p < 0 || p >= n) {
      report.violations.push_back("node " + std::to_string(t) + " has invalid parent");
    }
  }
  if (roots != 1) report.violations.push_back("expected exactly one root, found " + std::to_string(roots));
  // reachability from the root (also rules out parent cycles)
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  auto ch = td.children();
  std::vector<int> stack{td.root};
  if (td.root >= 0 && td.root < n) seen[static_cast<std::size_t>(td.root)] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int c : ch[static_cast<std::size_t>(t)])
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        stack.push_back(c);
      }
  }
  for (int t = 0; t < n; ++t)
    if (!seen[static_cast<std::size_t>(t)]) {
      report.violations.push_back("tree is not connected");
      break;
    }
}

void check_axioms(const TreeDecomposition& td, const Graph& g, TdReport& report) {
  const int n = g.num_vertices();
  // (a) coverage
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) {
      if (v < 0 || v >= n) {
        report.violations.push_back("bag vertex " + std::to_string(v) + " out of range");
        return;
      }
      covered[static_cast<std::size_t>(v)] = 1;
    }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      report.violations.push_back("axiom (a): vertex " + std::to_string(v) + " in no bag");
  // (b) edge coverage
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& bag : td.bags)
      if (bag_contains(bag, u) && bag_contains(bag, v)) {
        ok = true;
        break;
      }
    if (!ok)
      report.violations.push_back("axiom (b): edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} not inside any bag");
  }
  // (c) connectivity of occurrence sets
  auto ch = td.children();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> occ;
    for (int t = 0; t < td.num_nodes(); ++t)
      if (bag_contains(td.bags[static_cast<std::size_t>(t)], v)) occ.push_back(t);
    if (occ.empty()) continue;
    std::vector<char> in_occ(static_cast<std::size_t>(td.num_nodes()), 0);
    for (int t : occ) in_occ[static_cast<std::size_t>(t)] = 1;
    std::vector<int> stack{occ.front()};
    std::vector<char> seen(static_cast<std::size_t>(td.num_nodes()), 0);
    seen[static_cast<std::size_t>(occ.front())] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++reached;
      std::vector<int> nbrs = ch[static_cast<std::size_t>(t)];
      if (td.parent[static_cast<std::size_t>(t)] >= 0) nbrs.push_back(td.parent[static_cast<std::size_t>(t)]);
      for (int w : nbrs)
        if (in_occ[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    if (reached != static_cast<int>(occ.size()))
      report.violations.push_back("axiom (c): occurrences of vertex " + std::to_string(v) +
                                  " are disconnected");
  }
}

}  // namespace

TdReport validate_td(const TreeDecomposition& td, const Graph& g) {
  TdReport report;
  check_tree_shape(td, report);
  if (!report.valid()) return report;
  check_axioms(td, g, report);
  return report;
}

TdReport validate_td(const NiceTreeDecomposition& ntd, const Graph& g) {
  TdReport report = validate_td(ntd.td, g);
  const auto& td = ntd.td;
  if (static_cast<int>(ntd.labels.size()) != td.num_nodes()) {
    report.violations.push_back("label array size mismatch");
    return report;
  }
  if (!td.bags[static_cast<std::size_t>(td.root)].empty())
    report.violations.push_back("root bag is not empty");
  auto ch = td.children();
  std::vector<int> forget_count(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int t = 0; t < td.num_nodes(); ++t) {
    const auto& label = ntd.labels[static_cast<std::size_t>(t)];
    const auto& bag = td.bags[static_cast<std::size_t>(t)];
    const auto& kids = ch[static_cast<std::size_t>(t)];
    switch (label.kind) {
      case NiceLabel::Leaf:
        if (!kids.empty()) report.violations.push_back("leaf node " + std::to_string(t) + " has children");
        if (!bag.empty()) report.violations.push_back("leaf node " + std::to_string(t) + " has a nonempty bag");
        break;
      case NiceLabel::IntroduceV: {
        if (kids.size() != 1) {
          report.violations.push_back("introduce node " + std::to_string(t) + " must have one child");
          break;
        }
        auto expect = td.bags[static_cast<std::size_t>(kids[0])];
        auto it = std::lower_bound(expect.begin(), expect.end(), label.vertex);
        if (it != expect.end() && *it == label.vertex) {
          report.violations.push_back("introduce(" + std::to_string(label.vertex) + ") at node " +
                                      std::to_string(t) + ": vertex already in child bag");
          break;
        }
        expect.insert(it, label.vertex);
        if (expect != bag)
          report.violations.push_back("introduce node " + std::to_string(t) + ": bag relation violated");
        break;
      }
      case NiceLabel::ForgetV: {
        if (kids.size() != 1) {
          report.violations.push_back("forget node " + std::to_string(t) + " must have one child");
          break;
        }
        if (label.vertex >= 0 && label.vertex < g.num_vertices())
          ++forget_count[static_cast<std::size_t>(label.vertex)];
        auto expect = td.bags[static_cast<std::size_t>(kids[0])];
        auto it = std::lower_bound(expect.begin(), expect.end(), label.vertex);
        if (it == expect.end() || *it != label.vertex) {
          report.violations.push_back("forget(" + std::to_string(label.vertex) + ") at node " +
                                      std::to_string(t) + ": vertex not in child bag");
          break;
        }
        expect.erase(it);
        if (expect != bag)
          report.violations.push_back("forget node " + std::to_string(t) + ": bag relation violated");
        break;
      }
      case NiceLabel::Join:
        if (kids.size() != 2) {
          report.violations.push_back("join node " + std::to_string(t) + " must have two children");
          break;
        }
        if (td.bags[static_cast<std::size_t>(kids[0])] != bag || td.bags[static_cast<std::size_t>(kids[1])] != bag)
          report.violations.push_back("join node " + std::to_string(t) + ": child bags differ from parent");
        break;
    }
    if (label.kind != NiceLabel::Join && kids.size() > 1)
      report.violations.push_back("node " + std::to_string(t) + " has more than one child but is not a join");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool occurs = false;
    for (const auto& b : td.bags)
      if (bag_contains(b, v)) {
        occurs = true;
        break;
      }
    if (occurs && forget_count[static_cast<std::size_t>(v)] != 1)
      report.violations.push_back("vertex " + std::to_string(v) + " has " +
                                  std::to_string(forget_count[static_cast<std::size_t>(v)]) +
                                  " forget nodes, expected 1");
  }
  return report;
}

}  // namespace mapkit
