#pragma once

#include <string>
#include <vector>

#include "mapkit/graph.hpp"

namespace mapkit {

// Rooted tree decomposition. parent[root] == -1; bags are sorted vertex lists.
struct TreeDecomposition {
  std::vector<int> parent;
  std::vector<std::vector<Vertex>> bags;
  int root = 0;

  int num_nodes() const { return static_cast<int>(bags.size()); }

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> ch(bags.size());
    for (int t = 0; t < num_nodes(); ++t)
      if (parent[static_cast<std::size_t>(t)] >= 0)
        ch[static_cast<std::size_t>(parent[static_cast<std::size_t>(t)])].push_back(t);
    return ch;
  }
};

enum class NiceLabel { Leaf, IntroduceV, ForgetV, Join };

struct NiceNodeLabel {
  NiceLabel kind = NiceLabel::Leaf;
  Vertex vertex = -1;  // for IntroduceV / ForgetV
};

// Nice tree decomposition: binary, empty root and leaf bags, per-node labels.
struct NiceTreeDecomposition {
  TreeDecomposition td;
  std::vector<NiceNodeLabel> labels;

  int num_nodes() const { return td.num_nodes(); }
  int width() const { return td.width(); }
};

struct TdReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks tree shape plus decomposition axioms (a) vertex coverage,
// (b) edge coverage, (c) connected occurrence subtrees.
TdReport validate_td(const TreeDecomposition& td, const Graph& g);

// Additionally checks the nice-label grammar: empty root/leaf bags, the
// label-local bag relations, and exactly one ForgetV(v) node per vertex.
TdReport validate_td(const NiceTreeDecomposition& ntd, const Graph& g);

}  // namespace mapkit
