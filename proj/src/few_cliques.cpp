#include "mapkit/few_cliques.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mapkit {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

FewCliquesDecomposition derive_fcd(const NiceTreeDecomposition& d, const MapGraph& m,
                                   const BipartiteWitness& w) {
  {
    auto rep = validate_td(d, w.graph);
    if (!rep.valid())
      throw std::invalid_argument("derive_fcd: source is not a valid nice decomposition of the witness: " +
                                  rep.violations.front());
  }
  const int W = w.nation_count;
  const int nodes = d.num_nodes();
  FewCliquesDecomposition f;
  f.parent = d.td.parent;
  f.root = d.td.root;
  f.child_list = d.td.children();
  f.source_td = &d;
  f.map = &m;
  f.bag.resize(static_cast<std::size_t>(nodes));
  f.original.resize(static_cast<std::size_t>(nodes));
  f.fake.resize(static_cast<std::size_t>(nodes));
  f.cliques.resize(static_cast<std::size_t>(nodes));
  f.label.resize(static_cast<std::size_t>(nodes));
  f.gamma.assign(static_cast<std::size_t>(nodes), VertexSet(W));
  f.depth.assign(static_cast<std::size_t>(nodes), 0);

  // postorder and depths
  f.postorder.reserve(static_cast<std::size_t>(nodes));
  {
    std::vector<std::pair<int, int>> stack{{f.root, 0}};
    while (!stack.empty()) {
      auto& [t, stage] = stack.back();
      const auto& kids = f.child_list[static_cast<std::size_t>(t)];
      if (stage < static_cast<int>(kids.size())) {
        int c = kids[static_cast<std::size_t>(stage)];
        ++stage;
        f.depth[static_cast<std::size_t>(c)] = f.depth[static_cast<std::size_t>(t)] + 1;
        stack.emplace_back(c, 0);
      } else {
        f.postorder.push_back(t);
        stack.pop_back();
      }
    }
  }
  f.postorder_index.assign(static_cast<std::size_t>(nodes), -1);
  for (int i = 0; i < nodes; ++i)
    f.postorder_index[static_cast<std::size_t>(f.postorder[static_cast<std::size_t>(i)])] = i;

  // Gamma over V(B), materialized incrementally by child unions. The closures
  // over V(G) are the same sets masked to nations.
  std::vector<VertexSet> gammaB(static_cast<std::size_t>(nodes), VertexSet(w.num_vertices()));
  for (int t : f.postorder) {
    auto& gb = gammaB[static_cast<std::size_t>(t)];
    for (int c : f.child_list[static_cast<std::size_t>(t)]) gb |= gammaB[static_cast<std::size_t>(c)];
    for (Vertex v : d.td.bags[static_cast<std::size_t>(t)]) gb.set(v);
  }

  for (int t : f.postorder) {
    const auto& src_bag = d.td.bags[static_cast<std::size_t>(t)];
    const auto& gb = gammaB[static_cast<std::size_t>(t)];
    std::set<Vertex> members;
    for (Vertex v : src_bag) {
      if (v < W) {
        members.insert(v);
        f.original[static_cast<std::size_t>(t)].push_back(v);
      } else {
        f.cliques[static_cast<std::size_t>(t)].push_back(v - W);
      }
    }
    for (int s : f.cliques[static_cast<std::size_t>(t)])
      for (Vertex v : m.special_cliques[static_cast<std::size_t>(s)])
        if (gb.test(v)) members.insert(v);
    f.bag[static_cast<std::size_t>(t)].assign(members.begin(), members.end());
    std::set_difference(members.begin(), members.end(),
                        f.original[static_cast<std::size_t>(t)].begin(),
                        f.original[static_cast<std::size_t>(t)].end(),
                        std::back_inserter(f.fake[static_cast<std::size_t>(t)]));
    auto& gg = f.gamma[static_cast<std::size_t>(t)];
    for (int c : f.child_list[static_cast<std::size_t>(t)]) gg |= f.gamma[static_cast<std::size_t>(c)];
    for (Vertex v : f.bag[static_cast<std::size_t>(t)]) gg.set(v);

    // labeling per the source label
    const auto& src = d.labels[static_cast<std::size_t>(t)];
    auto& lab = f.label[static_cast<std::size_t>(t)];
    switch (src.kind) {
      case NiceLabel::Leaf:
        lab.kind = FcdLabel::Leaf;
        break;
      case NiceLabel::Join:
        lab.kind = FcdLabel::Join;
        break;
      case NiceLabel::IntroduceV:
        if (src.vertex < W) {
          lab.kind = FcdLabel::Introduce;
          lab.vertex = src.vertex;
        } else {
          lab.kind = FcdLabel::Redundant;
        }
        break;
      case NiceLabel::ForgetV:
        if (src.vertex < W) {
          const auto& fk = f.fake[static_cast<std::size_t>(t)];
          if (std::binary_search(fk.begin(), fk.end(), src.vertex)) {
            lab.kind = FcdLabel::FakeIntroduce;
            lab.vertex = src.vertex;
          } else {
            lab.kind = FcdLabel::Forget;
            lab.vertex = src.vertex;
          }
        } else {
          lab.kind = FcdLabel::ForgetSet;
          const int child = f.child_list[static_cast<std::size_t>(t)].at(0);
          std::set_difference(f.bag[static_cast<std::size_t>(child)].begin(),
                              f.bag[static_cast<std::size_t>(child)].end(),
                              f.bag[static_cast<std::size_t>(t)].begin(),
                              f.bag[static_cast<std::size_t>(t)].end(),
                              std::back_inserter(lab.removed_set));
        }
        break;
    }
  }
  return f;
}

CrossingClassification crossing_classification(const FewCliquesDecomposition& f, int t) {
  CrossingClassification out;
  const Graph& g = f.map->graph;
  const auto& orig = f.original[static_cast<std::size_t>(t)];
  for (auto [u, v] : g.edges()) {
    const bool iu = f.in_gamma(t, u), iv = f.in_gamma(t, v);
    if (iu == iv) continue;                 // not a boundary edge
    const Vertex inside = iu ? u : v;
    const Vertex outside = iu ? v : u;
    if (!f.in_bag(t, inside))
      throw std::logic_error("crossing_classification: boundary edge " + edge_name(u, v) +
                             " has its inner endpoint outside the bag of node " + std::to_string(t));
    if (std::binary_search(orig.begin(), orig.end(), inside)) {
      out.incident_original.emplace_back(u, v);
      continue;
    }
    bool classified = false;
    for (int s : f.cliques[static_cast<std::size_t>(t)]) {
      const auto& members = f.map->special_cliques[static_cast<std::size_t>(s)];
      if (std::binary_search(members.begin(), members.end(), inside) &&
          std::binary_search(members.begin(), members.end(), outside)) {
        classified = true;
        break;
      }
    }
    if (!classified)
      throw std::logic_error("crossing_classification: unclassifiable boundary edge " + edge_name(u, v) +
                             " at node " + std::to_string(t));
    out.inside_clique.emplace_back(u, v);
  }
  return out;
}

std::map<std::pair<Vertex, Vertex>, int> edge_decision_points(const FewCliquesDecomposition& f) {
  const Graph& g = f.map->graph;
  std::map<std::pair<Vertex, Vertex>, int> decision;
  for (int t : f.postorder) {
    const auto& b = f.bag[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!g.has_edge(b[i], b[j])) continue;
        auto key = std::make_pair(b[i], b[j]);
        auto it = decision.find(key);
        if (it == decision.end()) {
          decision.emplace(key, t);
          continue;
        }
        const int old = it->second;
        const int dt = f.depth[static_cast<std::size_t>(t)], dold = f.depth[static_cast<std::size_t>(old)];
        if (dt > dold || (dt == dold && f.postorder_index[static_cast<std::size_t>(t)] <
                                            f.postorder_index[static_cast<std::size_t>(old)]))
          it->second = t;
      }
  }
  for (auto [u, v] : g.edges())
    if (!decision.count({u, v}))
      throw std::logic_error("edge_decision_points: edge " + edge_name(u, v) +
                             " has no co-residency node (axiom (b) fails)");
  return decision;
}

FcdReport validate_fcd(const FewCliquesDecomposition& f) {
  FcdReport report;
  const NiceTreeDecomposition& d = *f.source_td;
  const MapGraph& m = *f.map;
  const int W = m.num_nations();
  const int nodes = f.num_nodes();
  const int src_width = d.width();

  // Decomposition axioms for G over the derived bags.
  {
    TreeDecomposition td;
    td.parent = f.parent;
    td.bags = f.bag;
    td.root = f.root;
    auto rep = validate_td(td, m.graph);
    for (auto& v : rep.violations) report.violations.push_back("G-axioms: " + v);
  }

  // Per-node structural checks.
  for (int t = 0; t < nodes; ++t) {
    const auto& orig = f.original[static_cast<std::size_t>(t)];
    const auto& fake = f.fake[static_cast<std::size_t>(t)];
    std::vector<Vertex> inter;
    std::set_intersection(orig.begin(), orig.end(), fake.begin(), fake.end(), std::back_inserter(inter));
    if (!inter.empty())
      report.violations.push_back("node " + std::to_string(t) + ": original and fake sets intersect");
    if (static_cast<int>(orig.size() + f.cliques[static_cast<std::size_t>(t)].size()) > src_width + 1)
      report.violations.push_back("node " + std::to_string(t) + ": |original| + |cliques| exceeds width+1");
    // Definitional recomputation of the bag from the source decomposition.
    std::set<Vertex> expect(orig.begin(), orig.end());
    for (int s : f.cliques[static_cast<std::size_t>(t)])
      for (Vertex v : m.special_cliques[static_cast<std::size_t>(s)])
        if (f.in_gamma(t, v)) expect.insert(v);
    std::vector<Vertex> expect_v(expect.begin(), expect.end());
    if (expect_v != f.bag[static_cast<std::size_t>(t)])
      report.violations.push_back("node " + std::to_string(t) + ": bag does not match its definition");
  }

  // Locate forget nodes of the source decomposition.
  std::vector<int> forget_node(static_cast<std::size_t>(W + m.num_specials()), -1);
  for (int t = 0; t < nodes; ++t) {
    const auto& lab = d.labels[static_cast<std::size_t>(t)];
    if (lab.kind == NiceLabel::ForgetV) forget_node[static_cast<std::size_t>(lab.vertex)] = t;
  }

  // Fake-path property: Q = {t : v in Fake(t), s in source bag(t)} induces the
  // path between forget(v) and the child of forget(s).
  for (int s = 0; s < m.num_specials(); ++s) {
    const int fs = forget_node[static_cast<std::size_t>(W + s)];
    for (Vertex v : m.special_cliques[static_cast<std::size_t>(s)]) {
      std::vector<int> q;
      for (int t = 0; t < nodes; ++t) {
        const auto& fake = f.fake[static_cast<std::size_t>(t)];
        if (!std::binary_search(fake.begin(), fake.end(), v)) continue;
        const auto& sb = d.td.bags[static_cast<std::size_t>(t)];
        if (std::binary_search(sb.begin(), sb.end(), static_cast<Vertex>(W + s))) q.push_back(t);
      }
      if (q.empty()) continue;
      const int x = forget_node[static_cast<std::size_t>(v)];
      if (x < 0 || fs < 0) {
        report.violations.push_back("fake-path: missing forget node for v=" + std::to_string(v) +
                                    " or s=" + std::to_string(s));
        continue;
      }
      const int y = f.child_list[static_cast<std::size_t>(fs)].at(0);
      std::vector<int> path;
      for (int cur = x;; cur = f.parent[static_cast<std::size_t>(cur)]) {
        if (cur == -1) {
          path.clear();
          break;
        }
        path.push_back(cur);
        if (cur == y) break;
      }
      std::sort(path.begin(), path.end());
      std::sort(q.begin(), q.end());
      if (path.empty() || path != q)
        report.violations.push_back("fake-path violated for vertex " + std::to_string(v) + ", special " +
                                    std::to_string(s));
    }
  }

  // Label-driven identities and fake-introduce bookkeeping.
  std::vector<int> fake_intro_count(static_cast<std::size_t>(W), 0);
  std::vector<int> fake_intro_node(static_cast<std::size_t>(W), -1);
  for (int t = 0; t < nodes; ++t) {
    const auto& lab = f.label[static_cast<std::size_t>(t)];
    const auto& kids = f.child_list[static_cast<std::size_t>(t)];
    switch (lab.kind) {
      case FcdLabel::FakeIntroduce: {
        ++fake_intro_count[static_cast<std::size_t>(lab.vertex)];
        fake_intro_node[static_cast<std::size_t>(lab.vertex)] = t;
        const int c = kids.at(0);
        if (f.bag[static_cast<std::size_t>(t)] != f.bag[static_cast<std::size_t>(c)])
          report.violations.push_back("fake-introduce node " + std::to_string(t) + ": bag changed");
        break;
      }
      case FcdLabel::Redundant: {
        const int c = kids.at(0);
        if (f.original[static_cast<std::size_t>(t)] != f.original[static_cast<std::size_t>(c)] ||
            f.fake[static_cast<std::size_t>(t)] != f.fake[static_cast<std::size_t>(c)])
          report.violations.push_back("redundant node " + std::to_string(t) +
                                      ": Original/Fake changed across a special introduce");
        break;
      }
      case FcdLabel::Join: {
        if (kids.size() != 2) {
          report.violations.push_back("join node " + std::to_string(t) + " lacks two children");
          break;
        }
        const int a = kids[0], b = kids[1];
        if (f.original[static_cast<std::size_t>(t)] != f.original[static_cast<std::size_t>(a)] ||
            f.original[static_cast<std::size_t>(t)] != f.original[static_cast<std::size_t>(b)])
          report.violations.push_back("join node " + std::to_string(t) + ": Original differs across children");
        if (f.cliques[static_cast<std::size_t>(t)] != f.cliques[static_cast<std::size_t>(a)] ||
            f.cliques[static_cast<std::size_t>(t)] != f.cliques[static_cast<std::size_t>(b)])
          report.violations.push_back("join node " + std::to_string(t) + ": Cliques differs across children");
        std::vector<Vertex> inter, uni;
        std::set_intersection(f.fake[static_cast<std::size_t>(a)].begin(), f.fake[static_cast<std::size_t>(a)].end(),
                              f.fake[static_cast<std::size_t>(b)].begin(), f.fake[static_cast<std::size_t>(b)].end(),
                              std::back_inserter(inter));
        if (!inter.empty())
          report.violations.push_back("join node " + std::to_string(t) + ": child fake sets intersect");
        std::set_union(f.fake[static_cast<std::size_t>(a)].begin(), f.fake[static_cast<std::size_t>(a)].end(),
                       f.fake[static_cast<std::size_t>(b)].begin(), f.fake[static_cast<std::size_t>(b)].end(),
                       std::back_inserter(uni));
        if (uni != f.fake[static_cast<std::size_t>(t)])
          report.violations.push_back("join node " + std::to_string(t) + ": fake set is not the child union");
        break;
      }
      default:
        break;
    }
  }
  for (Vertex v = 0; v < W; ++v)
    if (fake_intro_count[static_cast<std::size_t>(v)] > 1)
      report.violations.push_back("vertex " + std::to_string(v) + " has multiple fake-introduce nodes");

  // Upward-path occurrence: every fake occurrence of v sits on the path from
  // its unique fake-introduce node toward the root, contiguously.
  for (int t = 0; t < nodes; ++t) {
    for (Vertex v : f.fake[static_cast<std::size_t>(t)]) {
      const int ti = fake_intro_node[static_cast<std::size_t>(v)];
      if (ti == -1 || fake_intro_count[static_cast<std::size_t>(v)] != 1) {
        report.violations.push_back("vertex " + std::to_string(v) + " is fake at node " + std::to_string(t) +
                                    " but lacks a unique fake-introduce node");
        continue;
      }
      if (!f.is_ancestor(t, ti)) {
        report.violations.push_back("fake occurrence of " + std::to_string(v) + " at node " + std::to_string(t) +
                                    " is not an ancestor of its fake-introduce node");
        continue;
      }
      for (int cur = ti; cur != t; cur = f.parent[static_cast<std::size_t>(cur)]) {
        const auto& fk = f.fake[static_cast<std::size_t>(cur)];
        if (!std::binary_search(fk.begin(), fk.end(), v)) {
          report.violations.push_back("fake occurrences of " + std::to_string(v) +
                                      " are not contiguous toward node " + std::to_string(t));
          break;
        }
      }
    }
  }

  // Crossing-edge classification must be exhaustive at every node.
  for (int t = 0; t < nodes; ++t) {
    try {
      crossing_classification(f, t);
    } catch (const std::logic_error& e) {
      report.violations.push_back(e.what());
    }
  }
  return report;
}

}  // namespace mapkit
