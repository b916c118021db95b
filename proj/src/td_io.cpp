#include "mapkit/td_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mapkit {

namespace {

void write_header_and_bags(std::ostream& out, const TreeDecomposition& td, int n_vertices) {
  int maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  out << "s td " << td.num_nodes() << ' ' << maxbag << ' ' << n_vertices << '\n';
  for (int t = 0; t < td.num_nodes(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : td.bags[static_cast<std::size_t>(t)]) out << ' ' << v + 1;
    out << '\n';
  }
  for (int t = 0; t < td.num_nodes(); ++t)
    if (td.parent[static_cast<std::size_t>(t)] >= 0)
      out << td.parent[static_cast<std::size_t>(t)] + 1 << ' ' << t + 1 << '\n';
}

const char* nice_label_name(NiceLabel l) {
  switch (l) {
    case NiceLabel::Leaf: return "LEAF";
    case NiceLabel::IntroduceV: return "INTRODUCE";
    case NiceLabel::ForgetV: return "FORGET";
    case NiceLabel::Join: return "JOIN";
  }
  return "?";
}

const char* fcd_label_name(FcdLabel l) {
  switch (l) {
    case FcdLabel::Leaf: return "LEAF";
    case FcdLabel::Introduce: return "INTRODUCE";
    case FcdLabel::FakeIntroduce: return "FAKE_INTRODUCE";
    case FcdLabel::Forget: return "FORGET";
    case FcdLabel::ForgetSet: return "FORGET_SET";
    case FcdLabel::Join: return "JOIN";
    case FcdLabel::Redundant: return "REDUNDANT";
  }
  return "?";
}

}  // namespace

std::string write_td(const TreeDecomposition& td, int n_vertices) {
  std::ostringstream out;
  write_header_and_bags(out, td, n_vertices);
  return out.str();
}

std::string write_td(const NiceTreeDecomposition& ntd, int n_vertices) {
  std::ostringstream out;
  out << "c root " << ntd.td.root + 1 << '\n';
  for (int t = 0; t < ntd.num_nodes(); ++t) {
    const auto& lab = ntd.labels[static_cast<std::size_t>(t)];
    out << "c label " << t + 1 << ' ' << nice_label_name(lab.kind);
    if (lab.kind == NiceLabel::IntroduceV || lab.kind == NiceLabel::ForgetV) out << ' ' << lab.vertex + 1;
    out << '\n';
  }
  write_header_and_bags(out, ntd.td, n_vertices);
  return out.str();
}

std::string write_fcd(const FewCliquesDecomposition& f, int nation_count) {
  std::ostringstream out;
  out << "c root " << f.root + 1 << '\n';
  for (int t = 0; t < f.num_nodes(); ++t) {
    const auto& lab = f.label[static_cast<std::size_t>(t)];
    out << "c label " << t + 1 << ' ' << fcd_label_name(lab.kind);
    if (lab.kind == FcdLabel::Introduce || lab.kind == FcdLabel::FakeIntroduce || lab.kind == FcdLabel::Forget)
      out << ' ' << lab.vertex + 1;
    if (lab.kind == FcdLabel::ForgetSet)
      for (Vertex v : lab.removed_set) out << ' ' << v + 1;
    out << '\n';
    out << "c original " << t + 1;
    for (Vertex v : f.original[static_cast<std::size_t>(t)]) out << ' ' << v + 1;
    out << '\n';
    out << "c fake " << t + 1;
    for (Vertex v : f.fake[static_cast<std::size_t>(t)]) out << ' ' << v + 1;
    out << '\n';
    out << "c cliques " << t + 1;
    for (int s : f.cliques[static_cast<std::size_t>(t)]) out << ' ' << nation_count + s + 1;
    out << '\n';
  }
  int maxbag = 0;
  for (const auto& b : f.bag) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  out << "s td " << f.num_nodes() << ' ' << maxbag << ' ' << nation_count << '\n';
  for (int t = 0; t < f.num_nodes(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : f.bag[static_cast<std::size_t>(t)]) out << ' ' << v + 1;
    out << '\n';
  }
  for (int t = 0; t < f.num_nodes(); ++t)
    if (f.parent[static_cast<std::size_t>(t)] >= 0) out << f.parent[static_cast<std::size_t>(t)] + 1 << ' ' << t + 1 << '\n';
  return out.str();
}

TreeDecomposition read_td(std::istream& in) {
  std::string line;
  int num_bags = -1;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string td_tok;
      int maxbag, n;
      if (!(ss >> td_tok >> num_bags >> maxbag >> n) || td_tok != "td")
        throw std::runtime_error("read_td: malformed s-line");
      bags.assign(static_cast<std::size_t>(num_bags), {});
      continue;
    }
    if (tok == "b") {
      int id;
      if (!(ss >> id) || id < 1 || id > num_bags) throw std::runtime_error("read_td: bad bag id");
      Vertex v;
      while (ss >> v) bags[static_cast<std::size_t>(id - 1)].push_back(v - 1);
      std::sort(bags[static_cast<std::size_t>(id - 1)].begin(), bags[static_cast<std::size_t>(id - 1)].end());
      continue;
    }
    int a = std::stoi(tok), b;
    if (!(ss >> b)) throw std::runtime_error("read_td: malformed tree edge");
    tree_edges.emplace_back(a - 1, b - 1);
  }
  if (num_bags < 0) throw std::runtime_error("read_td: missing s-line");
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.parent.assign(static_cast<std::size_t>(num_bags), -1);
  // orient away from node 0
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_bags));
  for (auto [a, b] : tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  td.root = 0;
  std::vector<int> stack{0};
  std::vector<char> seen(static_cast<std::size_t>(num_bags), 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(t)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        td.parent[static_cast<std::size_t>(w)] = t;
        stack.push_back(w);
      }
  }
  return td;
}

}  // namespace mapkit
