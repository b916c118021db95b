#include "mapkit/crossing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mapkit {

PathSystem::PathSystem(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  int max_id = -1;
  for (Vertex v : vertices_) max_id = std::max(max_id, v);
  index_of_.assign(static_cast<std::size_t>(max_id + 1), -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) throw std::invalid_argument("PathSystem: negative vertex id");
    if (index_of_[static_cast<std::size_t>(vertices_[i])] != -1)
      throw std::invalid_argument("PathSystem: duplicate vertex");
    index_of_[static_cast<std::size_t>(vertices_[i])] = static_cast<int>(i);
  }
  adj_.assign(vertices_.size(), {});
  std::set<Edge> seen;
  std::vector<int> uf(vertices_.size());
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return uf[static_cast<std::size_t>(x)] == x ? x : uf[static_cast<std::size_t>(x)] = find(uf[static_cast<std::size_t>(x)]); };
  for (auto& e : edges_) {
    e = make_edge(e.first, e.second);
    if (e.first == e.second) throw std::invalid_argument("PathSystem: self-loop");
    if (!seen.insert(e).second) throw std::invalid_argument("PathSystem: duplicate edge");
    int a = pos(e.first), b = pos(e.second);
    if (a < 0 || b < 0) throw std::invalid_argument("PathSystem: edge endpoint not a member");
    adj_[static_cast<std::size_t>(a)].push_back(e.second);
    adj_[static_cast<std::size_t>(b)].push_back(e.first);
    if (adj_[static_cast<std::size_t>(a)].size() > 2 || adj_[static_cast<std::size_t>(b)].size() > 2)
      throw std::invalid_argument("PathSystem: vertex of degree > 2");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("PathSystem: contains a cycle");
    uf[static_cast<std::size_t>(ra)] = rb;
  }
}

int PathSystem::pos(Vertex v) const {
  if (v < 0 || v >= static_cast<int>(index_of_.size())) return -1;
  return index_of_[static_cast<std::size_t>(v)];
}

int PathSystem::degree(Vertex v) const {
  int p = pos(v);
  if (p < 0) throw std::out_of_range("PathSystem::degree: not a member");
  return static_cast<int>(adj_[static_cast<std::size_t>(p)].size());
}

std::vector<Vertex> PathSystem::endpoint_list() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (adj_[i].size() <= 1) out.push_back(vertices_[i]);
  return out;
}

Vertex PathSystem::path_other_end(Vertex v) const {
  if (degree(v) == 0) return v;
  Vertex prev = v;
  Vertex cur = adj_[static_cast<std::size_t>(pos(v))].front();
  while (true) {
    const auto& nb = adj_[static_cast<std::size_t>(pos(cur))];
    if (nb.size() == 1) return cur;
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
}

std::vector<Edge> complete_paths_to_cycle(const std::vector<Vertex>& order, const PathSystem& q) {
  if (order.size() < 3) throw std::invalid_argument("complete_paths_to_cycle: need at least 3 endpoints");
  {
    auto eps = q.endpoint_list();
    std::vector<Vertex> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (std::adjacent_find(sorted_order.begin(), sorted_order.end()) != sorted_order.end())
      throw std::invalid_argument("complete_paths_to_cycle: repeated vertex in order");
    std::sort(eps.begin(), eps.end());
    if (eps != sorted_order)
      throw std::invalid_argument("complete_paths_to_cycle: order must list exactly the endpoint set");
  }

  // Working state: degrees and path-end partners, updated as edges are added.
  std::map<Vertex, int> deg;
  std::map<Vertex, Vertex> partner;
  for (Vertex v : order) {
    deg[v] = q.degree(v);
    partner[v] = q.path_other_end(v);
  }
  std::set<Edge> existing(q.edges().begin(), q.edges().end());
  std::vector<Edge> F;
  auto add_edge = [&](Vertex a, Vertex b) {
    Edge e = make_edge(a, b);
    if (!existing.insert(e).second)
      throw std::logic_error("complete_paths_to_cycle: attempted to duplicate an edge");
    F.push_back(e);
    Vertex pa = partner[a], pb = partner[b];
    partner[pa] = pb;
    partner[pb] = pa;
    ++deg[a];
    ++deg[b];
  };

  std::vector<Vertex> x = order;  // the shrinking sequence of live endpoints
  auto drop = [&](Vertex v) { x.erase(std::find(x.begin(), x.end(), v)); };

  while (x.size() > 3) {
    Vertex u1 = x[0], u2 = x[1];
    if (deg[u1] == 1) {
      Vertex z = partner[u1];
      Vertex w = (u2 != z) ? u2 : x[2];
      bool w_was_free = deg[w] == 0;
      add_edge(u1, w);
      drop(u1);
      if (!w_was_free) drop(w);
    } else if (deg[u2] == 1) {
      add_edge(u1, u2);
      drop(u2);
    } else {
      Vertex u3 = x[2];
      bool u3_was_free = deg[u3] == 0;
      add_edge(u1, u2);
      add_edge(u1, u3);
      drop(u1);
      if (!u3_was_free) drop(u3);
    }
  }

  if (x.size() == 3) {
    if (deg[x[0]] == 0 && deg[x[1]] == 0 && deg[x[2]] == 0) {
      add_edge(x[0], x[1]);
      add_edge(x[1], x[2]);
      // close directly; partner bookkeeping is done
      Edge e = make_edge(x[2], x[0]);
      existing.insert(e);
      F.push_back(e);
    } else {
      // one path plus one isolated vertex
      Vertex z = -1;
      for (Vertex v : x)
        if (deg[v] == 0) z = v;
      if (z == -1) throw std::logic_error("complete_paths_to_cycle: unexpected base shape");
      std::vector<Vertex> ends;
      for (Vertex v : x)
        if (v != z) ends.push_back(v);
      add_edge(ends[0], z);
      Edge e = make_edge(z, ends[1]);
      existing.insert(e);
      F.push_back(e);
    }
  } else {  // x.size() == 2: a single open path, close it
    if (partner[x[0]] != x[1])
      throw std::logic_error("complete_paths_to_cycle: two endpoints on distinct paths");
    Edge e = make_edge(x[0], x[1]);
    if (existing.count(e)) throw std::logic_error("complete_paths_to_cycle: closing edge already present");
    existing.insert(e);
    F.push_back(e);
  }

  if (q.edges().size() + F.size() != q.vertices().size())
    throw std::logic_error("complete_paths_to_cycle: result is not a single cycle");
  return F;
}

std::vector<Vertex> clique_fake_order(const FewCliquesDecomposition& f, int special_id) {
  const auto& members = f.map->special_cliques.at(static_cast<std::size_t>(special_id));
  std::vector<Vertex> sigma1;
  for (int t : f.postorder) {
    const auto& lab = f.label[static_cast<std::size_t>(t)];
    if (lab.kind == FcdLabel::FakeIntroduce &&
        std::binary_search(members.begin(), members.end(), lab.vertex))
      sigma1.push_back(lab.vertex);
  }
  std::vector<Vertex> sigma = sigma1;
  for (Vertex v : members)
    if (std::find(sigma1.begin(), sigma1.end(), v) == sigma1.end()) sigma.push_back(v);
  return sigma;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
  return out;
}

bool is_simple_cycle(const Cycle& c, const Graph& g) {
  if (c.size() < 3) return false;
  std::set<Vertex> seen(c.begin(), c.end());
  if (seen.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

namespace {

Cycle walk_cycle(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Vertex start = adj.begin()->first;
  Cycle c{start};
  Vertex prev = -1, cur = start;
  do {
    auto& nb = adj[cur];
    if (nb.size() != 2) throw std::logic_error("walk_cycle: vertex degree != 2");
    std::sort(nb.begin(), nb.end());
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (cur != start) c.push_back(cur);
  } while (cur != start);
  if (c.size() != adj.size()) throw std::logic_error("walk_cycle: edge set is not one cycle");
  return c;
}

}  // namespace

Cycle reroute_cycle_in_clique(const Cycle& c, int special_id, const FewCliquesDecomposition& f) {
  if (!is_simple_cycle(c, f.map->graph))
    throw std::invalid_argument("reroute_cycle_in_clique: input is not a simple cycle of G");
  const auto& clique = f.map->special_cliques.at(static_cast<std::size_t>(special_id));
  std::set<Vertex> in_cycle(c.begin(), c.end());

  std::vector<Edge> kept, stripped;
  for (auto e : cycle_edges(c)) {
    if (std::binary_search(clique.begin(), clique.end(), e.first) &&
        std::binary_search(clique.begin(), clique.end(), e.second))
      stripped.push_back(e);
    else
      kept.push_back(e);
  }
  if (stripped.empty()) return c;

  PathSystem paths(Cycle(c.begin(), c.end()), kept);
  std::vector<Vertex> z = paths.endpoint_list();
  if (z.size() <= 2) return c;

  std::vector<Vertex> sigma = clique_fake_order(f, special_id);
  std::vector<Vertex> order;
  std::set<Vertex> zset(z.begin(), z.end());
  for (Vertex v : sigma)
    if (zset.count(v)) order.push_back(v);
  if (order.size() != z.size())
    throw std::logic_error("reroute_cycle_in_clique: endpoint outside the special clique");

  auto F = complete_paths_to_cycle(order, paths);
  std::vector<Edge> all = kept;
  all.insert(all.end(), F.begin(), F.end());
  Cycle out = walk_cycle(all);
  if (out.size() != c.size()) throw std::logic_error("reroute_cycle_in_clique: length changed");
  return out;
}

Cycle normalize_cycle(const Cycle& c, const FewCliquesDecomposition& f) {
  Cycle cur = c;
  for (int s = 0; s < f.map->num_specials(); ++s) cur = reroute_cycle_in_clique(cur, s, f);
  return cur;
}

std::vector<HostedTriangle> normalize_triangle_packing(const std::vector<HostedTriangle>& ts,
                                                       const FewCliquesDecomposition& f) {
  std::set<Vertex> used;
  std::map<int, std::vector<Vertex>> per_clique;
  for (const auto& t : ts) {
    const auto& clique = f.map->special_cliques.at(static_cast<std::size_t>(t.special_id));
    for (Vertex v : t.vertices) {
      if (!used.insert(v).second)
        throw std::invalid_argument("normalize_triangle_packing: triangles are not vertex-disjoint");
      if (!std::binary_search(clique.begin(), clique.end(), v))
        throw std::invalid_argument("normalize_triangle_packing: triangle vertex outside its hosting clique");
      per_clique[t.special_id].push_back(v);
    }
  }
  std::vector<HostedTriangle> out;
  for (auto& [s, verts] : per_clique) {
    if (verts.size() % 3 != 0)
      throw std::invalid_argument("normalize_triangle_packing: clique vertex count not divisible by 3");
    std::set<Vertex> vs(verts.begin(), verts.end());
    std::vector<Vertex> ordered;
    for (Vertex v : clique_fake_order(f, s))
      if (vs.count(v)) ordered.push_back(v);
    for (std::size_t i = 0; i + 3 <= ordered.size(); i += 3)
      out.push_back({{ordered[i], ordered[i + 1], ordered[i + 2]}, s});
  }
  return out;
}

std::vector<int> system_of_distinct_representatives(const std::vector<std::vector<int>>& sets) {
  const std::size_t q = sets.size();
  // flat scratch: per-set slices of a shared element buffer
  std::vector<int> buffer;
  std::vector<std::pair<int, int>> slice(q);  // offset, live length
  std::vector<int> elems, counts;             // occurrence tally, tiny linear map
  int odd_sized = 0;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& s = sets[i];
    if (s.empty()) throw std::invalid_argument("sdr: empty set");
    if (s.size() != 2) ++odd_sized;
    slice[i] = {static_cast<int>(buffer.size()), static_cast<int>(s.size())};
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (s[a] == s[b]) throw std::invalid_argument("sdr: repeated element inside a set");
      buffer.push_back(s[a]);
      std::size_t k = 0;
      while (k < elems.size() && elems[k] != s[a]) ++k;
      if (k == elems.size()) {
        elems.push_back(s[a]);
        counts.push_back(1);
      } else if (++counts[k] > 2) {
        throw std::invalid_argument("sdr: element occurs in more than two sets");
      }
    }
  }
  if (odd_sized > 1) throw std::invalid_argument("sdr: more than one set of size != 2");

  std::vector<int> reps(q, 0);
  std::vector<char> done(q, 0);
  for (std::size_t step = 0; step < q; ++step) {
    // the unique non-pair set if present, else the first live set
    std::size_t pick = q;
    for (std::size_t i = 0; i < q; ++i) {
      if (done[i]) continue;
      if (slice[i].second != 2) {
        pick = i;
        break;
      }
      if (pick == q) pick = i;
    }
    const int off = slice[pick].first, len = slice[pick].second;
    if (len <= 0) throw std::logic_error("sdr: recursion emptied a set");
    int z = buffer[static_cast<std::size_t>(off)];
    for (int a = 1; a < len; ++a) z = std::min(z, buffer[static_cast<std::size_t>(off + a)]);
    reps[pick] = z;
    done[pick] = 1;
    for (std::size_t i = 0; i < q; ++i) {
      if (done[i]) continue;
      auto& [o, l] = slice[i];
      for (int a = 0; a < l; ++a)
        if (buffer[static_cast<std::size_t>(o + a)] == z) {
          buffer[static_cast<std::size_t>(o + a)] = buffer[static_cast<std::size_t>(o + l - 1)];
          --l;
          break;
        }
    }
  }
  return reps;
}

CrossingProfile crossing_profile(const std::vector<Edge>& edges, const FewCliquesDecomposition& f) {
  CrossingProfile p;
  p.per_node.assign(static_cast<std::size_t>(f.num_nodes()), 0);
  for (int t = 0; t < f.num_nodes(); ++t) {
    int count = 0;
    for (auto [u, v] : edges) {
      bool cross = (f.in_bag(t, u) && !f.in_gamma(t, v)) || (f.in_bag(t, v) && !f.in_gamma(t, u));
      if (cross) ++count;
    }
    p.per_node[static_cast<std::size_t>(t)] = count;
  }
  return p;
}

}  // namespace mapkit
