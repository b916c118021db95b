#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mapkit {

using Vertex = int;

// Simple undirected graph with sorted adjacency lists.
// Invariants: no self-loops, no duplicate edges, symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }

  int num_edges() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d += a.size();
    return static_cast<int>(d / 2);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Inserts {u,v}; ignores duplicates, rejects self-loops.
  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
      throw std::out_of_range("vertex index out of range");
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  static void insert_sorted(std::vector<Vertex>& a, Vertex v) {
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) a.insert(it, v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

// Fixed-capacity bitset over vertex ids, used for bag/closure sets.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int universe() const { return n_; }
  void set(int v) { words_[static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63); }
  void reset(int v) { words_[static_cast<std::size_t>(v >> 6)] &= ~(1ULL << (v & 63)); }
  bool test(int v) const { return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1ULL; }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (test(v)) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mapkit
