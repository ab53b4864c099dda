#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "walkreg/error.hpp"

namespace walkreg {

using Vertex = int;

/// Largest vertex count accepted anywhere in the library. Keeps graph6 in its
/// single-byte header regime and lets one adjacency row fit in a machine word.
inline constexpr int kMaxVertices = 62;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit row mask per vertex; the relation is kept
/// symmetric and loop-free by construction. Values are immutable once built
/// (the only mutators are used by builders and return a new graph).
class Graph {
 public:
  Graph() : Graph(1) {}

  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices) {
      throw Error(Errc::OversizeGraph, "vertex count " + std::to_string(n) + " outside 1..62");
    }
  }

  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Builds from row masks; rows must already be symmetric and loop-free.
  static Graph from_rows(int n, std::vector<std::uint64_t> rows) {
    Graph g(n);
    if (rows.size() != static_cast<std::size_t>(n)) {
      throw Error(Errc::DimensionMismatch, "row count does not match vertex count");
    }
    for (int u = 0; u < n; ++u) {
      if (rows[u] >> n) throw Error(Errc::BadVertex, "row mask references vertex >= n");
      if (rows[u] & bit(u)) throw Error(Errc::BadVertex, "self-loop at vertex " + std::to_string(u));
      for (int v = 0; v < n; ++v) {
        if (((rows[u] >> v) & 1) != ((rows[v] >> u) & 1)) {
          throw Error(Errc::BadVertex, "adjacency rows are not symmetric");
        }
      }
    }
    g.rows_ = std::move(rows);
    g.m_ = 0;
    for (auto r : g.rows_) g.m_ += std::popcount(r);
    g.m_ /= 2;
    return g;
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return (rows_[u] >> v) & 1; }
  std::uint64_t row(Vertex u) const noexcept { return rows_[u]; }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
  int degree(Vertex u) const noexcept { return std::popcount(rows_[u]); }

  std::vector<Vertex> neighbors(Vertex u) const {
    std::vector<Vertex> out;
    for (auto r = rows_[u]; r; r &= r - 1) out.push_back(std::countr_zero(r));
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Errc::BadVertex, "self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++m_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!adjacent(u, v)) return;
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
    --m_;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  /// Graph h with h.adjacent(perm[u], perm[v]) == adjacent(u, v).
  Graph relabeled(const std::vector<Vertex>& perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      for (auto r = rows_[u]; r; r &= r - 1) {
        int v = std::countr_zero(r);
        g.rows_[perm[u]] |= bit(perm[v]);
      }
    }
    g.m_ = m_;
    return g;
  }

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void check_vertex(Vertex v) const {
    if (!valid_vertex(v)) {
      throw Error(Errc::BadVertex,
                  "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }

 private:
  int n_;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct DegreeSequence {
  std::vector<int> degrees;

  int total() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }
};

inline DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.degrees.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) ds.degrees.push_back(g.degree(v));
  return ds;
}

/// Common degree if g is regular, -1 otherwise.
inline int regular_degree(const Graph& g) {
  int k = g.degree(0);
  for (int v = 1; v < g.n(); ++v) {
    if (g.degree(v) != k) return -1;
  }
  return k;
}

inline bool is_regular(const Graph& g) { return regular_degree(g) >= 0; }

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

/// Breadth-first search from vertex 0 over the row masks.
inline bool is_connected(const Graph& g) {
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
}

/// BFS distances from root; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex root) {
  std::vector<int> dist(g.n(), -1);
  dist[root] = 0;
  std::uint64_t seen = Graph::bit(root);
  std::uint64_t frontier = seen;
  for (int d = 1; frontier; ++d) {
    std::uint64_t next = 0;
    for (auto f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
    for (auto f = frontier; f; f &= f - 1) dist[std::countr_zero(f)] = d;
  }
  return dist;
}

}  // namespace walkreg
