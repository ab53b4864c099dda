#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "walkreg/graph.hpp"
#include "walkreg/graph6.hpp"

namespace walkreg {

/// Orbit id per vertex; ids are numbered by first appearance in vertex order.
struct OrbitPartition {
  std::vector<int> orbit_of;
  int count = 0;
};

/// graph6 record of the canonically relabeled graph.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct IntersectionArray {
  int diameter = 0;
  std::vector<int> b;  // b_0 .. b_{D-1}
  std::vector<int> c;  // c_1 .. c_D

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

  /// "{b_0,...,b_{D-1};c_1,...,c_D}"
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += ";";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
  }
};

using Permutation = std::vector<Vertex>;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void unite_cycles(const Permutation& p) {
    for (int v = 0; v < static_cast<int>(p.size()); ++v) unite(v, p[v]);
  }

 private:
  std::vector<int> parent_;
};

/// Ordered partition of the vertex set; cells are contiguous ranges of `lab`
/// identified by their start position.
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> start_of;  // vertex -> start of its cell
  std::vector<int> end_at;    // cell start -> one past its last position
  int cells = 0;

  int n() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == n(); }

  std::uint64_t mask(int start) const {
    std::uint64_t m = 0;
    for (int p = start; p < end_at[start]; ++p) m |= Graph::bit(lab[p]);
    return m;
  }

  /// Cells ordered by colour value.
  static Partition from_colors(const std::vector<int>& colors) {
    const int n = static_cast<int>(colors.size());
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    p.start_of.assign(n, 0);
    p.end_at.assign(n, 0);
    for (int s = 0; s < n;) {
      int e = s;
      while (e < n && colors[p.lab[e]] == colors[p.lab[s]]) ++e;
      p.end_at[s] = e;
      for (int q = s; q < e; ++q) p.start_of[p.lab[q]] = s;
      ++p.cells;
      s = e;
    }
    return p;
  }

  std::vector<int> starts() const {
    std::vector<int> out;
    for (int s = 0; s < n(); s = end_at[s]) out.push_back(s);
    return out;
  }

  /// Moves v to the front of its cell as a new singleton cell; returns its start.
  int individualize(int v) {
    const int s = start_of[v];
    const int e = end_at[s];
    const auto it = std::find(lab.begin() + s, lab.begin() + e, v);
    std::rotate(lab.begin() + s, it, it + 1);
    if (e - s > 1) {
      end_at[s] = s + 1;
      end_at[s + 1] = e;
      for (int q = s + 1; q < e; ++q) start_of[lab[q]] = s + 1;
      ++cells;
    }
    return s;
  }

  /// First smallest non-singleton cell, or -1 when discrete.
  int target_cell() const {
    int best = -1, best_size = n() + 1;
    for (int s = 0; s < n(); s = end_at[s]) {
      const int size = end_at[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<int> cell_members_sorted(int start) const {
    std::vector<int> out(lab.begin() + start, lab.begin() + end_at[start]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Refines to the coarsest equitable partition finer than p. Splitting is
/// driven by cell positions and neighbour counts only, so the result (and the
/// trace) is invariant under relabeling of the graph.
inline void refine(const Graph& g, Partition& p, std::vector<int> queue, std::vector<int>& trace) {
  const int n = p.n();
  std::vector<char> queued(n, 0);
  for (int s : queue) queued[s] = 1;
  std::vector<int> count(n);
  std::vector<int> order(n);
  for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
    const int w = queue[head];
    queued[w] = 0;
    const std::uint64_t splitter = p.mask(w);
    for (int s = 0; s < n;) {
      const int e = p.end_at[s];
      if (e - s == 1) {
        s = e;
        continue;
      }
      bool uniform = true;
      for (int q = s; q < e; ++q) {
        count[p.lab[q]] = std::popcount(g.row(p.lab[q]) & splitter);
        uniform = uniform && count[p.lab[q]] == count[p.lab[s]];
      }
      if (uniform) {
        s = e;
        continue;
      }
      std::stable_sort(p.lab.begin() + s, p.lab.begin() + e,
                       [&](int a, int b) { return count[a] < count[b]; });
      trace.push_back(-1 - w);
      trace.push_back(s);
      const bool was_queued = queued[s];
      for (int f = s; f < e;) {
        int fe = f;
        while (fe < e && count[p.lab[fe]] == count[p.lab[f]]) ++fe;
        p.end_at[f] = fe;
        for (int q = f; q < fe; ++q) p.start_of[p.lab[q]] = f;
        if (f != s) ++p.cells;
        trace.push_back(count[p.lab[f]]);
        trace.push_back(fe - f);
        if (!(f == s && was_queued)) {
          queued[f] = 1;
          queue.push_back(f);
        }
        f = fe;
      }
      s = e;
    }
  }
  trace.push_back(p.cells);
}

inline std::vector<std::uint64_t> leaf_rows(const Graph& g, const Partition& p) {
  const int n = p.n();
  std::vector<int> pos(n);
  for (int q = 0; q < n; ++q) pos[p.lab[q]] = q;
  std::vector<std::uint64_t> rows(n, 0);
  for (int q = 0; q < n; ++q) {
    for (auto r = g.row(p.lab[q]); r; r &= r - 1) rows[q] |= Graph::bit(pos[std::countr_zero(r)]);
  }
  return rows;
}

/// Individualization-refinement search for generators of Aut(g, colours).
///
/// The first path individualizes the smallest vertex of the first smallest
/// non-singleton cell at each level. Then, bottom-up, every other vertex of
/// each target cell not yet known to share an orbit with the first choice is
/// tried: its subtree is searched for a leaf whose relabeled graph equals the
/// first leaf's, pruning nodes whose refinement trace differs. Found
/// automorphisms fix the path prefix, so they extend a stabilizer chain and
/// generate the whole group.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const std::vector<int>& colors) : g_(g), uf_(g.n()) {
    Partition root = Partition::from_colors(colors);
    std::vector<int> trace;
    refine(g_, root, root.starts(), trace);
    path_.push_back({root, std::move(trace), -1, -1, {}});
    while (!path_.back().part.discrete()) {
      Node& node = path_.back();
      node.target = node.part.target_cell();
      node.cell = node.part.cell_members_sorted(node.target);
      node.chosen = node.cell.front();
      Partition child = node.part;
      std::vector<int> child_trace;
      const int s = child.individualize(node.chosen);
      refine(g_, child, {s}, child_trace);
      path_.push_back({std::move(child), std::move(child_trace), -1, -1, {}});
    }
    first_leaf_ = path_.back().part.lab;
    first_rows_ = leaf_rows(g_, path_.back().part);

    for (int level = static_cast<int>(path_.size()) - 2; level >= 0; --level) {
      const Node& node = path_[level];
      for (int u : node.cell) {
        if (u == node.chosen || uf_.find(u) == uf_.find(node.chosen)) continue;
        Partition child = node.part;
        std::vector<int> child_trace;
        const int s = child.individualize(u);
        refine(g_, child, {s}, child_trace);
        if (auto gamma = search(child, child_trace, level + 1)) {
          uf_.unite_cycles(*gamma);
          generators_.push_back(std::move(*gamma));
        }
      }
    }
  }

  const std::vector<Permutation>& generators() const { return generators_; }

  OrbitPartition orbits() {
    OrbitPartition op;
    op.orbit_of.assign(g_.n(), -1);
    std::vector<int> id_of_root(g_.n(), -1);
    for (int v = 0; v < g_.n(); ++v) {
      const int r = uf_.find(v);
      if (id_of_root[r] < 0) id_of_root[r] = op.count++;
      op.orbit_of[v] = id_of_root[r];
    }
    return op;
  }

 private:
  struct Node {
    Partition part;
    std::vector<int> trace;  // produced when this node was refined
    int target;
    int chosen;
    std::vector<int> cell;
  };

  std::optional<Permutation> search(const Partition& p, const std::vector<int>& trace, std::size_t depth) {
    if (trace != path_[depth].trace) return std::nullopt;
    if (p.discrete()) {
      if (leaf_rows(g_, p) != first_rows_) return std::nullopt;
      Permutation gamma(g_.n());
      for (int q = 0; q < g_.n(); ++q) gamma[first_leaf_[q]] = p.lab[q];
      return gamma;
    }
    const int target = p.target_cell();
    for (int w : p.cell_members_sorted(target)) {
      Partition child = p;
      std::vector<int> child_trace;
      const int s = child.individualize(w);
      refine(g_, child, {s}, child_trace);
      if (auto gamma = search(child, child_trace, depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const Graph& g_;
  UnionFind uf_;
  std::vector<Node> path_;
  std::vector<int> first_leaf_;
  std::vector<std::uint64_t> first_rows_;
  std::vector<Permutation> generators_;
};

inline bool fixes_prefix(const Permutation& gamma, const std::vector<int>& prefix, int len) {
  for (int i = 0; i < len; ++i) {
    if (gamma[prefix[i]] != prefix[i]) return false;
  }
  return true;
}

/// Lexicographically least graph6 body over all relabelings.
///
/// Vertices are assigned to positions 0, 1, ... in turn. Placing a vertex at
/// position j fixes column j of the upper triangle (its adjacency to the
/// already placed vertices), which is the next block of j bits of the body, so
/// only candidates with the least column can lead to the minimum and any
/// prefix above the best one found is cut. A leaf equal to the best leaf gives
/// an automorphism; the search then jumps back to where the two paths split,
/// and later candidates that an automorphism fixing the placed prefix maps
/// onto an explored sibling are skipped.
class LexMinSearch {
 public:
  explicit LexMinSearch(const Graph& g) : g_(g), n_(g.n()), order_(n_), cols_(n_), best_cols_(n_) {
    std::vector<std::uint64_t> keys(n_, 0);
    descend(0, 0, keys);
  }

  /// Seeds the incumbent with the identity labeling and stops at the first
  /// prefix that beats it; `identity_is_least()` then answers whether g is
  /// already in canonical form.
  LexMinSearch(const Graph& g, bool /*check_identity*/)
      : g_(g), n_(g.n()), order_(n_), cols_(n_), best_cols_(n_), best_order_(n_), have_best_(true) {
    for (int j = 0; j < n_; ++j) {
      best_order_[j] = j;
      std::uint64_t key = 0;
      for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(i, j) ? 1 : 0);
      best_cols_[j] = key;
    }
    stop_on_improvement_ = true;
    std::vector<std::uint64_t> keys(n_, 0);
    descend(0, 0, keys);
  }

  const std::vector<int>& best_order() const { return best_order_; }
  bool identity_is_least() const { return !improved_; }
  const std::vector<Permutation>& automorphisms() const { return gens_; }

 private:
  // -1: current prefix below best, 0: equal, +1: above.
  int compare_prefix(int level) const {
    for (int i = 0; i < level; ++i) {
      if (cols_[i] != best_cols_[i]) return cols_[i] < best_cols_[i] ? -1 : 1;
    }
    return 0;
  }

  void leaf() {
    if (!have_best_ || compare_prefix(n_) < 0) {
      improved_ = true;
      best_cols_ = cols_;
      best_order_ = order_;
      have_best_ = true;
      return;
    }
    Permutation gamma(n_);
    for (int q = 0; q < n_; ++q) gamma[best_order_[q]] = order_[q];
    int split = 0;
    while (split < n_ && order_[split] == best_order_[split]) ++split;
    gens_.push_back(std::move(gamma));
    backjump_ = split;
  }

  // keys[u] = column of u against the placed prefix, earliest position most significant.
  void descend(int level, std::uint64_t placed, const std::vector<std::uint64_t>& keys) {
    if (level == n_) return leaf();

    std::uint64_t least = ~std::uint64_t{0};
    for (int u = 0; u < n_; ++u) {
      if (!(placed & Graph::bit(u)) && keys[u] < least) least = keys[u];
    }

    std::vector<int> explored;
    std::vector<std::uint64_t> child_keys(n_);
    for (int u = 0; u < n_; ++u) {
      if ((placed & Graph::bit(u)) || keys[u] != least) continue;
      if (improved_ && stop_on_improvement_) return;
      if (have_best_) {
        const int rel = compare_prefix(level);
        if (rel > 0 || (rel == 0 && least > best_cols_[level])) return;
        if (rel == 0 && least < best_cols_[level] && stop_on_improvement_) {
          improved_ = true;
          return;
        }
      }
      if (!explored.empty() && equivalent_to_explored(u, explored, level)) continue;
      order_[level] = u;
      cols_[level] = least;
      const std::uint64_t row = g_.row(u);
      for (int w = 0; w < n_; ++w) child_keys[w] = (keys[w] << 1) | ((row >> w) & 1);
      descend(level + 1, placed | Graph::bit(u), child_keys);
      explored.push_back(u);
      if (backjump_ >= 0) {
        if (backjump_ < level) return;
        backjump_ = -1;
      }
    }
  }

  bool equivalent_to_explored(int u, const std::vector<int>& explored, int level) const {
    std::uint64_t orbit = Graph::bit(u);
    std::uint64_t frontier = orbit;
    while (frontier) {
      std::uint64_t next = 0;
      for (const auto& gamma : gens_) {
        if (!fixes_prefix(gamma, order_, level)) continue;
        for (auto f = frontier; f; f &= f - 1) next |= Graph::bit(gamma[std::countr_zero(f)]);
      }
      frontier = next & ~orbit;
      orbit |= next;
    }
    for (int e : explored) {
      if (orbit & Graph::bit(e)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Permutation> gens_;
  std::vector<int> order_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> best_cols_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  int backjump_ = -1;
  bool stop_on_improvement_ = false;
  bool improved_ = false;
};

}  // namespace detail

/// Generators of the full automorphism group.
inline std::vector<Permutation> automorphism_generators(const Graph& g) {
  return detail::AutomorphismSearch(g, std::vector<int>(g.n(), 0)).generators();
}

/// Orbits of Aut(g) from equitable refinement plus individualization-refinement.
inline OrbitPartition automorphism_orbits(const Graph& g) {
  detail::AutomorphismSearch search(g, std::vector<int>(g.n(), 0));
  return search.orbits();
}

inline bool is_vertex_transitive(const Graph& g) { return automorphism_orbits(g).count == 1; }

/// perm[v] = canonical label of v.
inline Permutation canonical_labeling(const Graph& g) {
  detail::LexMinSearch search(g);
  Permutation perm(g.n());
  const auto& order = search.best_order();
  for (int q = 0; q < g.n(); ++q) perm[order[q]] = q;
  return perm;
}

inline CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{write_graph6(g.relabeled(canonical_labeling(g)))};
}

/// Same as canonical_form(g).bytes == write_graph6(g), but stops as soon as
/// some relabeling is seen to be smaller.
inline bool is_canonical(const Graph& g) { return detail::LexMinSearch(g, true).identity_is_least(); }

/// Intersection array if every vertex at distance i from every root has the
/// same counts c_i (neighbours at distance i-1) and b_i (at distance i+1).
inline std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
  require_connected(g);
  std::optional<IntersectionArray> array;
  for (int root = 0; root < g.n(); ++root) {
    const auto dist = bfs_distances(g, root);
    const int diameter = *std::max_element(dist.begin(), dist.end());
    std::vector<int> b(diameter + 1, -1), c(diameter + 1, -1);
    for (int u = 0; u < g.n(); ++u) {
      const int i = dist[u];
      int back = 0, fwd = 0;
      for (auto w : g.neighbors(u)) {
        if (dist[w] == i - 1) ++back;
        if (dist[w] == i + 1) ++fwd;
      }
      if (b[i] < 0) {
        b[i] = fwd;
        c[i] = back;
      } else if (b[i] != fwd || c[i] != back) {
        return std::nullopt;
      }
    }
    IntersectionArray here{diameter, std::vector<int>(b.begin(), b.end() - 1),
                           std::vector<int>(c.begin() + 1, c.end())};
    if (!array) {
      array = std::move(here);
    } else if (*array != here) {
      return std::nullopt;
    }
  }
  return array;
}

}  // namespace walkreg
