#pragma once

#include <cstdint>
#include <functional>
#include <algorithm>
#include <string>
#include <vector>

#include "walkreg/graph.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/symmetry.hpp"

namespace walkreg {

inline constexpr int kMaxEnumerationVertices = 7;

/// Graph whose edge set is given by `mask` over the upper triangle in graph6
/// column order (bit k of mask is the k-th pair (0,1),(0,2),(1,2),(0,3),...).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(n, 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1) {
        rows[i] |= Graph::bit(j);
        rows[j] |= Graph::bit(i);
      }
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

/// One representative per isomorphism class of connected graphs on n
/// vertices, as canonical graph6 strings in ascending byte order.
///
/// Every edge mask is visited; a mask is kept exactly when its graph equals
/// its own canonical form, so each class contributes its canonical member once.
inline std::vector<std::string> enumerate_connected_graph6(int n) {
  if (n < 1) throw Error(Errc::BadParams, "n must be >= 1");
  if (n > kMaxEnumerationVertices) {
    throw Error(Errc::Oversize, "exhaustive enumeration is limited to n <= 7; use an external corpus");
  }
  const int pairs = n * (n - 1) / 2;
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    // A connected graph needs at least n-1 edges.
    if (std::popcount(mask) < n - 1) continue;
    const Graph g = graph_from_edge_mask(n, mask);
    if (!is_connected(g) || !is_canonical(g)) continue;
    out.push_back(write_graph6(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (const auto& s : enumerate_connected_graph6(n)) out.push_back(parse_graph6(s));
  return out;
}

/// Connected graphs on 1..max_n vertices, in order of n then canonical bytes.
inline std::vector<Graph> connected_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = enumerate_connected(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace walkreg
