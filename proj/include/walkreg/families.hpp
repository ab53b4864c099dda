#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkreg/graph.hpp"

namespace walkreg {

enum class Family { Complete, Cycle, Path, Star, CompleteBipartite, Hypercube, Petersen };

inline constexpr std::array<std::pair<std::string_view, Family>, 7> kFamilyNames{{
    {"complete", Family::Complete},
    {"cycle", Family::Cycle},
    {"path", Family::Path},
    {"star", Family::Star},
    {"complete_bipartite", Family::CompleteBipartite},
    {"hypercube", Family::Hypercube},
    {"petersen", Family::Petersen},
}};

inline std::optional<Family> family_from_name(std::string_view name) {
  for (auto [s, f] : kFamilyNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::CompleteBipartite: return 2;
    case Family::Petersen: return 0;
    default: return 1;
  }
}

/// Standard labeled members of each family:
///   complete(n)             K_n on 0..n-1
///   cycle(n)                0-1-...-(n-1)-0, n >= 3
///   path(n)                 0-1-...-(n-1), n vertices
///   star(k)                 K_{1,k}: center 0, leaves 1..k
///   complete_bipartite(a,b) parts {0..a-1} and {a..a+b-1}
///   hypercube(d)            vertices are d-bit masks, adjacent iff they differ in one bit
///   petersen()              Kneser K(5,2): 2-subsets of {0..4} in lexicographic
///                           order ({0,1},{0,2},...,{3,4}), adjacent iff disjoint
inline Graph make_family(Family family, const std::vector<int>& params) {
  auto bad = [](const std::string& why) { return Error(Errc::BadParams, why); };
  if (params.size() != family_arity(family)) {
    throw bad("expected " + std::to_string(family_arity(family)) + " parameter(s), got " +
              std::to_string(params.size()));
  }
  auto fits = [&](long long n) {
    if (n < 1 || n > kMaxVertices) throw bad("vertex count " + std::to_string(n) + " outside 1..62");
    return static_cast<int>(n);
  };

  switch (family) {
    case Family::Complete: {
      Graph g(fits(params[0]));
      for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) g.add_edge(u, v);
      return g;
    }
    case Family::Cycle: {
      if (params[0] < 3) throw bad("cycle needs n >= 3");
      Graph g(fits(params[0]));
      for (int u = 0; u < g.n(); ++u) g.add_edge(u, (u + 1) % g.n());
      return g;
    }
    case Family::Path: {
      Graph g(fits(params[0]));
      for (int u = 0; u + 1 < g.n(); ++u) g.add_edge(u, u + 1);
      return g;
    }
    case Family::Star: {
      if (params[0] < 1) throw bad("star needs at least one leaf");
      Graph g(fits(1LL + params[0]));
      for (int v = 1; v < g.n(); ++v) g.add_edge(0, v);
      return g;
    }
    case Family::CompleteBipartite: {
      const int a = params[0], b = params[1];
      if (a < 1 || b < 1) throw bad("complete_bipartite needs both parts non-empty");
      Graph g(fits(static_cast<long long>(a) + b));
      for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::Hypercube: {
      const int d = params[0];
      if (d < 0 || d > 5) throw bad("hypercube dimension must lie in 0..5");
      Graph g(1 << d);
      for (int u = 0; u < g.n(); ++u)
        for (int i = 0; i < d; ++i) g.add_edge(u, u ^ (1 << i));
      return g;
    }
    case Family::Petersen: {
      std::vector<std::pair<int, int>> subsets;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
      Graph g(10);
      for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
          auto [a, b] = subsets[u];
          auto [c, d] = subsets[v];
          if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
      }
      return g;
    }
  }
  throw bad("unknown family");
}

inline Graph complete_graph(int n) { return make_family(Family::Complete, {n}); }
inline Graph cycle_graph(int n) { return make_family(Family::Cycle, {n}); }
inline Graph path_graph(int n) { return make_family(Family::Path, {n}); }
inline Graph star_graph(int leaves) { return make_family(Family::Star, {leaves}); }
inline Graph petersen_graph() { return make_family(Family::Petersen, {}); }

}  // namespace walkreg
