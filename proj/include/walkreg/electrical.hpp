#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkreg/graph.hpp"
#include "walkreg/matrix.hpp"
#include "walkreg/rational.hpp"

namespace walkreg {

/// All-pairs effective resistances; symmetric with zero diagonal.
using ResistanceMatrix = RatMatrix;
/// All-pairs hitting times, H(x,y) = expected steps from x to first reach y.
using HittingMatrix = RatMatrix;

struct ReversibilityReport {
  bool reversible = false;
  std::vector<Rational> r_d;             // R_d(v) per vertex
  std::optional<Rational> r_d_constant;  // R_d(G) when constant
  std::optional<Rational> r_pi;          // R_d(G) / 2m when reversible
  Rational max_asymmetry;                // max |H(x,y) - H(y,x)|
};

namespace detail {

inline void require_electrical(const Graph& g) {
  if (g.n() < 2) throw Error(Errc::TooSmall, "electrical quantities need n >= 2");
  require_connected(g);
}

inline void require_pair(const Graph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw Error(Errc::SameVertex, "vertices must differ");
}

/// Laplacian with the ground row/column removed; index i maps to vertex
/// i < ground ? i : i + 1.
inline IntMatrix grounded_laplacian(const Graph& g, Vertex ground) {
  const int n = g.n();
  IntMatrix l(n - 1, n - 1);
  for (int u = 0, i = 0; u < n; ++u) {
    if (u == ground) continue;
    for (int v = 0, j = 0; v < n; ++v) {
      if (v == ground) continue;
      if (u == v) {
        l(i, j) = g.degree(u);
      } else if (g.adjacent(u, v)) {
        l(i, j) = -1;
      }
      ++j;
    }
    ++i;
  }
  return l;
}

inline int reduced_index(Vertex v, Vertex ground) { return v < ground ? v : v - 1; }

}  // namespace detail

/// Potential at v when w is grounded and a unit current enters at v.
inline Rational effective_resistance(const Graph& g, Vertex v, Vertex w) {
  detail::require_electrical(g);
  detail::require_pair(g, v, w);
  IntMatrix rhs(g.n() - 1, 1);
  rhs(detail::reduced_index(v, w), 0) = 1;
  RatMatrix phi = solve_integer_system_bareiss(detail::grounded_laplacian(g, w), std::move(rhs));
  return phi(detail::reduced_index(v, w), 0);
}

/// All pairs from one inverse of the Laplacian grounded at the last vertex:
/// r(v,w) = G(v,v) + G(w,w) - 2 G(v,w), with G zero on the ground.
inline ResistanceMatrix resistance_matrix(const Graph& g) {
  detail::require_electrical(g);
  const int n = g.n();
  const Vertex ground = n - 1;
  RatMatrix inv = solve_integer_system_bareiss(detail::grounded_laplacian(g, ground),
                                               IntMatrix::identity(n - 1));
  auto green = [&](Vertex a, Vertex b) -> Rational {
    if (a == ground || b == ground) return Rational(0);
    return inv(a, b);
  };
  ResistanceMatrix r(n, n);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      r(v, w) = green(v, v) + green(w, w) - Rational(2) * green(v, w);
      r(w, v) = r(v, w);
    }
  }
  return r;
}

/// Hitting times into target y from every vertex: solves
/// h(y) = 0, h(u) = 1 + (1/d(u)) * sum_{z ~ u} h(z) for u != y.
inline std::vector<Rational> hitting_times_to(const Graph& g, Vertex y) {
  g.check_vertex(y);
  detail::require_electrical(g);
  const int n = g.n();
  RatMatrix a(n - 1, n - 1);
  std::vector<Rational> b(n - 1, Rational(1));
  for (int u = 0; u < n; ++u) {
    if (u == y) continue;
    const int i = detail::reduced_index(u, y);
    a(i, i) = 1;
    const Rational step(1, g.degree(u));
    for (auto z : g.neighbors(u)) {
      if (z != y) a(i, detail::reduced_index(z, y)) -= step;
    }
  }
  std::vector<Rational> h = solve_linear_exact(a, b);
  h.insert(h.begin() + y, Rational(0));
  return h;
}

inline Rational hitting_time(const Graph& g, Vertex x, Vertex y) {
  detail::require_electrical(g);
  detail::require_pair(g, x, y);
  return hitting_times_to(g, y)[x];
}

/// One exact solve per target vertex.
inline HittingMatrix hitting_matrix(const Graph& g) {
  detail::require_electrical(g);
  HittingMatrix h(g.n(), g.n());
  for (int y = 0; y < g.n(); ++y) {
    const auto col = hitting_times_to(g, y);
    for (int x = 0; x < g.n(); ++x) h(x, y) = col[x];
  }
  return h;
}

/// R_d(v) = sum_w d(w) r(v,w).
inline std::vector<Rational> degree_weighted_resistance(const Graph& g, const ResistanceMatrix& r) {
  std::vector<Rational> out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    Rational s;
    for (int w = 0; w < g.n(); ++w) {
      if (w != v) s += Rational(g.degree(w)) * r(v, w);
    }
    out[v] = s;
  }
  return out;
}

/// Decides hitting-time symmetry, and independently whether R_d is constant.
/// The two must agree; a disagreement is an internal error.
inline ReversibilityReport is_reversible(const Graph& g) {
  detail::require_electrical(g);
  const HittingMatrix h = hitting_matrix(g);
  const ResistanceMatrix r = resistance_matrix(g);

  ReversibilityReport rep;
  for (int x = 0; x < g.n(); ++x) {
    for (int y = x + 1; y < g.n(); ++y) {
      Rational gap = abs(h(x, y) - h(y, x));
      if (gap > rep.max_asymmetry) rep.max_asymmetry = gap;
    }
  }
  rep.reversible = rep.max_asymmetry.is_zero();

  rep.r_d = degree_weighted_resistance(g, r);
  bool constant = true;
  for (const auto& value : rep.r_d) constant = constant && value == rep.r_d.front();

  if (constant != rep.reversible) {
    throw Error(Errc::CharacterizationMismatch,
                "hitting-time symmetry and R_d constancy disagree (max asymmetry " +
                    rep.max_asymmetry.str() + ")");
  }
  if (rep.reversible) {
    rep.r_d_constant = rep.r_d.front();
    rep.r_pi = rep.r_d.front() / Rational(2 * g.m());
  }
  return rep;
}

/// R_pi(G) = R_d(G) / 2m; undefined unless R_d is constant.
inline Rational r_pi(const Graph& g) {
  detail::require_electrical(g);
  const auto r_d = degree_weighted_resistance(g, resistance_matrix(g));
  for (const auto& value : r_d) {
    if (value != r_d.front()) throw Error(Errc::NotReversible, "R_d(v) depends on v");
  }
  return r_d.front() / Rational(2 * g.m());
}

/// H(x,y) + H(y,x) == 2m r(x,y) for every pair, hitting and resistance
/// matrices computed along their separate solver paths.
inline bool commute_identity_check(const Graph& g) {
  detail::require_electrical(g);
  const HittingMatrix h = hitting_matrix(g);
  const ResistanceMatrix r = resistance_matrix(g);
  const Rational two_m(2 * g.m());
  for (int x = 0; x < g.n(); ++x) {
    for (int y = x + 1; y < g.n(); ++y) {
      if (h(x, y) + h(y, x) != two_m * r(x, y)) return false;
    }
  }
  return true;
}

}  // namespace walkreg
