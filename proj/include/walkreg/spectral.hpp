#pragma once

#include <Eigen/Eigenvalues>

#include <vector>

#include "walkreg/graph.hpp"

namespace walkreg {

/// Adjacency eigenvalues in descending order (double precision).
inline std::vector<double> adjacency_spectrum(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (auto v : g.neighbors(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  return {out.rbegin(), out.rend()};
}

/// k - lambda_2 for a connected k-regular graph.
inline double spectral_gap_estimate(const Graph& g) {
  if (g.n() < 2) throw Error(Errc::TooSmall, "spectral gap needs n >= 2");
  require_connected(g);
  const int k = regular_degree(g);
  if (k < 0) throw Error(Errc::NotRegular, "spectral gap is defined for regular graphs only");
  const auto spectrum = adjacency_spectrum(g);
  return static_cast<double>(k) - spectrum[1];
}

}  // namespace walkreg
