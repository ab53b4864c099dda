#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "walkreg/electrical.hpp"
#include "walkreg/graph.hpp"
#include "walkreg/matrix.hpp"
#include "walkreg/rational.hpp"

namespace walkreg {

/// Closed-walk counts and return probabilities, indexed [t][v] for t = 0..tmax.
struct WalkProfile {
  int tmax = 0;
  std::vector<std::vector<BigInt>> counts;
  std::vector<std::vector<Rational>> return_probs;
};

/// Law of the first visit to `target` from `source`, truncated at tmax steps.
struct FirstPassageDistribution {
  Vertex source = 0;
  Vertex target = 0;
  int tmax = 0;
  std::vector<Rational> probs;  // probs[i] = Pr(first visit at step i + 1)
  Rational tail;                // mass not absorbed within tmax steps

  const Rational& at_step(int t) const { return probs.at(static_cast<std::size_t>(t - 1)); }
};

struct SimEstimate {
  double point = 0.0;
  std::uint64_t trials = 0;
  double std_error = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const SimEstimate&, const SimEstimate&) = default;
};

namespace detail {

/// Iterates M_t = W^t for an adjacency-supported weight matrix W with
/// W(k,j) = col_weight[j] when k ~ j. Only the support of the graph is
/// touched, so one step costs O(n * 2m) big-integer operations.
class WeightedPower {
 public:
  WeightedPower(const Graph& g, std::vector<BigInt> col_weight)
      : g_(g), weight_(std::move(col_weight)), power_(IntMatrix::identity(g.n())) {}

  void step() {
    const int n = g_.n();
    IntMatrix next(n, n);
    for (int j = 0; j < n; ++j) {
      for (auto k : g_.neighbors(j)) {
        for (int i = 0; i < n; ++i) {
          if (power_(i, k) != 0) next(i, j) += power_(i, k);
        }
      }
      if (weight_[j] != 1) {
        for (int i = 0; i < n; ++i) next(i, j) *= weight_[j];
      }
    }
    power_ = std::move(next);
  }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d(g_.n());
    for (int v = 0; v < g_.n(); ++v) d[v] = power_(v, v);
    return d;
  }

  bool diagonal_constant() const {
    for (int v = 1; v < g_.n(); ++v) {
      if (power_(v, v) != power_(0, 0)) return false;
    }
    return true;
  }

 private:
  const Graph& g_;
  std::vector<BigInt> weight_;
  IntMatrix power_;
};

/// P = W / L with L = lcm of the degrees and W(k,j) = L / d(k) for k ~ j.
/// Returns the row weights as column weights of W^T, which is what
/// WeightedPower multiplies by; since diag((W^T)^t) = diag(W^t) this is exact.
inline std::pair<std::vector<BigInt>, BigInt> transition_scaling(const Graph& g) {
  BigInt lcm = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
    }
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(g.degree(v)));
  }
  std::vector<BigInt> w(g.n());
  for (int v = 0; v < g.n(); ++v) w[v] = lcm / g.degree(v);
  return {std::move(w), lcm};
}

inline std::vector<BigInt> unit_weights(const Graph& g) { return std::vector<BigInt>(g.n(), BigInt(1)); }

}  // namespace detail

/// counts[t][v] = (A^t)_{vv}; return_probs[t][v] = (P^t)_{vv}.
inline WalkProfile closed_walk_count_profile(const Graph& g, int tmax) {
  if (tmax < 0) throw Error(Errc::BadParams, "tmax must be non-negative");
  WalkProfile prof;
  prof.tmax = tmax;
  prof.counts = int_matrix_power_diags(adjacency_matrix(g), tmax);

  auto [weights, lcm] = detail::transition_scaling(g);
  detail::WeightedPower walker(g, std::move(weights));
  BigInt scale = 1;
  for (int t = 0; t <= tmax; ++t) {
    if (t > 0) {
      walker.step();
      scale *= lcm;
    }
    std::vector<Rational> probs;
    probs.reserve(g.n());
    for (const auto& c : walker.diagonal()) probs.emplace_back(c, scale);
    prof.return_probs.push_back(std::move(probs));
  }
  return prof;
}

inline WalkProfile closed_walk_count_profile(const Graph& g) { return closed_walk_count_profile(g, g.n()); }

/// diag(A^t) constant for t = 2..n-1. Since A^t for t >= n is a fixed linear
/// combination of A^0..A^{n-1} (Cayley-Hamilton), this horizon decides the
/// condition for every t.
inline bool is_walk_regular(const Graph& g) {
  detail::WeightedPower walker(g, detail::unit_weights(g));
  for (int t = 1; t < g.n(); ++t) {
    walker.step();
    if (!walker.diagonal_constant()) return false;
  }
  return true;
}

/// Return probability Pr_x(Z(t) = x) independent of x for every t, checked
/// directly on diag(P^t) for t = 1..n-1 (complete by the same Cayley-Hamilton
/// argument applied to P). A single vertex satisfies it vacuously.
inline bool satisfies_return_condition(const Graph& g) {
  require_connected(g);
  if (g.n() == 1) return true;
  auto [weights, lcm] = detail::transition_scaling(g);
  // Every diagonal at step t shares the denominator lcm^t, so comparing
  // numerators compares the probabilities.
  detail::WeightedPower walker(g, std::move(weights));
  for (int t = 1; t < g.n(); ++t) {
    walker.step();
    if (!walker.diagonal_constant()) return false;
  }
  return true;
}

/// E[first return time to x] from one step plus the hitting times of the
/// neighbors: 1 + (1/d(x)) sum_{z ~ x} H(z, x).
inline Rational expected_return_time_exact(const Graph& g, Vertex x) {
  g.check_vertex(x);
  if (g.n() < 2) throw Error(Errc::TooSmall, "return time needs n >= 2");
  require_connected(g);
  const auto h = hitting_times_to(g, x);
  Rational sum;
  for (auto z : g.neighbors(x)) sum += h[z];
  return Rational(1) + sum / Rational(g.degree(x));
}

/// Makes y absorbing and records the mass newly absorbed at each step.
inline FirstPassageDistribution first_passage_distribution(const Graph& g, Vertex x, Vertex y, int tmax) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw Error(Errc::SameVertex, "source and target coincide");
  require_connected(g);
  if (tmax < 0) throw Error(Errc::BadParams, "tmax must be non-negative");

  FirstPassageDistribution fp;
  fp.source = x;
  fp.target = y;
  fp.tmax = tmax;
  std::vector<Rational> mass(g.n());
  mass[x] = 1;
  Rational absorbed;
  for (int t = 1; t <= tmax; ++t) {
    std::vector<Rational> next(g.n());
    for (int u = 0; u < g.n(); ++u) {
      if (u == y || mass[u].is_zero()) continue;
      const Rational share = mass[u] / Rational(g.degree(u));
      for (auto z : g.neighbors(u)) next[z] += share;
    }
    fp.probs.push_back(next[y]);
    absorbed += next[y];
    next[y] = 0;
    mass = std::move(next);
  }
  fp.tail = Rational(1) - absorbed;
  return fp;
}

inline FirstPassageDistribution first_passage_distribution(const Graph& g, Vertex x, Vertex y) {
  return first_passage_distribution(g, x, y, 2 * g.n());
}

/// prod_{i < L} 1/d(w_i) for a walk w_0..w_L.
inline Rational walk_traversal_probability(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.size() < 2) throw Error(Errc::NotAWalk, "a walk needs at least one step");
  for (auto v : walk) {
    if (!g.valid_vertex(v)) throw Error(Errc::NotAWalk, "vertex " + std::to_string(v) + " out of range");
  }
  BigInt den = 1;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) {
      throw Error(Errc::NotAWalk, "step " + std::to_string(i) + " is not an edge");
    }
    den *= g.degree(walk[i]);
  }
  return Rational(BigInt(1), den);
}

// Counter-based generator: the i-th draw of a trial is the SplitMix64
// finalizer applied to key + (i + 1) * golden, where the key is derived from
// (seed, trial). Any trial's stream can be produced without touching others.
namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) {
  return mix64(mix64(seed) ^ mix64(trial + kGolden));
}

class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform integer in [0, bound), Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 prod = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        prod = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(prod);
      }
    }
    return static_cast<std::uint64_t>(prod >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rng

/// Fraction of `trials` independent t-step walks from x that end at x.
/// Trials are split into contiguous chunks across `jobs` threads; the result
/// depends only on (g, x, t, trials, seed).
inline SimEstimate simulate_return_frequency(const Graph& g, Vertex x, int t, std::uint64_t trials,
                                             std::uint64_t seed, unsigned jobs = 1) {
  g.check_vertex(x);
  if (has_isolated_vertex(g)) throw Error(Errc::IsolatedVertex, "graph has an isolated vertex");
  if (trials == 0) throw Error(Errc::BadParams, "trials must be >= 1");
  if (t < 0) throw Error(Errc::BadParams, "steps must be non-negative");

  std::vector<std::vector<Vertex>> nbrs(g.n());
  for (int v = 0; v < g.n(); ++v) nbrs[v] = g.neighbors(v);

  auto run_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      rng::CounterStream stream(rng::trial_key(seed, trial));
      Vertex at = x;
      for (int s = 0; s < t; ++s) at = nbrs[at][stream.below(nbrs[at].size())];
      hits += at == x;
    }
    return hits;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(trials, 256))));
  std::vector<std::uint64_t> partial(jobs, 0);
  if (jobs == 1) {
    partial[0] = run_chunk(0, trials);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = trials * j / jobs, end = trials * (j + 1) / jobs;
      pool.emplace_back([&, j, begin, end] { partial[j] = run_chunk(begin, end); });
    }
    for (auto& th : pool) th.join();
  }
  const std::uint64_t hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});

  SimEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.point = static_cast<double>(hits) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.point * (1.0 - est.point) / static_cast<double>(trials));
  return est;
}

}  // namespace walkreg
