#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "walkreg/graph.hpp"
#include "walkreg/rational.hpp"

namespace walkreg {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(Errc::DimensionMismatch, "entry count does not match rows*cols");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<BigInt>;

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) a(u, v) = g.adjacent(u, v) ? 1 : 0;
  return a;
}

/// Combinatorial Laplacian D - A.
inline IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u) {
    l(u, u) = g.degree(u);
    for (int v = 0; v < g.n(); ++v)
      if (g.adjacent(u, v)) l(u, v) = -1;
  }
  return l;
}

/// Solves a·X = b column by column over the rationals.
///
/// Gaussian elimination with pivoting on the first nonzero entry of each
/// column, followed by back substitution. Exact; throws SingularMatrix when a
/// column has no nonzero pivot.
inline RatMatrix solve_linear_exact(RatMatrix a, RatMatrix b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.rows() != n) {
    throw Error(Errc::DimensionMismatch, "solve_linear_exact needs square a and matching b");
  }
  const std::size_t k = b.cols();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw Error(Errc::SingularMatrix, "no pivot in column " + std::to_string(col));
    a.swap_rows(piv, col);
    b.swap_rows(piv, col);
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (!b(col, j).is_zero()) b(r, j) -= f * b(col, j);
      }
      a(r, col) = 0;
    }
  }
  RatMatrix x(n, k);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = b(i, j);
      for (std::size_t c = i + 1; c < n; ++c) {
        if (!a(i, c).is_zero()) s -= a(i, c) * x(c, j);
      }
      x(i, j) = s / a(i, i);
    }
  }
  return x;
}

inline std::vector<Rational> solve_linear_exact(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length mismatch");
  RatMatrix x = solve_linear_exact(a, RatMatrix(b.size(), 1, b));
  return x.entries();
}

/// Fraction-free (Bareiss) elimination of an integer system a·X = b.
///
/// Forward elimination stays in the integers; every division is exact by the
/// Sylvester identity. Back substitution produces reduced rationals.
inline RatMatrix solve_integer_system_bareiss(IntMatrix a, IntMatrix b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.rows() != n) {
    throw Error(Errc::DimensionMismatch, "bareiss solve needs square a and matching b");
  }
  const std::size_t k = b.cols();
  BigInt prev = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(Errc::SingularMatrix, "no pivot in column " + std::to_string(col));
    a.swap_rows(piv, col);
    b.swap_rows(piv, col);
    const BigInt p = a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigInt f = a(r, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        a(r, j) = (a(r, j) * p - f * a(col, j));
        mpz_divexact(a(r, j).get_mpz_t(), a(r, j).get_mpz_t(), prev.get_mpz_t());
      }
      for (std::size_t j = 0; j < k; ++j) {
        b(r, j) = (b(r, j) * p - f * b(col, j));
        mpz_divexact(b(r, j).get_mpz_t(), b(r, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev = p;
  }
  RatMatrix x(n, k);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s(b(i, j));
      for (std::size_t c = i + 1; c < n; ++c) {
        if (a(i, c) != 0) s -= Rational(a(i, c)) * x(c, j);
      }
      x(i, j) = s / Rational(a(i, i));
    }
  }
  return x;
}

/// result[t][v] = (A^t)_{vv} for t = 0..tmax, by iterated exact multiplication.
inline std::vector<std::vector<BigInt>> int_matrix_power_diags(const IntMatrix& a, int tmax) {
  if (!a.square()) throw Error(Errc::DimensionMismatch, "matrix power needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> diags;
  diags.reserve(static_cast<std::size_t>(tmax) + 1);
  IntMatrix power = IntMatrix::identity(n);
  for (int t = 0; t <= tmax; ++t) {
    if (t > 0) power = power * a;
    std::vector<BigInt> d(n);
    for (std::size_t v = 0; v < n; ++v) d[v] = power(v, v);
    diags.push_back(std::move(d));
  }
  return diags;
}

/// Simple random walk kernel P(x,z) = 1/d(x) for z adjacent to x.
inline RatMatrix transition_matrix(const Graph& g) {
  RatMatrix p(g.n(), g.n());
  for (int x = 0; x < g.n(); ++x) {
    const int d = g.degree(x);
    if (d == 0) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(x) + " has degree 0");
    const Rational step(1, d);
    for (auto z : g.neighbors(x)) p(x, z) = step;
  }
  return p;
}

}  // namespace walkreg
