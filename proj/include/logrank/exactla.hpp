#pragma once

// Exact rank and rank factorization M = X Y of 0-1 matrices over Q.
//
// Forward elimination is fraction-free (Bareiss): every intermediate entry
// is an exact integer minor of M. Rationals only appear in Y, recovered by
// back substitution against the echelon form.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logrank/error.hpp"
#include "logrank/matrix.hpp"
#include "logrank/modcore.hpp"

namespace logrank {

using BooleanMatrix = Matrix<std::uint8_t>;

/// Throws invalid_argument unless every entry is 0 or 1.
inline BooleanMatrix to_boolean(const Matrix<std::int64_t>& m) {
  BooleanMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto v = m(r, c);
      if (v != 0 && v != 1)
        throw Error(Errc::invalid_argument, "entry (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) +
                                                ") = " + std::to_string(v) + " is not 0/1");
      out(r, c) = static_cast<std::uint8_t>(v);
    }
  return out;
}

inline bool is_zero(const BooleanMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto v : m.row(r))
      if (v) return false;
  return true;
}

struct Echelon {
  Matrix<BigInt> U;                 // first `pivots.size()` rows are the echelon rows
  std::vector<std::size_t> pivots;  // pivot column of each echelon row
};

/// Fraction-free row echelon form. Pivot columns are found left to right,
/// so they are the lexicographically first maximal independent columns.
template <class T>
Echelon bareiss_echelon(const Matrix<T>& M) {
  Echelon e{Matrix<BigInt>(M.rows(), M.cols()), {}};
  Matrix<BigInt>& U = e.U;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) U(r, c) = static_cast<long long>(M(r, c));

  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < U.cols() && row < U.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < U.rows() && U(pivot, col) == 0) ++pivot;
    if (pivot == U.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(pivot, c), U(row, c));
    const BigInt p = U(row, col);
    for (std::size_t r = row + 1; r < U.rows(); ++r) {
      const BigInt factor = U(r, col);
      for (std::size_t c = col + 1; c < U.cols(); ++c) {
        U(r, c) = (U(r, c) * p - factor * U(row, c)) / prev;  // exact by Sylvester's identity
      }
      U(r, col) = 0;
    }
    prev = p;
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

/// Rank over Q.
template <class T>
std::size_t rank_rational(const Matrix<T>& M) {
  return bareiss_echelon(M).pivots.size();
}

/// Greedy leftmost maximal set of independent columns (0-based).
inline std::vector<std::size_t> column_basis(const BooleanMatrix& M) {
  if (is_zero(M)) throw Error(Errc::zero_function, "matrix is identically zero");
  return bareiss_echelon(M).pivots;
}

struct Factorization {
  BooleanMatrix X;                       // r x n, the basis columns of M
  Matrix<Rational> Y;                    // n x c
  BigInt k;                              // lcm of denominators of Y
  Matrix<BigInt> kY;                     // k * Y, integral
  std::vector<std::size_t> basis;        // 0-based column indices, increasing

  std::size_t rank() const noexcept { return basis.size(); }
};

/// M = X Y with X the leftmost basis columns of M. Verifies X (kY) = k M
/// exactly before returning.
inline Factorization factorize(const BooleanMatrix& M) {
  if (is_zero(M)) throw Error(Errc::zero_function, "matrix is identically zero");
  const Echelon e = bareiss_echelon(M);
  const std::size_t n = e.pivots.size();
  const std::size_t cols = M.cols();

  Factorization f;
  f.basis = e.pivots;
  f.X = BooleanMatrix(M.rows(), n);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t i = 0; i < n; ++i) f.X(r, i) = M(r, f.basis[i]);

  // Y is the nonzero part of the reduced row echelon form: solve
  // U[:, pivots] Y = U[0..n) with U[:, pivots] upper triangular.
  f.Y = Matrix<Rational>(n, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc = Rational(e.U(i, c));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (f.Y(j, c) != 0) acc -= Rational(e.U(i, e.pivots[j])) * f.Y(j, c);
      }
      f.Y(i, c) = acc / Rational(e.U(i, e.pivots[i]));
    }
  }

  f.k = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < cols; ++c) f.k = lcm(f.k, boost::multiprecision::denominator(f.Y(i, c)));

  f.kY = Matrix<BigInt>(n, cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational scaled = f.Y(i, c) * Rational(f.k);
      if (boost::multiprecision::denominator(scaled) != 1)
        throw Error(Errc::invariant_violation, "k * Y not integral");
      f.kY(i, c) = boost::multiprecision::numerator(scaled);
    }

  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (f.X(r, i)) acc += f.kY(i, c);
      if (acc != f.k * M(r, c))
        throw Error(Errc::invariant_violation, "X * kY != k * M at (" + std::to_string(r) + ", " +
                                                   std::to_string(c) + ")");
    }
  return f;
}

}  // namespace logrank
