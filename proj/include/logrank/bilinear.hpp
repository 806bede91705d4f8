#pragma once

// Bilinear representations of the dot product modulo m:
//
//     sum_{j=1}^{t+1} (sum_i B[i][j] x_i) (sum_i C[j][i] y_i)  =  x^T A y,   A = B C (mod m)
//
// A represents sum_i x_i y_i when its diagonal is 1 and every off-diagonal
// entry vanishes modulo at least one prime power of m.

#include <cstdint>
#include <string>
#include <vector>

#include "logrank/detail/base16_data.hpp"
#include "logrank/error.hpp"
#include "logrank/matrix.hpp"
#include "logrank/modcore.hpp"

namespace logrank {

struct BilinearRep {
  Modulus mod;
  ResidueMatrix B;  // n x (t+1)
  ResidueMatrix C;  // (t+1) x n

  std::size_t n() const noexcept { return B.rows(); }
  std::size_t t_plus_1() const noexcept { return B.cols(); }
};

/// Canonicalizes all entries into [0, m).
inline ResidueMatrix reduce(const Matrix<std::int64_t>& m, const Modulus& mod) {
  ResidueMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = mod.reduce(m(r, c));
  return out;
}

/// Shape-checked constructor; entries are reduced mod m.
inline BilinearRep make_bilinear_rep(const Modulus& mod, const Matrix<std::int64_t>& B, const Matrix<std::int64_t>& C) {
  if (B.cols() != C.rows() || B.rows() != C.cols())
    throw Error(Errc::dimension_mismatch, "B is " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()) +
                                              " but C is " + std::to_string(C.rows()) + "x" + std::to_string(C.cols()));
  return BilinearRep{mod, reduce(B, mod), reduce(C, mod)};
}

namespace detail {

template <std::size_t R, std::size_t C>
Matrix<std::int64_t> from_table(const std::array<std::array<int, C>, R>& table) {
  Matrix<std::int64_t> out(R, C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) out(r, c) = table[r][c];
  return out;
}

}  // namespace detail

/// The golden m = 6, n = 16, t+1 = 13 instance.
inline BilinearRep base16() {
  return make_bilinear_rep(factorize_modulus(6), detail::from_table(detail::kBase16B),
                           detail::from_table(detail::kBase16C));
}

/// The golden A = BC, signed (not reduced).
inline Matrix<std::int64_t> base16_reference_product() { return detail::from_table(detail::kBase16A); }

/// A = B C mod m.
inline ResidueMatrix coefficient_matrix(const BilinearRep& rep) {
  const std::size_t n = rep.n();
  const std::size_t t = rep.t_plus_1();
  const std::int64_t m = rep.mod.value();
  ResidueMatrix A(n, rep.C.cols());
  std::vector<std::int64_t> acc(rep.C.cols());
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j = 0; j < t; ++j) {
      const std::int64_t b = rep.B(u, j);
      if (b == 0) continue;
      const auto crow = rep.C.row(j);
      for (std::size_t v = 0; v < crow.size(); ++v) acc[v] += b * crow[v];
    }
    for (std::size_t v = 0; v < acc.size(); ++v) A(u, v) = mod_floor(acc[v], m);
  }
  return A;
}

/// Unit diagonal, every off-diagonal entry 0 modulo some p_i^e_i.
inline bool check_dot_rep(const ResidueMatrix& A, const Modulus& mod) {
  if (!A.is_square()) return false;
  for (std::size_t u = 0; u < A.rows(); ++u)
    for (std::size_t v = 0; v < A.cols(); ++v) {
      const std::int64_t a = mod.reduce(A(u, v));
      if (u == v) {
        if (a != 1) return false;
        continue;
      }
      bool divisible = false;
      for (std::size_t i = 0; i < mod.num_primes() && !divisible; ++i) divisible = a % mod.prime_power(i) == 0;
      if (!divisible) return false;
    }
  return true;
}

/// B = B1 (x) B2, C = C1 (x) C2, so A = A1 (x) A2. Closure: the diagonal is
/// 1 * 1, and each off-diagonal product has a factor divisible by some
/// prime power.
inline BilinearRep kronecker_compose(const BilinearRep& r1, const BilinearRep& r2) {
  if (!(r1.mod == r2.mod))
    throw Error(Errc::invalid_argument, "cannot compose representations mod " + std::to_string(r1.mod.value()) +
                                            " and mod " + std::to_string(r2.mod.value()));
  return BilinearRep{r1.mod, reduce(kronecker(r1.B, r2.B), r1.mod), reduce(kronecker(r1.C, r2.C), r1.mod)};
}

/// Keeps the first n' variables: rows of B, columns of C. A' is the leading
/// principal n' x n' block of A.
inline BilinearRep truncate(const BilinearRep& rep, std::size_t new_n) {
  if (new_n < 1 || new_n > rep.n())
    throw Error(Errc::out_of_range, "truncate to " + std::to_string(new_n) + " outside [1, " +
                                        std::to_string(rep.n()) + "]");
  const std::size_t t = rep.t_plus_1();
  BilinearRep out{rep.mod, ResidueMatrix(new_n, t), ResidueMatrix(t, new_n)};
  for (std::size_t i = 0; i < new_n; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      out.B(i, j) = rep.B(i, j);
      out.C(j, i) = rep.C(j, i);
    }
  return out;
}

/// Smallest k >= 1 with 16^k >= n.
inline int base16_power_for(std::size_t n) {
  int k = 1;
  std::size_t size = 16;
  while (size < n) {
    size *= 16;
    ++k;
  }
  return k;
}

/// Kronecker power of base16 reaching n, truncated to n. t+1 = 13^k with
/// k = max(1, ceil(log16 n)). Only m = 6 has a base instance.
inline BilinearRep rep_for(std::size_t n, const Modulus& mod) {
  if (mod.value() != 6)
    throw Error(Errc::unsupported_modulus, "no base representation mod " + std::to_string(mod.value()) +
                                               " (only m = 6 is available)");
  if (n < 1) throw Error(Errc::out_of_range, "dimension must be >= 1");
  const BilinearRep base = base16();
  BilinearRep rep = base;
  for (int k = base16_power_for(n); k > 1; --k) rep = kronecker_compose(rep, base);
  return truncate(rep, n);
}

/// J - A mod m: candidate coefficients of the 0-a-strong representation of
/// S_n^2 = sum_{i != j} x_i y_j, since (sum x_i)(sum y_j) = S_n^2 + sum x_i y_i.
inline ResidueMatrix derive_S2_rep(const ResidueMatrix& A, const Modulus& mod) {
  if (!check_dot_rep(A, mod)) throw Error(Errc::not_dot_rep, "input is not a dot-product representation");
  ResidueMatrix out(A.rows(), A.cols());
  for (std::size_t u = 0; u < A.rows(); ++u)
    for (std::size_t v = 0; v < A.cols(); ++v) out(u, v) = mod.reduce(1 - A(u, v));
  return out;
}

inline ResidueMatrix derive_S2_rep(const BilinearRep& rep) { return derive_S2_rep(coefficient_matrix(rep), rep.mod); }

/// 0-a-strong S_n^2 coefficients: zero diagonal mod m; each off-diagonal
/// entry is 0 or 1 modulo every p_i^e_i and 1 modulo at least one; symmetric.
inline bool check_S2_rep(const ResidueMatrix& AS, const Modulus& mod) {
  if (!AS.is_square()) return false;
  for (std::size_t u = 0; u < AS.rows(); ++u)
    for (std::size_t v = 0; v < AS.cols(); ++v) {
      const std::int64_t a = mod.reduce(AS(u, v));
      if (u == v) {
        if (a != 0) return false;
        continue;
      }
      if (mod.reduce(AS(v, u)) != a) return false;
      bool some_one = false;
      for (std::size_t i = 0; i < mod.num_primes(); ++i) {
        const std::int64_t r = a % mod.prime_power(i);
        if (r != 0 && r != 1) return false;
        some_one = some_one || r == 1;
      }
      if (!some_one) return false;
    }
  return true;
}

/// A = I + sum_i p_i^e_i G_i (mod m) with disjointly supported, zero-diagonal
/// integer matrices G_i. An entry divisible by several prime powers goes to
/// the smallest prime.
inline std::vector<Matrix<std::int64_t>> decompose_surplus(const ResidueMatrix& A, const Modulus& mod) {
  if (!check_dot_rep(A, mod)) throw Error(Errc::not_dot_rep, "input is not a dot-product representation");
  std::vector<Matrix<std::int64_t>> parts(mod.num_primes(), Matrix<std::int64_t>(A.rows(), A.cols(), 0));
  for (std::size_t u = 0; u < A.rows(); ++u)
    for (std::size_t v = 0; v < A.cols(); ++v) {
      if (u == v) continue;
      const std::int64_t a = mod.reduce(A(u, v));
      if (a == 0) continue;
      for (std::size_t i = 0; i < mod.num_primes(); ++i) {
        const std::int64_t q = mod.prime_power(i);
        if (a % q == 0) {
          parts[i](u, v) = a / q;
          break;
        }
      }
    }
  return parts;
}

}  // namespace logrank
