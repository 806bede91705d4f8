#pragma once

// Checkers for the representation notions modulo a composite m:
// weak representation of a Boolean function, and the alternative,
// 0-a-strong and 1-a-strong representations of one polynomial by another.

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "logrank/error.hpp"
#include "logrank/modcore.hpp"
#include "logrank/polynomial.hpp"

namespace logrank {

/// Largest arity we enumerate point by point.
inline constexpr int kMaxBruteForceVars = 24;

using BooleanFunction = std::function<bool(std::span<const std::uint8_t>)>;
using SymmetricBooleanFunction = std::function<bool(int weight)>;

struct WeakRepResult {
  /// S0 and S1 are disjoint; `accepting` is then S0.
  bool represents = false;
  std::set<std::int64_t> accepting;
  std::set<std::int64_t> values_on_zeros;  // S0 = {P(x) mod m : g(x) = 0}
  std::set<std::int64_t> values_on_ones;   // S1 = {P(x) mod m : g(x) = 1}
};

namespace detail {

inline WeakRepResult finish_weak(std::set<std::int64_t> s0, std::set<std::int64_t> s1) {
  WeakRepResult r;
  r.values_on_zeros = std::move(s0);
  r.values_on_ones = std::move(s1);
  r.represents = true;
  for (auto v : r.values_on_zeros)
    if (r.values_on_ones.contains(v)) r.represents = false;
  if (r.represents) r.accepting = r.values_on_zeros;
  return r;
}

}  // namespace detail

/// Exhaustive over {0,1}^n; `arity` is g's number of inputs.
inline WeakRepResult check_weak_representation(const MultilinearPoly& poly, const BooleanFunction& g, int arity,
                                               const Modulus& mod) {
  if (arity != poly.num_vars())
    throw Error(Errc::dimension_mismatch, "polynomial has " + std::to_string(poly.num_vars()) +
                                              " variables, function has arity " + std::to_string(arity));
  if (arity > kMaxBruteForceVars)
    throw Error(Errc::too_large, "exhaustive check limited to " + std::to_string(kMaxBruteForceVars) + " variables");
  std::set<std::int64_t> s0, s1;
  std::vector<std::uint8_t> point(static_cast<std::size_t>(arity));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << arity); ++bits) {
    for (int i = 0; i < arity; ++i) point[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
    const auto value = eval_01(poly, point, mod).value();
    (g(point) ? s1 : s0).insert(value);
  }
  return detail::finish_weak(std::move(s0), std::move(s1));
}

/// Symmetric P against a symmetric g: one evaluation per weight 0..n.
inline WeakRepResult check_weak_representation(const SymmetricSum& poly, const SymmetricBooleanFunction& g,
                                               const Modulus& mod) {
  std::set<std::int64_t> s0, s1;
  for (int w = 0; w <= poly.num_vars(); ++w) (g(w) ? s1 : s0).insert(eval_symmetric(poly, w, mod).value());
  return detail::finish_weak(std::move(s0), std::move(s1));
}

inline bool or_function(std::span<const std::uint8_t> x) {
  for (auto bit : x)
    if (bit) return true;
  return false;
}

inline bool or_of_weight(int weight) { return weight > 0; }

// ---------------------------------------------------------------------------
// Coefficientwise notions. Every monomial outside both supports has
// coefficient 0 in f and g and satisfies all three conditions, so only the
// union of supports is inspected.

enum class RepKind { alternative, zero_a_strong, one_a_strong };

namespace detail {

inline bool coefficient_ok(Coeff a, Coeff b, const Modulus& mod, RepKind kind) {
  bool some_agree = false;
  for (std::size_t i = 0; i < mod.num_primes(); ++i) {
    const std::int64_t q = mod.prime_power(i);
    if (mod_floor(a - b, q) == 0) {
      some_agree = true;
      continue;
    }
    if (kind == RepKind::zero_a_strong && mod_floor(b, q) != 0) return false;
    if (kind == RepKind::one_a_strong && mod_floor(a, mod.value()) != 0) return false;
  }
  return some_agree;
}

template <class Visit>
void for_each_support_pair(const MultilinearPoly& f, const MultilinearPoly& g, Visit&& visit) {
  auto fi = f.terms().begin();
  auto gi = g.terms().begin();
  const auto fe = f.terms().end();
  const auto ge = g.terms().end();
  while (fi != fe || gi != ge) {
    if (gi == ge || (fi != fe && fi->first < gi->first)) {
      if (!visit(fi->first, fi->second, Coeff{0})) return;
      ++fi;
    } else if (fi == fe || gi->first < fi->first) {
      if (!visit(gi->first, Coeff{0}, gi->second)) return;
      ++gi;
    } else {
      if (!visit(fi->first, fi->second, gi->second)) return;
      ++fi;
      ++gi;
    }
  }
}

}  // namespace detail

inline bool check_representation(const MultilinearPoly& f, const MultilinearPoly& g, const Modulus& mod,
                                 RepKind kind) {
  bool ok = true;
  detail::for_each_support_pair(f, g, [&](const Monomial&, Coeff a, Coeff b) {
    ok = detail::coefficient_ok(a, b, mod, kind);
    return ok;
  });
  return ok;
}

/// Every coefficient of g agrees with f modulo at least one p_i^e_i.
inline bool check_alternative(const MultilinearPoly& f, const MultilinearPoly& g, const Modulus& mod) {
  return check_representation(f, g, mod, RepKind::alternative);
}

/// Alternative, and a coefficient wrong modulo p_i^e_i is 0 modulo p_i^e_i.
inline bool check_0_a_strong(const MultilinearPoly& f, const MultilinearPoly& g, const Modulus& mod) {
  return check_representation(f, g, mod, RepKind::zero_a_strong);
}

/// Alternative, and disagreement only where f's coefficient is 0 mod m.
inline bool check_1_a_strong(const MultilinearPoly& f, const MultilinearPoly& g, const Modulus& mod) {
  return check_representation(f, g, mod, RepKind::one_a_strong);
}

/// Splits a 1-a-strong g as  g = f + sum_i p_i^e_i * g_i  (mod m).
///
/// The g_i have pairwise disjoint supports and share no monomial with f mod m.
/// A surplus coefficient divisible by several prime powers goes to the
/// smallest prime.
inline std::vector<MultilinearPoly> decompose_1_a_strong(const MultilinearPoly& f, const MultilinearPoly& g,
                                                         const Modulus& mod) {
  if (!check_1_a_strong(f, g, mod)) throw Error(Errc::not_1_a_strong, "g is not a 1-a-strong representation of f");
  const int n = std::max(f.num_vars(), g.num_vars());
  std::vector<MultilinearPoly> parts(mod.num_primes(), MultilinearPoly(n));
  detail::for_each_support_pair(f, g, [&](const Monomial& mono, Coeff a, Coeff b) {
    const std::int64_t surplus = mod.reduce(b - a);
    if (surplus == 0) return true;
    for (std::size_t i = 0; i < mod.num_primes(); ++i) {
      const std::int64_t q = mod.prime_power(i);
      if (surplus % q == 0) {
        parts[i].add(mono, surplus / q);
        return true;
      }
    }
    throw Error(Errc::invariant_violation, "surplus coefficient divisible by no prime power");
  });
  return parts;
}

}  // namespace logrank
