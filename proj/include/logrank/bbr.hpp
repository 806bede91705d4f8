#pragma once

// Low-degree symmetric polynomials weakly representing OR_n modulo a
// composite m (Barrington-Beigel-Rudich construction).
//
// For each prime p_i of m pick q_i = p_i^k_i and let
//     G(q)(x) = sum_{j=1}^{q-1} (-1)^{j+1} s_j(x).
// On a point of weight w >= 1, G(q) = 1 - C(w-1, q-1) (mod p) and by Lucas
// C(w-1, q-1) = [q | w] (mod p). With CRT idempotents c_i,
//     P = sum_i c_i G(q_i)
// satisfies P = G(q_i) (mod p_i^e_i), so P(x) = 0 (mod m) only when every
// q_i divides |x|, i.e. only at x = 0 once n < prod q_i.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "logrank/error.hpp"
#include "logrank/modcore.hpp"
#include "logrank/polynomial.hpp"

namespace logrank {

struct OrRepresentation {
  Modulus mod;
  std::vector<std::int64_t> prime_power_targets;  // q_i = p_i^k_i
  std::vector<std::int64_t> idempotents;          // c_i
  int n = 0;                                      // prod q_i - 1
  SymmetricSum poly;
  std::size_t degree = 0;                         // max q_i - 1
  std::set<std::int64_t> accepting_set;           // filled by verification
  /// Single-prime modulus: degree is n, no savings over the trivial bound.
  bool no_savings = false;
};

/// sum_{j=1}^{q-1} (-1)^{j+1} s_j over n variables.
inline SymmetricSum build_G(int n, std::int64_t q) {
  if (q < 2) throw Error(Errc::invalid_argument, "build_G needs q >= 2");
  if (q > static_cast<std::int64_t>(n) + 1)
    throw Error(Errc::out_of_range, "build_G needs q <= n + 1");
  SymmetricSum g(n);
  for (int j = 1; j < q; ++j) g.add(j, j % 2 == 1 ? 1 : -1);
  return g;
}

/// Builds P = sum_i c_i G(p_i^k_i) on n = prod_i p_i^k_i - 1 variables.
/// The accepting set stays empty until verify_or_representation runs.
inline OrRepresentation build_or_polynomial(const Modulus& mod, const std::vector<int>& exponents) {
  if (exponents.size() != mod.num_primes())
    throw Error(Errc::dimension_mismatch, "need one exponent per prime of " + std::to_string(mod.value()) + " (" +
                                              std::to_string(mod.num_primes()) + "), got " +
                                              std::to_string(exponents.size()));
  OrRepresentation rep;
  rep.mod = mod;
  rep.no_savings = mod.num_primes() == 1;
  std::int64_t product = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw Error(Errc::invalid_argument, "exponents must be >= 1");
    const std::int64_t q = PrimePower{mod.prime(i), exponents[i]}.value();
    if (product > (std::int64_t{1} << 30) / q) throw Error(Errc::too_large, "prod q_i too large");
    product *= q;
    rep.prime_power_targets.push_back(q);
    rep.idempotents.push_back(crt_idempotent(mod, i));
    rep.degree = std::max(rep.degree, static_cast<std::size_t>(q - 1));
  }
  rep.n = static_cast<int>(product - 1);
  rep.poly = SymmetricSum(rep.n);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    rep.poly.add_scaled(build_G(rep.n, rep.prime_power_targets[i]), rep.idempotents[i]);
  if (rep.poly.degree() != rep.degree)
    throw Error(Errc::invariant_violation, "constructed degree differs from max q_i - 1");
  return rep;
}

struct OrVerification {
  std::set<std::int64_t> accepting_set;
  /// value -> number of weights w in [0, n] attaining it
  std::map<std::int64_t, int> attained;
};

/// Verifies P(w) != P(0) for every w in 1..n, one evaluation per weight.
/// On success also stores the accepting set in `rep`. Throws
/// verification_failure naming the colliding weights otherwise.
inline OrVerification verify_or_representation(OrRepresentation& rep) {
  OrVerification out;
  const std::int64_t zero_value = eval_symmetric(rep.poly, 0, rep.mod).value();
  std::vector<int> offending;
  for (int w = 0; w <= rep.poly.num_vars(); ++w) {
    const std::int64_t v = eval_symmetric(rep.poly, w, rep.mod).value();
    ++out.attained[v];
    if (w > 0 && v == zero_value) offending.push_back(w);
  }
  if (!offending.empty()) {
    std::string list;
    for (std::size_t i = 0; i < offending.size() && i < 20; ++i) list += (i ? "," : "") + std::to_string(offending[i]);
    if (offending.size() > 20) list += ",...";
    throw Error(Errc::verification_failure, "P(w) = P(0) = " + std::to_string(zero_value) + " at weights " + list);
  }
  out.accepting_set = {zero_value};
  rep.accepting_set = out.accepting_set;
  return out;
}

/// Per-instance form of the O(n^{1/l}) degree bound:
/// degree <= 2 * l * ceil((n+1)^{1/l}).
inline bool degree_within_bound(const OrRepresentation& rep) {
  const auto l = static_cast<double>(rep.mod.num_primes());
  const double root = std::pow(static_cast<double>(rep.n + 1), 1.0 / l);
  auto r = static_cast<std::int64_t>(std::ceil(root - 1e-9));
  // integer correction of the floating root
  auto pow_l = [&](std::int64_t base) {
    BigInt v = 1;
    for (std::size_t i = 0; i < rep.mod.num_primes(); ++i) v *= base;
    return v;
  };
  while (r > 1 && pow_l(r - 1) >= rep.n + 1) --r;
  while (pow_l(r) < rep.n + 1) ++r;
  return static_cast<double>(rep.degree) <= 2.0 * l * static_cast<double>(r);
}

/// True iff P mod p_i^e_i takes only the values 0 and 1 over all weights,
/// for every prime power p_i^e_i of m. Checked, not assumed: it holds when
/// every e_i = 1 and may fail otherwise.
inline bool prime_power_values_are_01(const OrRepresentation& rep) {
  for (std::size_t i = 0; i < rep.mod.num_primes(); ++i) {
    const Modulus mod_q = factorize_modulus(rep.mod.prime_power(i));
    for (int w = 0; w <= rep.n; ++w) {
      const auto v = eval_symmetric(rep.poly, w, mod_q).value();
      if (v != 0 && v != 1) return false;
    }
  }
  return true;
}

}  // namespace logrank
