#pragma once

// Two-party protocol on a 0-1 communication matrix M of rank n.
//
// Both players factor M = X Y over Q (X = independent columns of M) and agree
// on k with kY integral and on a dot-product representation (B, C) mod m of
// dimension n. For row u, Alice sends the t+1 residues
//     msg_j = sum_i B[i][j] X[u][i]  (mod m).
// Bob, holding column v of kY, returns
//     sum_j msg_j (sum_i C[j][i] kY[i][v])  =  x^T A y  (mod m)
//     = k M[u][v] + sum_i p_i^e_i x^T G_i y  (mod m),
// i.e. k M[u][v] plus surplus terms, each 0 modulo some prime power of m.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "logrank/bilinear.hpp"
#include "logrank/error.hpp"
#include "logrank/exactla.hpp"
#include "logrank/matrix.hpp"
#include "logrank/modcore.hpp"

namespace logrank {

/// Fixed modulus, or the product of the first max(2, floor(log2 log2 n))
/// primes.
struct FixedModulus {
  std::int64_t m = 6;
};
struct LogLogPrimorial {};
using ModulusPolicy = std::variant<FixedModulus, LogLogPrimorial>;

/// max(2, floor(log2(log2(n)))), with log2 log2 n < 1 for n < 4.
inline int primes_for_rank(std::size_t n) {
  int l = 0;
  if (n >= 4) {
    // floor(log2(log2 n)) >= l  iff  n >= 2^(2^l)
    while (l < 5 && n >= (std::size_t{1} << (std::size_t{1} << (l + 1)))) ++l;
  }
  return std::max(2, l);
}

inline Modulus choose_modulus(const ModulusPolicy& policy, std::size_t rank) {
  if (const auto* fixed = std::get_if<FixedModulus>(&policy)) return factorize_modulus(fixed->m);
  return primorial(primes_for_rank(rank));
}

/// What Bob holds: C, his side of the factorization reduced mod m, and m.
/// No access to X, B or Alice's row.
struct BobView {
  Modulus mod;
  const ResidueMatrix& C;   // (t+1) x padded_n
  const ResidueMatrix& kY;  // padded_n x cols, reduced mod m
};

struct ProtocolInstance {
  BooleanMatrix M;
  Factorization fact;
  Modulus mod;
  BilinearRep rep;
  std::size_t padded_n = 0;

  ResidueMatrix A;                                // B C mod m
  std::vector<Matrix<std::int64_t>> surplus;      // G_i of A = I + sum q_i G_i
  ResidueMatrix kY_mod;                           // padded_n x cols

  std::size_t rank() const noexcept { return fact.rank(); }
  std::size_t t_plus_1() const noexcept { return rep.t_plus_1(); }
  std::int64_t k_mod() const { return mod.reduce(fact.k); }

  BobView bob() const { return BobView{mod, rep.C, kY_mod}; }

  /// Alice's vector: row u of X, zero-padded.
  std::vector<std::int64_t> alice_vector(std::size_t u) const {
    std::vector<std::int64_t> x(padded_n, 0);
    for (std::size_t i = 0; i < fact.rank(); ++i) x[i] = fact.X(u, i);
    return x;
  }

  /// Bob's vector: column v of kY mod m, zero-padded.
  std::vector<std::int64_t> bob_vector(std::size_t v) const { return kY_mod.column(v); }
};

inline ProtocolInstance setup(const BooleanMatrix& M, const ModulusPolicy& policy = FixedModulus{}) {
  ProtocolInstance inst;
  inst.M = M;
  inst.fact = factorize(M);
  const std::size_t n = inst.fact.rank();
  inst.mod = choose_modulus(policy, n);
  inst.rep = rep_for(n, inst.mod);
  inst.padded_n = inst.rep.n();
  inst.A = coefficient_matrix(inst.rep);
  if (!check_dot_rep(inst.A, inst.mod))
    throw Error(Errc::invariant_violation, "representation fails the dot-product check");
  inst.surplus = decompose_surplus(inst.A, inst.mod);
  inst.kY_mod = ResidueMatrix(inst.padded_n, M.cols(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < M.cols(); ++c) inst.kY_mod(i, c) = inst.mod.reduce(inst.fact.kY(i, c));
  return inst;
}

struct Transcript {
  std::vector<std::int64_t> messages;  // Alice -> Bob, residues mod m
  int bits_per_message = 0;            // ceil(log2 m)

  std::size_t alice_bits() const noexcept { return messages.size() * static_cast<std::size_t>(bits_per_message); }
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

inline Transcript alice_messages(const ProtocolInstance& inst, std::size_t u) {
  if (u >= inst.M.rows())
    throw Error(Errc::out_of_range, "row " + std::to_string(u) + " outside [0, " + std::to_string(inst.M.rows()) + ")");
  const auto x = inst.alice_vector(u);
  const std::size_t t = inst.t_plus_1();
  std::vector<std::int64_t> acc(t, 0);
  for (std::size_t i = 0; i < inst.padded_n; ++i) {
    if (x[i] == 0) continue;
    const auto brow = inst.rep.B.row(i);
    for (std::size_t j = 0; j < t; ++j) acc[j] += brow[j] * x[i];
  }
  Transcript tr;
  tr.bits_per_message = inst.mod.bits_per_residue();
  tr.messages.reserve(t);
  for (auto a : acc) tr.messages.push_back(inst.mod.reduce(a));
  return tr;
}

/// Bob's private right-hand sums  r_j = sum_i C[j][i] y_i  (mod m) for column v.
inline std::vector<std::int64_t> bob_column_sums(const BobView& bob, std::size_t v) {
  if (v >= bob.kY.cols())
    throw Error(Errc::out_of_range, "column " + std::to_string(v) + " outside [0, " + std::to_string(bob.kY.cols()) + ")");
  const ResidueMatrix& C = bob.C;
  std::vector<std::int64_t> sums(C.rows(), 0);
  for (std::size_t j = 0; j < C.rows(); ++j) {
    std::int64_t acc = 0;
    const auto crow = C.row(j);
    for (std::size_t i = 0; i < crow.size(); ++i) acc += crow[i] * bob.kY(i, v);
    sums[j] = bob.mod.reduce(acc);
  }
  return sums;
}

/// sum_j msg_j * r_j  (mod m).
inline Residue bob_combine(const BobView& bob, const Transcript& tr, const std::vector<std::int64_t>& sums) {
  if (tr.messages.size() != sums.size())
    throw Error(Errc::dimension_mismatch, "transcript has " + std::to_string(tr.messages.size()) +
                                              " messages, expected " + std::to_string(sums.size()));
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < sums.size(); ++j) acc = bob.mod.reduce(acc + tr.messages[j] * sums[j]);
  return Residue(acc, bob.mod);
}

inline Residue bob_evaluate(const BobView& bob, const Transcript& tr, std::size_t v) {
  return bob_combine(bob, tr, bob_column_sums(bob, v));
}

inline Residue bob_evaluate(const ProtocolInstance& inst, const Transcript& tr, std::size_t v) {
  return bob_evaluate(inst.bob(), tr, v);
}

struct Outcome {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;                  // Bob's output
  std::int64_t reference = 0;              // k M[u][v] mod m
  std::map<std::int64_t, std::int64_t> surplus;  // prime -> p^e x^T G y mod m
  bool exact_match = false;
};

/// x^T G_i  (mod m) for each surplus part; reused across columns.
inline std::vector<std::vector<std::int64_t>> surplus_row_forms(const ProtocolInstance& inst, std::size_t u) {
  const auto x = inst.alice_vector(u);
  std::vector<std::vector<std::int64_t>> forms;
  for (const auto& G : inst.surplus) {
    std::vector<std::int64_t> form(inst.padded_n, 0);
    for (std::size_t i = 0; i < inst.padded_n; ++i) {
      if (x[i] == 0) continue;
      const auto grow = G.row(i);
      for (std::size_t c = 0; c < grow.size(); ++c) form[c] += grow[c];
    }
    for (auto& f : form) f = inst.mod.reduce(f);
    forms.push_back(std::move(form));
  }
  return forms;
}

namespace detail {

inline Outcome assemble_outcome(const ProtocolInstance& inst, std::size_t u, std::size_t v, const Residue& value,
                                const std::vector<std::vector<std::int64_t>>& forms) {
  Outcome out;
  out.row = u;
  out.col = v;
  out.value = value.value();
  out.reference = inst.mod.reduce(inst.k_mod() * inst.M(u, v));
  std::int64_t total = out.reference;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::int64_t dot = 0;
    for (std::size_t c = 0; c < inst.padded_n; ++c) dot += forms[i][c] * inst.kY_mod(c, v);
    const std::int64_t part = inst.mod.reduce(inst.mod.prime_power(i) * inst.mod.reduce(dot));
    out.surplus[inst.mod.prime(i)] = part;
    total += part;
  }
  if (inst.mod.reduce(total) != out.value)
    throw Error(Errc::invariant_violation, "value != k M[u][v] + surplus at (" + std::to_string(u) + ", " +
                                               std::to_string(v) + ")");
  out.exact_match = out.value == out.reference;
  return out;
}

}  // namespace detail

/// One full exchange for entry (u, v), with the surplus decomposition checked.
inline Outcome run(const ProtocolInstance& inst, std::size_t u, std::size_t v) {
  const Transcript tr = alice_messages(inst, u);
  const Residue value = bob_evaluate(inst, tr, v);
  return detail::assemble_outcome(inst, u, v, value, surplus_row_forms(inst, u));
}

struct SweepSummary {
  std::size_t entries = 0;
  std::size_t exact_matches = 0;
  std::size_t congruence_checks = 0;  // entries where value = reference + surplus held
  std::map<std::int64_t, std::size_t> surplus_histogram;  // (value - reference) mod m -> count

  double exact_match_rate() const { return entries == 0 ? 0.0 : static_cast<double>(exact_matches) / entries; }
};

/// Runs every (u, v). Transcripts and Bob's column sums are computed once per
/// row and column; each entry still goes through bob_combine.
inline SweepSummary sweep(const ProtocolInstance& inst) {
  SweepSummary s;
  const BobView bob = inst.bob();
  std::vector<std::vector<std::int64_t>> col_sums;
  col_sums.reserve(inst.M.cols());
  for (std::size_t v = 0; v < inst.M.cols(); ++v) col_sums.push_back(bob_column_sums(bob, v));
  for (std::size_t u = 0; u < inst.M.rows(); ++u) {
    const Transcript tr = alice_messages(inst, u);
    const auto forms = surplus_row_forms(inst, u);
    for (std::size_t v = 0; v < inst.M.cols(); ++v) {
      const Outcome out = detail::assemble_outcome(inst, u, v, bob_combine(bob, tr, col_sums[v]), forms);
      ++s.entries;
      ++s.congruence_checks;
      if (out.exact_match) ++s.exact_matches;
      ++s.surplus_histogram[inst.mod.reduce(out.value - out.reference)];
    }
  }
  return s;
}

struct CostReport {
  std::size_t rank = 0;
  std::size_t t_plus_1 = 0;
  std::int64_t modulus = 0;
  int bits_per_message = 0;
  std::size_t alice_bits = 0;       // (t+1) * ceil(log2 m)
  std::size_t reply_bits = 0;       // Bob announcing his value; not part of alice_bits
  std::size_t trivial_bits = 0;     // ceil(log2 rows): Alice sends her input
  std::size_t rank_lower_bound = 0; // ceil(log2 rank), Mehlhorn-Schmidt floor
  bool beats_trivial = false;       // alice_bits < trivial_bits
  std::string asymptotic_t_bound = "t+1 = exp(O((log n)^(1/l) * log log n))";
};

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while (bits < 63 && (std::size_t{1} << bits) < x) ++bits;
  return bits;
}

inline CostReport make_cost_report(std::size_t rank, std::size_t rows, std::size_t t_plus_1, const Modulus& mod) {
  CostReport r;
  r.rank = rank;
  r.t_plus_1 = t_plus_1;
  r.modulus = mod.value();
  r.bits_per_message = mod.bits_per_residue();
  r.alice_bits = t_plus_1 * static_cast<std::size_t>(r.bits_per_message);
  r.reply_bits = static_cast<std::size_t>(r.bits_per_message);
  r.trivial_bits = ceil_log2(rows);
  r.rank_lower_bound = ceil_log2(rank);
  r.beats_trivial = r.alice_bits < r.trivial_bits;
  return r;
}

inline CostReport cost_report(const ProtocolInstance& inst) {
  return make_cost_report(inst.rank(), inst.M.rows(), inst.t_plus_1(), inst.mod);
}

}  // namespace logrank
