#include <gtest/gtest.h>

#include "logrank/bbr.hpp"
#include "logrank/representation.hpp"
#include "oracles.hpp"

using namespace logrank;

namespace {

/// Pascal's triangle mod m, rows 0..n.
std::vector<std::vector<std::int64_t>> pascal_mod(int n, std::int64_t m) {
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(n + 2, 0));
  for (int w = 0; w <= n; ++w) {
    c[w][0] = 1 % m;
    for (int j = 1; j <= w; ++j) c[w][j] = (c[w - 1][j - 1] + c[w - 1][j]) % m;
  }
  return c;
}

/// G(q) at weight w directly from its definition, mod m.
std::int64_t G_at(int w, std::int64_t q, const std::vector<std::vector<std::int64_t>>& c, std::int64_t m) {
  std::int64_t total = 0;
  for (int j = 1; j < q && j <= w; ++j) total += (j % 2 ? 1 : -1) * c[w][j];
  return oracle::mod(total, m);
}

}  // namespace

TEST(BuildG, AlternatingCoefficients) {
  const auto g1 = build_G(71, 8);
  EXPECT_EQ(g1.degree(), 7u);
  for (int j = 1; j <= 7; ++j) EXPECT_EQ(g1.coeffs().at(j), j % 2 ? 1 : -1);
  const auto g2 = build_G(71, 9);
  EXPECT_EQ(g2.degree(), 8u);
  EXPECT_EQ(g2.coeffs().at(8), -1);
  EXPECT_EQ(build_G(5, 2), SymmetricSum(5).add(1, 1));
  EXPECT_THROW(build_G(5, 1), Error);
  EXPECT_THROW(build_G(5, 7), Error);
}

TEST(BuildOr, SeventyOneVariables) {
  auto rep = build_or_polynomial(factorize_modulus(6), {3, 2});
  EXPECT_EQ(rep.n, 71);
  EXPECT_EQ(rep.degree, 8u);
  EXPECT_EQ(rep.poly.degree(), 8u);
  EXPECT_EQ(rep.prime_power_targets, (std::vector<std::int64_t>{8, 9}));
  EXPECT_EQ(rep.idempotents, (std::vector<std::int64_t>{3, 4}));
  EXPECT_FALSE(rep.no_savings);

  SymmetricSum expected(71);
  expected.add_scaled(build_G(71, 8), 3).add_scaled(build_G(71, 9), 4);
  EXPECT_EQ(rep.poly, expected);

  const auto v = verify_or_representation(rep);
  EXPECT_EQ(v.accepting_set, (std::set<std::int64_t>{0}));
  EXPECT_EQ(rep.accepting_set, (std::set<std::int64_t>{0}));
  EXPECT_EQ(v.attained.at(0), 1);
}

TEST(BuildOr, SeventyOneAgainstPascalOracle) {
  const auto rep = build_or_polynomial(factorize_modulus(6), {3, 2});
  const auto c = pascal_mod(71, 6);
  const Modulus six = factorize_modulus(6);
  for (int w = 0; w <= 71; ++w) {
    const std::int64_t direct = oracle::mod(3 * G_at(w, 8, c, 6) + 4 * G_at(w, 9, c, 6), 6);
    EXPECT_EQ(eval_symmetric(rep.poly, w, six).value(), direct) << w;
    if (w > 0) {
      EXPECT_NE(direct, 0) << w;
    }
  }
  EXPECT_NE(eval_symmetric(rep.poly, 71, six).value(), 0);
}

TEST(BuildOr, LucasClosedForm) {
  // G(q)(w) = 1 - C(w-1, q-1) mod p for w >= 1
  for (auto [q, p] : {std::pair<std::int64_t, std::int64_t>{8, 2}, {9, 3}, {4, 2}, {25, 5}, {3, 3}}) {
    const auto c = pascal_mod(80, p);
    for (int w = 1; w <= 80; ++w) {
      const std::int64_t expected = oracle::mod(1 - c[w - 1][q - 1], p);
      EXPECT_EQ(G_at(w, q, c, p), expected) << "q=" << q << " w=" << w;
      EXPECT_EQ(expected, w % q == 0 ? 0 : 1);
    }
  }
}

TEST(BuildOr, FiveVariablesExhaustive) {
  auto rep = build_or_polynomial(factorize_modulus(6), {1, 1});
  EXPECT_EQ(rep.n, 5);
  EXPECT_EQ(rep.degree, 2u);
  // 3 s_1 + 4 (s_1 - s_2)
  const Modulus six = factorize_modulus(6);
  for (int w = 0; w <= 5; ++w)
    EXPECT_EQ(eval_symmetric(rep.poly, w, six), eval_symmetric(SymmetricSum(5).add(1, 7).add(2, -4), w, six));
  const auto exhaustive = check_weak_representation(rep.poly.expand(), or_function, 5, six);
  EXPECT_TRUE(exhaustive.represents);
  EXPECT_EQ(exhaustive.accepting, (std::set<std::int64_t>{0}));
  EXPECT_EQ(verify_or_representation(rep).accepting_set, (std::set<std::int64_t>{0}));
}

TEST(BuildOr, FifteenIdempotents) {
  auto rep = build_or_polynomial(factorize_modulus(15), {1, 1});
  EXPECT_EQ(rep.n, 14);
  EXPECT_EQ(rep.degree, 4u);
  EXPECT_EQ(rep.idempotents, (std::vector<std::int64_t>{10, 6}));
  EXPECT_EQ(verify_or_representation(rep).accepting_set, (std::set<std::int64_t>{0}));
  const auto exhaustive = check_weak_representation(rep.poly.expand(), or_function, 14, rep.mod);
  EXPECT_TRUE(exhaustive.represents);
  EXPECT_EQ(exhaustive.accepting, (std::set<std::int64_t>{0}));
}

TEST(BuildOr, SinglePrimeHasNoSavings) {
  auto rep = build_or_polynomial(factorize_modulus(4), {2});
  EXPECT_TRUE(rep.no_savings);
  EXPECT_EQ(rep.n, 3);
  EXPECT_EQ(rep.degree, 3u);  // degree = n
  EXPECT_NO_THROW(verify_or_representation(rep));
}

TEST(BuildOr, Errors) {
  EXPECT_THROW(build_or_polynomial(factorize_modulus(6), {3}), Error);
  EXPECT_THROW(build_or_polynomial(factorize_modulus(6), {0, 1}), Error);
  EXPECT_THROW(build_or_polynomial(factorize_modulus(6), {40, 30}), Error);
}

TEST(VerifyOr, CorruptedCoefficientIsReported) {
  auto rep = build_or_polynomial(factorize_modulus(6), {1, 1});
  rep.poly.add(1, 1);  // 2 s_1 + 2 s_2 = w(w+1) mod 6, zero at w = 2
  try {
    verify_or_representation(rep);
    FAIL() << "corrupted polynomial verified";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::verification_failure);
    EXPECT_NE(std::string(e.what()).find("weights"), std::string::npos);
  }
  EXPECT_TRUE(rep.accepting_set.empty());
}

TEST(BbrProperties, SweepDegreeAndZeroOne) {
  struct Case {
    std::int64_t m;
    std::vector<int> k;
  };
  const std::vector<Case> cases{{6, {1, 1}}, {6, {2, 1}}, {6, {3, 2}}, {6, {4, 3}}, {6, {2, 3}},
                                {15, {1, 1}}, {15, {2, 1}}, {30, {1, 1, 1}}, {30, {2, 1, 1}}, {10, {3, 1}}};
  for (const auto& tc : cases) {
    auto rep = build_or_polynomial(factorize_modulus(tc.m), tc.k);
    std::int64_t product = 1;
    std::int64_t max_q = 0;
    for (auto q : rep.prime_power_targets) {
      product *= q;
      max_q = std::max(max_q, q);
    }
    EXPECT_EQ(rep.n, product - 1);
    EXPECT_EQ(rep.degree, static_cast<std::size_t>(max_q - 1));
    EXPECT_EQ(verify_or_representation(rep).accepting_set, (std::set<std::int64_t>{0}));
    EXPECT_EQ(eval_symmetric(rep.poly, 0, rep.mod).value(), 0);
    for (int w = 1; w <= rep.n; ++w) {
      bool some_nonzero = false;
      for (std::size_t i = 0; i < rep.mod.num_primes(); ++i)
        some_nonzero = some_nonzero || eval_symmetric(rep.poly, w, rep.mod).value() % rep.mod.prime_power(i) != 0;
      EXPECT_TRUE(some_nonzero) << "m=" << tc.m << " w=" << w;
    }
    // square-free moduli: P mod p_i is the indicator 1 - [q_i | w]
    EXPECT_TRUE(prime_power_values_are_01(rep)) << tc.m;
  }
  EXPECT_TRUE(degree_within_bound(build_or_polynomial(factorize_modulus(6), {3, 2})));
  EXPECT_TRUE(degree_within_bound(build_or_polynomial(factorize_modulus(6), {1, 1})));
  EXPECT_TRUE(degree_within_bound(build_or_polynomial(factorize_modulus(30), {1, 1, 1})));
  // unbalanced: q = 2^10, 3 -> degree 1023 against n + 1 = 3072
  EXPECT_FALSE(degree_within_bound(build_or_polynomial(factorize_modulus(6), {10, 1})));
}

TEST(BbrProperties, ZeroOneCanFailWithRepeatedPrime) {
  // m = 12: P mod 4 is G(2) = s_1, which takes the value 2 at weight 2
  auto rep = build_or_polynomial(factorize_modulus(12), {1, 1});
  EXPECT_NO_THROW(verify_or_representation(rep));
  EXPECT_FALSE(prime_power_values_are_01(rep));
}
