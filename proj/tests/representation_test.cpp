#include <gtest/gtest.h>

#include <random>

#include "logrank/representation.hpp"
#include "oracles.hpp"

using namespace logrank;

namespace {

const Modulus kSix = factorize_modulus(6);

MultilinearPoly poly(const std::string& text, int n = 0) { return parse_polynomial(text, n); }

MultilinearPoly f_example() { return poly("1: 1 2\n1: 2 3\n1: 1 3\n"); }

MultilinearPoly random_poly(std::mt19937_64& rng, int n, std::int64_t m, double density) {
  MultilinearPoly p(n);
  std::bernoulli_distribution keep(density);
  for (std::uint32_t alpha = 0; alpha < (1u << n); ++alpha) {
    if (!keep(rng)) continue;
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if ((alpha >> i) & 1u) vars.push_back(i + 1);
    p.add(Monomial(vars), static_cast<Coeff>(rng() % static_cast<std::uint64_t>(3 * m)) - m);
  }
  return p;
}

/// g = f + surplus where the surplus only touches monomials with f = 0 mod m,
/// so g is 1-a-strong for f by construction.
MultilinearPoly one_strong_perturbation(std::mt19937_64& rng, const MultilinearPoly& f, const Modulus& mod) {
  MultilinearPoly g = f;
  const int n = f.num_vars();
  for (std::uint32_t alpha = 0; alpha < (1u << n); ++alpha) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if ((alpha >> i) & 1u) vars.push_back(i + 1);
    const Monomial mono(vars);
    if (mod.reduce(f.coeff(mono)) != 0 || rng() % 3 != 0) continue;
    const auto i = static_cast<std::size_t>(rng() % mod.num_primes());
    g.add(mono, mod.prime_power(i) * static_cast<Coeff>(rng() % 7));
  }
  return g;
}

}  // namespace

TEST(WeakRepresentation, OrOnFiveVariables) {
  // 3 s_1 + 4 (s_1 - s_2)
  const auto p = SymmetricSum(5).add(1, 7).add(2, -4).expand();
  const auto r = check_weak_representation(p, or_function, 5, kSix);
  EXPECT_TRUE(r.represents);
  EXPECT_EQ(r.accepting, (std::set<std::int64_t>{0}));
}

TEST(WeakRepresentation, RejectsWhenValuesCollide) {
  // s_1 mod 6 hits 0 again at weight 6
  const auto p = SymmetricSum(6).add(1, 1).expand();
  const auto r = check_weak_representation(p, or_function, 6, kSix);
  EXPECT_FALSE(r.represents);
  EXPECT_TRUE(r.accepting.empty());
}

TEST(WeakRepresentation, SymmetricOverloadMatchesExhaustive) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 10; ++n) {
    SymmetricSum s(n);
    for (int j = 1; j <= n; ++j) s.add(j, static_cast<Coeff>(rng() % 6));
    const auto by_weight = check_weak_representation(s, or_of_weight, kSix);
    const auto exhaustive = check_weak_representation(s.expand(), or_function, n, kSix);
    EXPECT_EQ(by_weight.represents, exhaustive.represents);
    EXPECT_EQ(by_weight.values_on_zeros, exhaustive.values_on_zeros);
    EXPECT_EQ(by_weight.values_on_ones, exhaustive.values_on_ones);
  }
}

TEST(WeakRepresentation, Errors) {
  EXPECT_THROW(check_weak_representation(f_example(), or_function, 4, kSix), Error);
  MultilinearPoly big(25);
  big.add(Monomial({25}), 1);
  try {
    check_weak_representation(big, or_function, 25, kSix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(WeakRepresentation, AgreesWithOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const std::int64_t m = trial % 2 ? 6 : 30;
    const Modulus mod = factorize_modulus(m);
    const auto p = random_poly(rng, n, m, 0.5);
    std::vector<bool> table(1u << n);
    for (auto&& bit : table) bit = rng() & 1u;
    auto g = [&](std::span<const std::uint8_t> x) {
      std::uint32_t bits = 0;
      for (std::size_t i = 0; i < x.size(); ++i) bits |= static_cast<std::uint32_t>(x[i]) << i;
      return static_cast<bool>(table[bits]);
    };
    std::set<std::int64_t> expected_s;
    const bool expected = oracle::weak_rep(p, table, n, m, &expected_s);
    const auto got = check_weak_representation(p, g, n, mod);
    ASSERT_EQ(got.represents, expected);
    if (expected) {
      EXPECT_EQ(got.accepting, expected_s);
    }
  }
}

TEST(Alternative, WorkedExample) {
  // 3x1x2 + 4x2x3 + x1x3 + 3x1^2 + 4x2, with 3x1^2 multilinearized
  const auto g = poly("3: 1 2\n4: 2 3\n1: 1 3\n3: 1 1\n4: 2\n");
  EXPECT_TRUE(check_alternative(f_example(), g, kSix));
  EXPECT_FALSE(check_0_a_strong(f_example(), g, kSix));  // 3x1 is 3 != 0 mod 3 where it disagrees mod 2
  EXPECT_FALSE(check_1_a_strong(f_example(), g, kSix));
}

TEST(Alternative, ScalarRejections) {
  EXPECT_FALSE(check_alternative(poly("1: 1\n"), poly("2: 1\n"), kSix));
  EXPECT_TRUE(check_alternative(poly("1: 1\n"), poly("3: 1\n"), kSix));
  EXPECT_TRUE(check_alternative(poly("1: 1\n"), poly("4: 1\n"), kSix));
  // 5 = 1 mod 2, so alternative; 5 is neither 1 nor 0 mod 3
  EXPECT_TRUE(check_alternative(poly("1: 1\n"), poly("5: 1\n"), kSix));
  EXPECT_FALSE(check_0_a_strong(poly("1: 1\n"), poly("5: 1\n"), kSix));
}

TEST(ZeroStrong, WorkedExample) {
  const auto g = poly("3: 1 2\n4: 2 3\n1: 1 3\n");
  EXPECT_TRUE(check_0_a_strong(f_example(), g, kSix));
  EXPECT_TRUE(check_alternative(f_example(), g, kSix));
  EXPECT_FALSE(check_1_a_strong(f_example(), g, kSix));
}

TEST(ZeroStrong, OneOnlyAsOneThreeOrFour) {
  // coefficient 1 may appear as 1, 3 or 4 and nothing else
  std::set<std::int64_t> ok;
  for (Coeff b = 0; b < 6; ++b)
    if (check_0_a_strong(poly("1: 1 2\n"), MultilinearPoly(2).add(Monomial({1, 2}), b), kSix)) ok.insert(b);
  EXPECT_EQ(ok, (std::set<std::int64_t>{1, 3, 4}));
  EXPECT_FALSE(check_0_a_strong(f_example(), poly("5: 1 2\n1: 2 3\n1: 1 3\n"), kSix));
  EXPECT_TRUE(check_0_a_strong(f_example(), f_example(), kSix));
}

TEST(OneStrong, WorkedExample) {
  const auto g = poly("1: 1 2\n1: 2 3\n1: 1 3\n3: 1 1\n4: 2\n");
  EXPECT_TRUE(check_1_a_strong(f_example(), g, kSix));
  EXPECT_TRUE(check_alternative(f_example(), g, kSix));
  EXPECT_FALSE(check_0_a_strong(f_example(), g, kSix));
}

TEST(OneStrong, NegativeControls) {
  EXPECT_FALSE(check_1_a_strong(poly("1: 1 2\n"), poly("3: 1 2\n"), kSix));
  EXPECT_TRUE(check_1_a_strong(f_example(), f_example(), kSix));
  // representatives differing by a multiple of m are the same coefficient
  EXPECT_TRUE(check_1_a_strong(poly("1: 1 2\n"), poly("7: 1 2\n-6: 3\n"), kSix));
}

TEST(Decompose, WorkedExample) {
  const auto g = poly("1: 1 2\n1: 2 3\n1: 1 3\n3: 1 1\n4: 2\n");
  const auto parts = decompose_1_a_strong(f_example(), g, kSix);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], MultilinearPoly(3).add(Monomial({2}), 2));  // 4x2 = 2 * (2 x2)
  EXPECT_EQ(parts[1], MultilinearPoly(3).add(Monomial({1}), 1));  // 3x1 = 3 * x1
  for (std::uint32_t x = 0; x < 8; ++x) {
    const auto lhs = oracle::eval_bits(f_example(), x) + 2 * oracle::eval_bits(parts[0], x) +
                     3 * oracle::eval_bits(parts[1], x);
    EXPECT_EQ(oracle::mod(lhs, 6), oracle::mod(oracle::eval_bits(g, x), 6));
  }
}

TEST(Decompose, ZeroSurplusAndPureSurplus) {
  for (const auto& part : decompose_1_a_strong(f_example(), f_example(), kSix)) EXPECT_TRUE(part.terms().empty());
  const auto parts = decompose_1_a_strong(MultilinearPoly(2), poly("2: 1\n3: 2\n"), kSix);
  EXPECT_EQ(parts[0], poly("1: 1\n", 2));
  EXPECT_EQ(parts[1], poly("1: 2\n"));
}

TEST(Decompose, SmallestPrimeWinsTies) {
  // surplus 10 mod 30 is divisible by 2 and by 5
  const Modulus thirty = factorize_modulus(30);
  const auto parts = decompose_1_a_strong(MultilinearPoly(1), poly("10: 1\n"), thirty);
  EXPECT_EQ(parts[0], poly("5: 1\n"));
  EXPECT_TRUE(parts[1].terms().empty());
  EXPECT_TRUE(parts[2].terms().empty());
}

TEST(Decompose, RejectsNonStrong) {
  try {
    decompose_1_a_strong(poly("1: 1 2\n"), poly("3: 1 2\n"), kSix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_1_a_strong);
  }
}

TEST(CheckerProperties, StrongImpliesAlternative) {
  std::mt19937_64 rng(23);
  for (std::int64_t m : {6, 12, 30}) {
    const Modulus mod = factorize_modulus(m);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const auto f = random_poly(rng, n, m, 0.4);
      // bias g toward f so the strong notions are not vacuous
      MultilinearPoly g = trial % 2 ? one_strong_perturbation(rng, f, mod) : random_poly(rng, n, m, 0.4);
      const bool alt = check_alternative(f, g, mod);
      if (check_0_a_strong(f, g, mod)) {
        EXPECT_TRUE(alt);
      }
      if (check_1_a_strong(f, g, mod)) {
        EXPECT_TRUE(alt);
      }
      if (trial % 2) {
        EXPECT_TRUE(check_1_a_strong(f, g, mod));
      }
    }
  }
}

TEST(CheckerProperties, AgreeWithDefinitionalOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const std::int64_t m = std::array<std::int64_t, 3>{6, 12, 30}[trial % 3];
    const Modulus mod = factorize_modulus(m);
    const auto f = random_poly(rng, n, m, 0.5);
    const auto g = trial % 2 ? one_strong_perturbation(rng, f, mod) : random_poly(rng, n, m, 0.5);
    EXPECT_EQ(check_alternative(f, g, mod), oracle::strong_rep(f, g, n, m, oracle::Kind::alternative));
    EXPECT_EQ(check_0_a_strong(f, g, mod), oracle::strong_rep(f, g, n, m, oracle::Kind::zero_strong));
    EXPECT_EQ(check_1_a_strong(f, g, mod), oracle::strong_rep(f, g, n, m, oracle::Kind::one_strong));
  }
}

TEST(CheckerProperties, DecomposeRecomposeExhaustive) {
  std::mt19937_64 rng(31);
  for (std::int64_t m : {6, 30, 12}) {
    const Modulus mod = factorize_modulus(m);
    for (int n = 1; n <= 10; ++n) {
      const auto f = random_poly(rng, n, m, n <= 6 ? 0.5 : 0.05);
      const auto g = one_strong_perturbation(rng, f, mod);
      const auto parts = decompose_1_a_strong(f, g, mod);
      std::set<Monomial> seen;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [mono, c] : parts[i].terms()) {
          EXPECT_TRUE(seen.insert(mono).second) << "supports overlap";
          EXPECT_EQ(mod.reduce(f.coeff(mono)), 0) << "surplus shares a monomial with f";
        }
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        std::int64_t total = oracle::eval_bits(f, x);
        for (std::size_t i = 0; i < parts.size(); ++i) total += mod.prime_power(i) * oracle::eval_bits(parts[i], x);
        ASSERT_EQ(oracle::mod(total, m), oracle::mod(oracle::eval_bits(g, x), m)) << "n=" << n << " x=" << x;
      }
    }
  }
}

namespace {

/// All homogeneous degree-2 polynomials on n variables with coefficients
/// from `values`, indexed by the tuple in base |values|.
std::vector<MultilinearPoly> quadratic_family(int n, const std::vector<Coeff>& values) {
  std::vector<Monomial> monos;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) monos.push_back(Monomial({i, j}));
  std::size_t count = 1;
  for (std::size_t k = 0; k < monos.size(); ++k) count *= values.size();
  std::vector<MultilinearPoly> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    MultilinearPoly p(n);
    std::size_t rest = idx;
    for (const auto& mono : monos) {
      p.add(mono, values[rest % values.size()]);
      rest /= values.size();
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST(CheckerProperties, OneStrongDeterminesQuadraticForm) {
  // f, f' homogeneous quadratic with coefficients 0 or +-1 mod 6; a g that is
  // 1-a-strong for both forces f = f'.
  for (int n = 2; n <= 4; ++n) {
    const auto fs = quadratic_family(n, {0, 1, 5});
    const auto gs = quadratic_family(n, {0, 1, 2, 3, 4, 5});
    for (const auto& g : gs) {
      int passing = 0;
      for (const auto& f : fs) {
        if (check_1_a_strong(f, g, kSix)) ++passing;
        if (passing > 1) break;
      }
      ASSERT_LE(passing, 1);
    }
  }
}
