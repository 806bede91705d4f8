#pragma once

// Exact arithmetic substrate: composite moduli with their prime-power
// factorization, canonical residues, big integers/rationals and binomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "logrank/error.hpp"

namespace logrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  std::int64_t prime;
  int exponent;

  std::int64_t value() const {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= prime;
    return v;
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Smallest non-negative representative of `a` modulo `m` (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

/// A modulus m >= 2 together with its factorization m = prod p_i^e_i,
/// primes strictly increasing.
class Modulus {
 public:
  Modulus() = default;

  /// Throws invalid_modulus unless `factors` is a valid ascending
  /// factorization of `m`.
  Modulus(std::int64_t m, std::vector<PrimePower> factors) : m_(m), factors_(std::move(factors)) {
    if (m_ < 2) throw Error(Errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(m_));
    std::int64_t product = 1;
    std::int64_t last = 1;
    for (const auto& f : factors_) {
      if (f.exponent < 1 || f.prime <= last || !is_prime(f.prime))
        throw Error(Errc::invalid_modulus, "malformed factorization of " + std::to_string(m_));
      last = f.prime;
      product *= f.value();
    }
    if (product != m_)
      throw Error(Errc::invalid_modulus, "factorization does not multiply to " + std::to_string(m_));
  }

  std::int64_t value() const noexcept { return m_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  /// Number of distinct primes (often written l).
  std::size_t num_primes() const noexcept { return factors_.size(); }
  std::int64_t prime(std::size_t i) const { return factors_.at(i).prime; }
  std::int64_t prime_power(std::size_t i) const { return factors_.at(i).value(); }

  std::int64_t reduce(std::int64_t a) const { return mod_floor(a, m_); }
  std::int64_t reduce(const BigInt& a) const { return mod_floor(a, m_); }

  /// ceil(log2 m): bits needed to send one residue.
  int bits_per_residue() const noexcept {
    int bits = 0;
    while ((std::int64_t{1} << bits) < m_) ++bits;
    return bits;
  }

  std::string to_string() const {
    std::string s = std::to_string(m_) + " =";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      s += (i == 0 ? " " : " * ") + std::to_string(factors_[i].prime);
      if (factors_[i].exponent > 1) s += "^" + std::to_string(factors_[i].exponent);
    }
    return s;
  }

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }

 private:
  std::int64_t m_ = 0;
  std::vector<PrimePower> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const Modulus& mod) { return os << mod.value(); }

/// Trial-division factorization; moduli here are small.
inline Modulus factorize_modulus(std::int64_t m) {
  if (m < 2) throw Error(Errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(m));
  std::vector<PrimePower> factors;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return Modulus(m, std::move(factors));
}

/// Product of the first `count` primes.
inline Modulus primorial(int count) {
  if (count < 1) throw Error(Errc::invalid_argument, "primorial needs at least one prime");
  std::vector<PrimePower> factors;
  std::int64_t m = 1;
  for (std::int64_t p = 2; static_cast<int>(factors.size()) < count; ++p) {
    if (!Modulus::is_prime(p)) continue;
    if (m > INT64_MAX / p) throw Error(Errc::too_large, "primorial overflows 64 bits");
    m *= p;
    factors.push_back({p, 1});
  }
  return Modulus(m, std::move(factors));
}

/// Canonical residue in [0, m).
class Residue {
 public:
  Residue(std::int64_t a, const Modulus& mod) : value_(mod.reduce(a)), m_(mod.value()) {}
  Residue(const BigInt& a, const Modulus& mod) : value_(mod.reduce(a)), m_(mod.value()) {}

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return m_; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(mod_floor(a.value_ + b.value_, a.m_), a.m_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(mod_floor(a.value_ - b.value_, a.m_), a.m_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(mod_floor(a.value_ * b.value_, a.m_), a.m_);
  }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(std::int64_t canonical, std::int64_t m) : value_(canonical), m_(m) {}

  void require_same(const Residue& other) const {
    if (m_ != other.m_) throw Error(Errc::invalid_argument, "residues of different moduli");
  }

  std::int64_t value_;
  std::int64_t m_;
};

inline std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value(); }

/// Residues of `a` modulo each prime power of `mod`.
inline std::vector<std::int64_t> crt_split(std::int64_t a, const Modulus& mod) {
  std::vector<std::int64_t> parts;
  parts.reserve(mod.num_primes());
  for (std::size_t i = 0; i < mod.num_primes(); ++i) parts.push_back(mod_floor(a, mod.prime_power(i)));
  return parts;
}

/// The CRT idempotent e_i: e_i = 1 mod p_i^e_i and e_i = 0 mod every other
/// prime power. For m = 6 these are 3 (for p = 2) and 4 (for p = 3).
inline std::int64_t crt_idempotent(const Modulus& mod, std::size_t i) {
  const std::int64_t q = mod.prime_power(i);
  const std::int64_t cofactor = mod.value() / q;
  // cofactor * inv(cofactor mod q) mod m
  std::int64_t inv = 0;
  for (std::int64_t c = 1; c < q; ++c) {
    if (mod_floor(cofactor * c, q) == 1) {
      inv = c;
      break;
    }
  }
  return mod_floor(cofactor * inv, mod.value());
}

/// Inverse of crt_split: the unique value in [0, m) with the given residues.
inline std::int64_t crt_combine(const std::vector<std::int64_t>& parts, const Modulus& mod) {
  if (parts.size() != mod.num_primes())
    throw Error(Errc::dimension_mismatch, "crt_combine: wrong number of residues");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    acc = mod_floor(acc + mod_floor(parts[i], mod.prime_power(i)) * crt_idempotent(mod, i), mod.value());
  return acc;
}

/// Exact C(w, j); zero when j > w.
inline BigInt binomial(std::int64_t w, std::int64_t j) {
  if (w < 0 || j < 0) throw Error(Errc::invalid_argument, "binomial of negative argument");
  if (j > w) return 0;
  if (j > w - j) j = w - j;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    result *= w - j + i;
    result /= i;
  }
  return result;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace logrank
