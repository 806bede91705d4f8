#pragma once

// Sparse multilinear polynomials with integer coefficients, elementary
// symmetric sums, and their text format.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "logrank/error.hpp"
#include "logrank/modcore.hpp"

namespace logrank {

using Coeff = std::int64_t;

/// Product of distinct variables, stored as strictly increasing 1-based
/// indices. The empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;

  /// Accepts indices in any order with repeats; x_i^k collapses to x_i.
  explicit Monomial(std::vector<int> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (!vars_.empty() && vars_.front() < 1)
      throw Error(Errc::invalid_argument, "variable indices are 1-based");
  }

  const std::vector<int>& vars() const noexcept { return vars_; }
  std::size_t degree() const noexcept { return vars_.size(); }
  int max_var() const noexcept { return vars_.empty() ? 0 : vars_.back(); }

  /// True iff every variable of the monomial is 1 at `point` (0-based storage).
  bool is_set(std::span<const std::uint8_t> point) const {
    for (int v : vars_)
      if (!point[static_cast<std::size_t>(v - 1)]) return false;
    return true;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> vars_;
};

/// A term c * x_{i1}^{k1} ... as read from input, before multilinearization.
struct PowerTerm {
  Coeff coeff = 0;
  std::vector<std::pair<int, int>> powers;  // (variable, exponent >= 1)
};

class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  explicit MultilinearPoly(int n) : n_(n) {
    if (n < 0) throw Error(Errc::invalid_argument, "negative variable count");
  }

  int num_vars() const noexcept { return n_; }
  const std::map<Monomial, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t degree() const noexcept {
    std::size_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
  }

  Coeff coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * mono; drops the entry if the sum cancels to zero.
  MultilinearPoly& add(const Monomial& mono, Coeff c) {
    if (mono.max_var() > n_)
      throw Error(Errc::out_of_range, "variable x" + std::to_string(mono.max_var()) + " exceeds n = " +
                                          std::to_string(n_));
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  MultilinearPoly& add(std::vector<int> vars, Coeff c) { return add(Monomial(std::move(vars)), c); }

  MultilinearPoly& operator+=(const MultilinearPoly& other) {
    n_ = std::max(n_, other.n_);
    for (const auto& [mono, c] : other.terms_) add(mono, c);
    return *this;
  }

  MultilinearPoly scaled(Coeff k) const {
    MultilinearPoly out(n_);
    if (k == 0) return out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * k);
    return out;
  }

  /// Coefficients reduced into [0, m); zero residues dropped.
  MultilinearPoly reduced(const Modulus& mod) const {
    MultilinearPoly out(n_);
    for (const auto& [mono, c] : terms_) out.add(mono, mod.reduce(c));
    return out;
  }

  /// Exact integer value at a 0-1 point.
  Coeff eval_integer(std::span<const std::uint8_t> point) const {
    if (point.size() != static_cast<std::size_t>(n_))
      throw Error(Errc::dimension_mismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                                std::to_string(n_) + " variables");
    Coeff acc = 0;
    for (const auto& [mono, c] : terms_)
      if (mono.is_set(point)) acc += c;
    return acc;
  }

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  int n_ = 0;
  std::map<Monomial, Coeff> terms_;
};

/// Replaces every x_i^k by x_i and sums colliding coefficients.
inline MultilinearPoly multilinearize(std::span<const PowerTerm> terms, int n) {
  MultilinearPoly out(n);
  for (const auto& term : terms) {
    std::vector<int> vars;
    for (auto [var, exponent] : term.powers) {
      if (exponent < 1) throw Error(Errc::invalid_argument, "exponents must be positive");
      vars.push_back(var);
    }
    out.add(Monomial(std::move(vars)), term.coeff);
  }
  return out;
}

/// (P(point) mod m).
inline Residue eval_01(const MultilinearPoly& poly, std::span<const std::uint8_t> point, const Modulus& mod) {
  return Residue(poly.eval_integer(point), mod);
}

/// s_j(x) over n variables: the sum of all degree-j multilinear monomials.
/// SymmetricSum holds sum_j coeffs[j] * s_j.
class SymmetricSum {
 public:
  SymmetricSum() = default;
  explicit SymmetricSum(int n) : n_(n) {
    if (n < 0) throw Error(Errc::invalid_argument, "negative variable count");
  }

  int num_vars() const noexcept { return n_; }
  const std::map<int, Coeff>& coeffs() const noexcept { return coeffs_; }

  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<std::size_t>(coeffs_.rbegin()->first); }

  SymmetricSum& add(int j, Coeff c) {
    if (j < 1 || j > n_)
      throw Error(Errc::out_of_range, "s_" + std::to_string(j) + " undefined for n = " + std::to_string(n_));
    if (c == 0) return *this;
    auto [it, inserted] = coeffs_.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
  }

  SymmetricSum& add_scaled(const SymmetricSum& other, Coeff k) {
    if (other.n_ != n_) throw Error(Errc::dimension_mismatch, "symmetric sums over different n");
    for (const auto& [j, c] : other.coeffs_) add(j, c * k);
    return *this;
  }

  /// Number of monomials in the expansion.
  BigInt expanded_size() const {
    BigInt total = 0;
    for (const auto& [j, c] : coeffs_) total += binomial(n_, j);
    return total;
  }

  /// Full expansion; throws too_large past `limit` monomials.
  MultilinearPoly expand(std::size_t limit = 1u << 20) const {
    if (expanded_size() > limit) throw Error(Errc::too_large, "expansion exceeds monomial limit");
    MultilinearPoly out(n_);
    for (const auto& [j, c] : coeffs_) {
      std::vector<int> subset(static_cast<std::size_t>(j));
      for (int i = 0; i < j; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
      while (true) {
        out.add(Monomial(subset), c);
        int pos = j - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n_ - j + pos + 1) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < j; ++i) subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
    return out;
  }

  friend bool operator==(const SymmetricSum&, const SymmetricSum&) = default;

 private:
  int n_ = 0;
  std::map<int, Coeff> coeffs_;
};

/// Value on any 0-1 point of Hamming weight w, using s_j = C(w, j) there.
inline Residue eval_symmetric(const SymmetricSum& sum, int weight, const Modulus& mod) {
  if (weight < 0 || weight > sum.num_vars())
    throw Error(Errc::out_of_range, "weight " + std::to_string(weight) + " outside [0, " +
                                        std::to_string(sum.num_vars()) + "]");
  BigInt acc = 0;
  for (const auto& [j, c] : sum.coeffs()) acc += binomial(weight, j) * c;
  return Residue(acc, mod);
}

// ---------------------------------------------------------------------------
// Text formats
//
// Monomial form, one term per line:   <coeff>: <i1> <i2> ... <ik>
// An empty index list is the constant term; repeated indices are powers and
// get multilinearized. Blank lines and lines starting with '#' are ignored.
//
// Symmetric form:   symmetric <n>   followed by lines   <coeff>: s<j>

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Coeff parse_coeff(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad coefficient '" + text + "'");
}

}  // namespace detail

/// Parses the monomial form. The variable count is the largest index seen,
/// or `min_vars` if that is larger.
inline MultilinearPoly parse_polynomial(std::istream& in, int min_vars = 0) {
  std::vector<PowerTerm> terms;
  std::string line;
  int line_no = 0;
  int n = min_vars;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected '<coeff>: <indices>'");
    PowerTerm term;
    term.coeff = detail::parse_coeff(detail::trim(line.substr(0, colon)), line_no);
    std::istringstream rest(line.substr(colon + 1));
    std::map<int, int> powers;
    std::string tok;
    while (rest >> tok) {
      int var = 0;
      try {
        std::size_t used = 0;
        var = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad variable index '" + tok + "'");
      }
      if (var < 1) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": indices are 1-based");
      ++powers[var];
      n = std::max(n, var);
    }
    term.powers.assign(powers.begin(), powers.end());
    terms.push_back(std::move(term));
  }
  return multilinearize(terms, n);
}

inline MultilinearPoly parse_polynomial(const std::string& text, int min_vars = 0) {
  std::istringstream in(text);
  return parse_polynomial(in, min_vars);
}

inline void write_polynomial(std::ostream& out, const MultilinearPoly& poly) {
  out << "# n = " << poly.num_vars() << '\n';
  for (const auto& [mono, c] : poly.terms()) {
    out << c << ':';
    for (int v : mono.vars()) out << ' ' << v;
    out << '\n';
  }
}

inline void write_symmetric(std::ostream& out, const SymmetricSum& sum) {
  out << "symmetric " << sum.num_vars() << '\n';
  for (const auto& [j, c] : sum.coeffs()) out << c << ": s" << j << '\n';
}

inline SymmetricSum parse_symmetric(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<SymmetricSum> sum;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!sum) {
      std::istringstream head(line);
      std::string word;
      int n = -1;
      if (!(head >> word >> n) || word != "symmetric" || n < 0)
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'symmetric <n>'");
      sum.emplace(n);
      continue;
    }
    const auto colon = line.find(':');
    const std::string rhs = colon == std::string::npos ? "" : detail::trim(line.substr(colon + 1));
    if (colon == std::string::npos || rhs.size() < 2 || rhs.front() != 's')
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected '<coeff>: s<j>'");
    const Coeff c = detail::parse_coeff(detail::trim(line.substr(0, colon)), line_no);
    const int j = static_cast<int>(detail::parse_coeff(rhs.substr(1), line_no));
    sum->add(j, c);
  }
  if (!sum) throw Error(Errc::parse_error, "missing 'symmetric <n>' header");
  return *sum;
}

}  // namespace logrank
