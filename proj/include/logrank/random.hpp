#pragma once

// Seeded 0-1 matrix generators. Only raw mt19937_64 output is used, so the
// same seed gives the same matrix on every platform.

#include <cstdint>
#include <random>

#include "logrank/exactla.hpp"

namespace logrank {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return bound <= 1 ? 0 : rng() % bound; }

/// Independent fair bits.
inline BooleanMatrix random_boolean_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BooleanMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<std::uint8_t>(rng() & 1u);
  return m;
}

/// Every row is one of `max_rank` random row patterns, so rank <= max_rank.
inline BooleanMatrix random_low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t max_rank, Rng& rng) {
  const BooleanMatrix patterns = random_boolean_matrix(max_rank == 0 ? 1 : max_rank, cols, rng);
  BooleanMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t p = uniform_below(rng, patterns.rows());
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = patterns(p, c);
  }
  return m;
}

}  // namespace logrank
