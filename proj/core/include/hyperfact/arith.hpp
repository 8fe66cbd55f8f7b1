#pragma once

// Exact integer primitives: floor roots, radical comparisons, and the
// solution stream of x^2 - 2y^2 = 1.

#include <vector>

#include "hyperfact/wide.hpp"

namespace hyperfact {

/// floor(sqrt(n)).
u64 isqrt(u64 n) noexcept;
u128 isqrt(u128 n) noexcept;

/// floor(n^(1/4)).
u64 iroot4(u64 n) noexcept;
u128 iroot4(u128 n) noexcept;

inline bool is_square(u64 n) noexcept {
  const u64 r = isqrt(n);
  return r * r == n;
}

/// Sign (-1, 0, +1) of a*sqrt(n) - b, decided without floating point.
/// Throws OverflowError if a guarded intermediate leaves 128 bits.
int cmp_mul_sqrt(u128 a, u128 b, u64 n);

struct PellSolution {
  u64 index;
  u64 x;
  u64 y;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// The first `count` positive solutions of x^2 - 2y^2 = 1, starting at
/// (3, 2). Throws std::invalid_argument for count == 0 and OverflowError
/// (carrying the last representable index) when a solution exceeds 64 bits.
std::vector<PellSolution> pell_solutions(u64 count);

}  // namespace hyperfact
