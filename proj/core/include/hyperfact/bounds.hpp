#pragma once

// Exact evaluators for the four lower/upper bounds. Floors involving N^(1/4)
// are decided by integer comparisons only; the comparisons that pinned the
// floor are kept in the result so they can be replayed.

#include <string>

#include "hyperfact/wide.hpp"

namespace hyperfact {

enum class BoundKind {
  /// floor(2 N^(1/4) + 1 / (2 N^(1/4) - 1)), three lattice points anywhere.
  kThreePoints,
  /// floor(2 sqrt(2) N^(1/4) + 1/2), three lattice points with x > sqrt N.
  kSameSide,
};

struct ExactBound {
  BoundKind kind;
  u64 N;
  u64 value;
  /// Human-readable record of the two integer comparisons that decided the
  /// floor: `value` satisfies the defining inequality and `value + 1` does not.
  std::string certificate;
};

/// A bound stored as numerator / 4 without reduction.
struct QuarterBound {
  i128 numerator;
  static constexpr i128 denominator = 4;

  bool is_integral() const noexcept { return numerator % 4 == 0; }
  /// Exact decimal rendering ("15", "31.5", "-0.75").
  std::string to_decimal() const;

  /// Sign of value*4 - numerator, i.e. compares an integer against the bound.
  int compare_integer(u64 value) const noexcept;

  friend bool operator==(const QuarterBound&, const QuarterBound&) = default;
};

/// Does m <= 2 N^(1/4) + 1/(2 N^(1/4) - 1) hold? Decided as
/// 4(m+1)(m-1) sqrt(N) <= 16N + (m+1)^2.
bool three_point_floor_admits(u64 m, u64 N);

/// Does m <= 2 sqrt(2) N^(1/4) + 1/2 hold? Decided as (2m-1)^4 <= 1024 N.
bool same_side_floor_admits(u64 m, u64 N);

/// Requires N >= 2.
ExactBound thm2_bound(u64 N);

/// Requires N >= 1.
ExactBound thm3_bound(u64 N);

/// Re-runs the two boundary comparisons recorded in a bound.
bool replay_certificate(const ExactBound& b);

/// a2 (a2 - 3) (a2 + 1) / 4; nonpositive for a2 <= 3. Requires a2 >= 1.
QuarterBound thm1_bound(u64 a2);

/// m (m - 1)^2 / 4. Requires m >= 1.
QuarterBound thm05_bound(u64 m);

}  // namespace hyperfact
