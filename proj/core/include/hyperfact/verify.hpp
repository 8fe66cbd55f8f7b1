#pragma once

// Range sweeps that check each bound for every N in [lo, hi].
//
// The range is cut into fixed-size chunks; each chunk sieves its own divisor
// lists and is evaluated independently, so the merged report depends only on
// (theorem, lo, hi, options), never on the number of worker threads.

#include <chrono>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperfact/bounds.hpp"
#include "hyperfact/families.hpp"
#include "hyperfact/lattice.hpp"

namespace hyperfact {

enum class Theorem {
  kWithdrawn,   // A, B <= m(m-1)^2/4 for m = max(a2, b2) >= 4 (known counterexample)
  kIncrements,  // same bound for m >= 5 (or a caller-chosen min_m)
  kUpperSide,   // 4A <= a2(a2-3)(a2+1) when B <= sqrt N <= A
  kThreePoint,  // m3 statistic >= thm2_bound
  kSameSide,    // same-side statistic >= thm3_bound for N >= 2^20
};

/// "0", "0.5", "1", "2", "3".
std::string_view theorem_label(Theorem t) noexcept;
/// Inverse of theorem_label; throws std::invalid_argument.
Theorem parse_theorem(std::string_view label);

enum class CaseKind { kViolation, kEquality, kInformational };

std::string_view case_kind_label(CaseKind k) noexcept;

using Witness = std::variant<std::monostate, CloseTriple, PointTriple>;

struct CaseRecord {
  u64 N = 0;
  /// The checked quantity: the min-max |x - y| for the point bounds,
  /// max(A, B) or A for the increment bounds.
  u64 statistic = 0;
  QuarterBound bound{0};
  CaseKind kind = CaseKind::kViolation;
  Witness witness;
  /// Set when an equality case fails the parameter characterization.
  std::string detail;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct SweepReport {
  Theorem theorem = Theorem::kThreePoint;
  u64 lo = 0;
  u64 hi = 0;
  u64 checked_count = 0;
  std::vector<CaseRecord> violations;
  std::vector<CaseRecord> equality_cases;
  std::vector<CaseRecord> informational;
  std::chrono::milliseconds elapsed{0};
  u64 chunk_count = 0;
  /// Triples seen with max(a2, b2)^3 <= 4 max(A, B); expected to stay 0.
  u64 cubic_gap_failures = 0;

  /// Equal in everything but timing.
  bool same_outcome(const SweepReport& o) const {
    return theorem == o.theorem && lo == o.lo && hi == o.hi && checked_count == o.checked_count &&
           violations == o.violations && equality_cases == o.equality_cases &&
           informational == o.informational && chunk_count == o.chunk_count &&
           cubic_gap_failures == o.cubic_gap_failures;
  }
};

struct SweepOptions {
  unsigned jobs = 1;
  u64 chunk_size = u64{1} << 15;
  /// Same-side sweep: record N < 2^20 with statistic <= bound as informational.
  bool below_threshold_informational = true;
  /// Smallest max(a2, b2) checked by the increment sweep; >= 4.
  u64 min_m = 5;
};

inline constexpr u64 kSameSideThreshold = u64{1} << 20;

/// Requires 6 <= lo <= hi.
SweepReport verify_thm2(u64 lo, u64 hi, const SweepOptions& opts = {});
SweepReport verify_thm3(u64 lo, u64 hi, const SweepOptions& opts = {});
SweepReport verify_thm1(u64 lo, u64 hi, const SweepOptions& opts = {});
/// Uses opts.min_m; min_m = 4 reproduces the withdrawn statement.
SweepReport verify_thm05(u64 lo, u64 hi, const SweepOptions& opts = {});

/// Dispatches on theorem; kWithdrawn forces min_m = 4.
SweepReport verify(Theorem theorem, u64 lo, u64 hi, const SweepOptions& opts = {});

/// The withdrawn bound's only known counterexample:
/// 72 = 6·12 = 8·9 = 9·8 with (a1, b1, a2, b2) = (2, 3, 3, 4).
const CloseTriple& known_withdrawn_counterexample() noexcept;

}  // namespace hyperfact
