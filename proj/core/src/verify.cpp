#include "hyperfact/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hyperfact/sieve.hpp"

namespace hyperfact {

namespace {

// Beyond this, a cubic in m dwarfs 4 * 2^63 and the rational bounds hold
// strictly; skipping the product keeps it inside 128 bits.
constexpr u64 kHugeIncrement = u64{1} << 22;

struct ChunkResult {
  u64 checked = 0;
  u64 cubic_gap_failures = 0;
  std::vector<CaseRecord> violations;
  std::vector<CaseRecord> equality;
  std::vector<CaseRecord> informational;
};

void add_case(ChunkResult& r, CaseRecord c) {
  switch (c.kind) {
    case CaseKind::kViolation: r.violations.push_back(std::move(c)); break;
    case CaseKind::kEquality: r.equality.push_back(std::move(c)); break;
    case CaseKind::kInformational: r.informational.push_back(std::move(c)); break;
  }
}

std::size_t first_at_or_above_root(u64 N, std::span<const u64> divs) {
  const auto it = std::partition_point(divs.begin(), divs.end(), [N](u64 d) { return d < N / d; });
  return static_cast<std::size_t>(it - divs.begin());
}

CloseTriple triple_at(u64 N, std::span<const u64> divs, std::size_t i, std::size_t j, std::size_t k) {
  const u64 A = divs[i];
  const u64 B = N / A;
  return {N, A, B, divs[j] - A, B - N / divs[j], divs[k] - A, B - N / divs[k]};
}

void check_three_point(u64 N, std::span<const u64> divs, ChunkResult& r) {
  const auto pts = closest_three_points(N, divs);
  if (!pts) return;
  ++r.checked;
  const PointTriple w = make_point_triple(N, *pts);
  const u64 bound = thm2_bound(N).value;
  if (w.max_diff > bound) return;
  add_case(r, {N, w.max_diff, QuarterBound{static_cast<i128>(bound) * 4},
               w.max_diff < bound ? CaseKind::kViolation : CaseKind::kEquality, w, {}});
}

void check_same_side(u64 N, std::span<const u64> divs, const SweepOptions& opts, ChunkResult& r) {
  const auto pts = closest_same_side_points(N, divs);
  if (!pts) return;
  const bool applies = N >= kSameSideThreshold;
  if (!applies && !opts.below_threshold_informational) return;
  if (applies) ++r.checked;
  const PointTriple w = make_point_triple(N, *pts);
  const u64 bound = thm3_bound(N).value;
  if (w.max_diff > bound) return;
  CaseKind kind = CaseKind::kInformational;
  if (applies) kind = w.max_diff < bound ? CaseKind::kViolation : CaseKind::kEquality;
  add_case(r, {N, w.max_diff, QuarterBound{static_cast<i128>(bound) * 4}, kind, w, {}});
}

// Equality in the A-bound must come with a2 odd > 3 and the whole tuple
// (A, B, a1, b1, b2) fixed by a2.
bool matches_equality_shape(const CloseTriple& t) {
  const u128 a2 = t.a2;
  if (a2 <= 3 || a2 % 2 == 0) return false;
  return 4 * u128{t.A} == a2 * (a2 + 1) * (a2 - 3) &&
         4 * u128{t.B} == (a2 - 2) * (a2 - 1) * (a2 - 1) && 2 * u128{t.a1} == a2 + 1 &&
         2 * u128{t.b1} == a2 - 1 && u128{t.b2} == a2 - 2;
}

// Triples with B <= sqrt N <= A: all three x-coordinates are divisors at or
// above sqrt N. The bound depends on (A, a2) only, so each (first, last)
// divisor pair is decided once and the middle divisor is enumerated only
// when a case has to be recorded.
void check_upper_side(u64 N, std::span<const u64> divs, ChunkResult& r) {
  const std::size_t s = first_at_or_above_root(N, divs);
  const std::size_t t = divs.size();
  if (t - s < 3) return;
  ++r.checked;
  for (std::size_t i = s; i + 2 < t; ++i) {
    const u64 A = divs[i];
    const u64 B = N / A;
    for (std::size_t k = i + 2; k < t; ++k) {
      const u64 a2 = divs[k] - A;
      const u64 b2 = B - N / divs[k];
      const u64 m = std::max(a2, b2);
      if (m < kHugeIncrement && u128{m} * m * m <= u128{4} * A) r.cubic_gap_failures += k - i - 1;
      if (a2 >= kHugeIncrement) continue;
      const QuarterBound bound = thm1_bound(a2);
      const int cmp = bound.compare_integer(A);
      if (cmp < 0) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        const CloseTriple w = triple_at(N, divs, i, j, k);
        CaseRecord c{N, A, bound, CaseKind::kViolation, w, {}};
        if (cmp == 0) {
          if (matches_equality_shape(w)) {
            c.kind = CaseKind::kEquality;
          } else {
            c.detail = "equality outside the odd-a2 characterization";
          }
        }
        add_case(r, std::move(c));
      }
    }
  }
}

// All ordered divisor triples; the bound depends on (A, B, a2, b2), which
// the outer pair fixes.
void check_increments(u64 N, std::span<const u64> divs, u64 min_m, ChunkResult& r) {
  const std::size_t t = divs.size();
  bool counted = false;
  for (std::size_t i = 0; i + 2 < t; ++i) {
    const u64 A = divs[i];
    const u64 B = N / A;
    const u64 side = std::max(A, B);
    for (std::size_t k = i + 2; k < t; ++k) {
      const u64 a2 = divs[k] - A;
      const u64 b2 = B - N / divs[k];
      const u64 m = std::max(a2, b2);
      if (m < kHugeIncrement && u128{m} * m * m <= u128{4} * side) r.cubic_gap_failures += k - i - 1;
      if (m < min_m) continue;
      if (!counted) {
        ++r.checked;
        counted = true;
      }
      if (m >= kHugeIncrement) continue;
      const QuarterBound bound = thm05_bound(m);
      const int cmp = bound.compare_integer(side);
      if (cmp < 0) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        add_case(r, {N, side, bound, cmp > 0 ? CaseKind::kViolation : CaseKind::kEquality,
                     triple_at(N, divs, i, j, k), {}});
      }
    }
  }
}

ChunkResult evaluate_chunk(Theorem theorem, u64 lo, u64 hi, const SweepOptions& opts) {
  ChunkResult r;
  const SegmentDivisors seg(lo, hi);
  std::vector<u64> divs;
  for (u64 n = lo;; ++n) {
    seg.divisors(n, divs);
    switch (theorem) {
      case Theorem::kThreePoint: check_three_point(n, divs, r); break;
      case Theorem::kSameSide: check_same_side(n, divs, opts, r); break;
      case Theorem::kUpperSide: check_upper_side(n, divs, r); break;
      case Theorem::kWithdrawn:
      case Theorem::kIncrements: check_increments(n, divs, opts.min_m, r); break;
    }
    if (n == hi) break;
  }
  return r;
}

// Runs chunk evaluations on `jobs` threads pulling chunk indices from a
// shared counter; results land in per-chunk slots so merging is ordered.
std::vector<ChunkResult> run_chunks(Theorem theorem, u64 lo, u64 hi, const SweepOptions& opts,
                                    u64 chunk_count) {
  std::vector<ChunkResult> results(chunk_count);
  std::atomic<u64> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const u64 c = next.fetch_add(1);
      if (c >= chunk_count) return;
      const u64 clo = lo + c * opts.chunk_size;
      const u64 chi = std::min(hi, clo + (opts.chunk_size - 1));
      try {
        results[c] = evaluate_chunk(theorem, clo, chi, opts);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = chunk_count;
        return;
      }
    }
  };

  const unsigned jobs = static_cast<unsigned>(std::min<u64>(std::max(1u, opts.jobs), chunk_count));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void validate_range(u64 lo, u64 hi, u64 min_lo, const char* ctx) {
  if (lo < min_lo || lo > hi || hi > kMaxN) {
    throw std::invalid_argument(std::string(ctx) + ": need " + std::to_string(min_lo) +
                                " <= lo <= hi < 2^63");
  }
}

}  // namespace

std::string_view theorem_label(Theorem t) noexcept {
  switch (t) {
    case Theorem::kWithdrawn: return "0";
    case Theorem::kIncrements: return "0.5";
    case Theorem::kUpperSide: return "1";
    case Theorem::kThreePoint: return "2";
    case Theorem::kSameSide: return "3";
  }
  return "?";
}

Theorem parse_theorem(std::string_view label) {
  for (auto t : {Theorem::kWithdrawn, Theorem::kIncrements, Theorem::kUpperSide,
                 Theorem::kThreePoint, Theorem::kSameSide}) {
    if (theorem_label(t) == label) return t;
  }
  throw std::invalid_argument("unknown theorem '" + std::string(label) + "' (expected 0, 0.5, 1, 2 or 3)");
}

std::string_view case_kind_label(CaseKind k) noexcept {
  switch (k) {
    case CaseKind::kViolation: return "violation";
    case CaseKind::kEquality: return "equality";
    case CaseKind::kInformational: return "informational";
  }
  return "?";
}

SweepReport verify(Theorem theorem, u64 lo, u64 hi, const SweepOptions& opts_in) {
  SweepOptions opts = opts_in;
  if (opts.chunk_size == 0) throw std::invalid_argument("verify: chunk_size must be >= 1");
  if (opts.jobs == 0) throw std::invalid_argument("verify: jobs must be >= 1");
  switch (theorem) {
    case Theorem::kThreePoint: validate_range(lo, hi, 6, "verify_thm2"); break;
    case Theorem::kWithdrawn:
      opts.min_m = 4;
      validate_range(lo, hi, 1, "verify_thm0");
      break;
    case Theorem::kIncrements:
      if (opts.min_m < 4) throw std::invalid_argument("verify_thm05: min_m must be >= 4");
      validate_range(lo, hi, 1, "verify_thm05");
      break;
    default: validate_range(lo, hi, 1, "verify"); break;
  }

  const auto start = std::chrono::steady_clock::now();
  const u64 chunk_count = (hi - lo) / opts.chunk_size + 1;
  auto chunks = run_chunks(theorem, lo, hi, opts, chunk_count);

  SweepReport rep;
  rep.theorem = theorem;
  rep.lo = lo;
  rep.hi = hi;
  rep.chunk_count = chunk_count;
  for (auto& c : chunks) {
    rep.checked_count += c.checked;
    rep.cubic_gap_failures += c.cubic_gap_failures;
    std::move(c.violations.begin(), c.violations.end(), std::back_inserter(rep.violations));
    std::move(c.equality.begin(), c.equality.end(), std::back_inserter(rep.equality_cases));
    std::move(c.informational.begin(), c.informational.end(), std::back_inserter(rep.informational));
  }
  auto by_n = [](const CaseRecord& a, const CaseRecord& b) { return a.N < b.N; };
  std::stable_sort(rep.violations.begin(), rep.violations.end(), by_n);
  std::stable_sort(rep.equality_cases.begin(), rep.equality_cases.end(), by_n);
  std::stable_sort(rep.informational.begin(), rep.informational.end(), by_n);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

SweepReport verify_thm2(u64 lo, u64 hi, const SweepOptions& opts) {
  return verify(Theorem::kThreePoint, lo, hi, opts);
}

SweepReport verify_thm3(u64 lo, u64 hi, const SweepOptions& opts) {
  return verify(Theorem::kSameSide, lo, hi, opts);
}

SweepReport verify_thm1(u64 lo, u64 hi, const SweepOptions& opts) {
  return verify(Theorem::kUpperSide, lo, hi, opts);
}

SweepReport verify_thm05(u64 lo, u64 hi, const SweepOptions& opts) {
  return verify(Theorem::kIncrements, lo, hi, opts);
}

const CloseTriple& known_withdrawn_counterexample() noexcept {
  static const CloseTriple t{72, 6, 12, 2, 3, 3, 4};
  return t;
}

}  // namespace hyperfact
