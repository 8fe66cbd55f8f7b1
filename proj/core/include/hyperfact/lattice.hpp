#pragma once

// Lattice points on the hyperbola xy = N and the close-factorization triples
//   N = A*B = (A + a1)(B - b1) = (A + a2)(B - b2).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfact/wide.hpp"

namespace hyperfact {

struct LatticePoint {
  u64 x;
  u64 y;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// |x - y|, the L1 distance of a lattice point to (sqrt N, sqrt N).
inline u64 l1_distance(LatticePoint p) noexcept { return p.x > p.y ? p.x - p.y : p.y - p.x; }

/// One instance of three close factorizations. The three lattice points are
/// (A, B), (A + a1, B - b1) and (A + a2, B - b2).
struct CloseTriple {
  u64 N = 0;
  u64 A = 0;
  u64 B = 0;
  u64 a1 = 0;
  u64 b1 = 0;
  u64 a2 = 0;
  u64 b2 = 0;

  /// a2*b1 - b2*a1; positive for every genuine triple.
  i128 D() const noexcept {
    return static_cast<i128>(a2) * b1 - static_cast<i128>(b2) * a1;
  }
  i128 d1() const noexcept { return static_cast<i128>(a1) - static_cast<i128>(b1); }
  i128 d2() const noexcept { return static_cast<i128>(a2) - static_cast<i128>(b2); }

  u64 max_increment() const noexcept { return a2 > b2 ? a2 : b2; }
  u64 max_side() const noexcept { return A > B ? A : B; }

  std::array<LatticePoint, 3> points() const noexcept {
    return {{{A, B}, {A + a1, B - b1}, {A + a2, B - b2}}};
  }

  friend auto operator<=>(const CloseTriple&, const CloseTriple&) = default;
};

/// Checks every structural invariant of a triple by multiplication: the three
/// products equal N, a1 < a2, b1 < b2, b2 < B and a_i*B - b_i*A = a_i*b_i.
/// Returns a description of the first failed invariant, or nullopt.
std::optional<std::string> check_triple(const CloseTriple& t);

/// max(a2, b2)^3 > 4 max(A, B).
bool satisfies_cubic_gap(const CloseTriple& t) noexcept;

/// Divisors of N in ascending order (trial division up to sqrt N).
std::vector<u64> divisors(u64 N);

/// One point (d, N/d) per divisor d, ascending in x.
std::vector<LatticePoint> lattice_points(u64 N);

/// Ascending multiset {|x - y|} over all lattice points; size tau(N).
std::vector<u64> abs_diffs(u64 N);

/// The minimum over 3-subsets of lattice points of max |x - y|, or nullopt
/// when fewer than three lattice points exist.
std::optional<u64> min_max_diff_3(u64 N);

/// Same statistic computed from an ascending divisor list of N. Used by the
/// sweeps, which already hold the divisors from the sieve.
std::optional<u64> min_max_diff_3(u64 N, std::span<const u64> divs);

/// x - N/x for the third-smallest divisor x strictly above sqrt N.
std::optional<u64> min_max_diff_3_same_side(u64 N);
std::optional<u64> min_max_diff_3_same_side(u64 N, std::span<const u64> divs);

/// Three distinct lattice points attaining min_max_diff_3, ascending in x.
std::optional<std::array<LatticePoint, 3>> closest_three_points(u64 N, std::span<const u64> divs);

/// The three smallest divisors strictly above sqrt N as lattice points.
std::optional<std::array<LatticePoint, 3>> closest_same_side_points(u64 N,
                                                                    std::span<const u64> divs);

/// Every triple d1 < d2 < d3 of divisors as a CloseTriple with A = d1;
/// C(tau(N), 3) entries.
std::vector<CloseTriple> close_triples(u64 N);

/// Recovers (A, B, N) from increments when D > 0 divides both numerators.
/// The result is re-verified by multiplication. Throws OverflowError when N
/// would not fit in 63 bits, std::invalid_argument unless a1 < a2, b1 < b2.
std::optional<CloseTriple> reconstruct(u64 a1, u64 b1, u64 a2, u64 b2);

/// "N = A·B = (A+a1)·(B-b1) = (A+a2)·(B-b2)" with the products spelled out.
std::string format_factorizations(u64 N, std::span<const LatticePoint> points);

}  // namespace hyperfact
