#pragma once

// Explicit infinite families of numbers with three close factorizations.
// Every generator verifies its output by multiplication before returning and
// throws std::invalid_argument below its parameter domain, OverflowError
// once N no longer fits in 63 bits.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hyperfact/lattice.hpp"

namespace hyperfact {

struct PointTriple {
  u64 N = 0;
  std::array<LatticePoint, 3> points{};
  u64 max_diff = 0;

  friend auto operator<=>(const PointTriple&, const PointTriple&) = default;
};

/// Builds a PointTriple, computing max_diff. Does not check the products.
PointTriple make_point_triple(u64 N, const std::array<LatticePoint, 3>& pts);

/// All points on xy = N, pairwise distinct, max_diff consistent.
std::optional<std::string> check_point_triple(const PointTriple& t);

struct FamilyInfo {
  std::string_view family;
  /// K or n.
  u64 parameter;
  /// Size of the statistic relative to N^(1/4), for report tagging.
  std::string_view growth;
};

struct FamilyTriple {
  CloseTriple triple;
  FamilyInfo info;
};

struct FamilyPoints {
  PointTriple points;
  FamilyInfo info;
};

/// Equality case of the A-bound for A >= sqrt N: a2 = 2K+1, a1 = K+1,
/// b2 = 2K-1, b1 = K. K >= 2.
FamilyTriple thm1_family(u64 K);

/// N = K(K+1)^2(K+2) with points (K(K+1), (K+1)(K+2)), (K(K+2), (K+1)^2)
/// and the mirror of the second; max_diff = 2(K+1). K >= 1.
FamilyPoints thm2_poly_family(u64 K);

/// Non-optimal polynomial family with max_diff = 5K+1. K >= 1.
FamilyPoints note_family(u64 K);

/// Same-side family from the n-th solution (x, y) of x^2 - 2y^2 = 1:
/// b1 = (x-3)/2, b2 = y-2, B = b1(b1+3), A = (b1+1)(b1+2). n >= 2.
FamilyTriple pell_family(u64 n);

/// Polynomial same-side family with max_diff = 5K-1. K >= 3.
FamilyPoints thm3_remark_family(u64 K);

/// The three lattice points of a triple, ascending in x.
PointTriple to_point_triple(const CloseTriple& t);

}  // namespace hyperfact
