#include "hyperfact/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperfact/arith.hpp"

namespace hyperfact {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

PointTriple checked_points(u64 N, const std::array<LatticePoint, 3>& pts, const char* ctx) {
  PointTriple t = make_point_triple(N, pts);
  if (auto err = check_point_triple(t)) throw std::logic_error(std::string(ctx) + ": " + *err);
  return t;
}

CloseTriple checked_triple(const CloseTriple& t, const char* ctx) {
  if (auto err = check_triple(t)) throw std::logic_error(std::string(ctx) + ": " + *err);
  return t;
}

std::optional<CloseTriple> pell_triple(const PellSolution& s) {
  const u64 b1 = (s.x - 3) / 2;
  const u64 b2 = s.y - 2;
  const u128 B = u128{b1} * (u128{b1} + 3);
  const u128 A = (u128{b1} + 1) * (u128{b1} + 2);
  if (A > kMaxN || B > kMaxN) return std::nullopt;
  u128 N;
  if (__builtin_mul_overflow(A, B, &N) || N > kMaxN) return std::nullopt;
  return CloseTriple{static_cast<u64>(N), static_cast<u64>(A), static_cast<u64>(B),
                     (s.x - 1) / 2,       b1,                   s.y,
                     b2};
}

}  // namespace

PointTriple make_point_triple(u64 N, const std::array<LatticePoint, 3>& pts) {
  PointTriple t{N, pts, 0};
  for (const auto& p : pts) t.max_diff = std::max(t.max_diff, l1_distance(p));
  return t;
}

std::optional<std::string> check_point_triple(const PointTriple& t) {
  for (const auto& p : t.points) {
    if (p.x == 0 || p.y == 0) return "non-positive coordinate";
    if (u128{p.x} * p.y != t.N) return "point (" + std::to_string(p.x) + ", " +
                                       std::to_string(p.y) + ") is not on xy = N";
  }
  if (t.points[0] == t.points[1] || t.points[1] == t.points[2] || t.points[0] == t.points[2]) {
    return "points are not pairwise distinct";
  }
  u64 m = 0;
  for (const auto& p : t.points) m = std::max(m, l1_distance(p));
  if (m != t.max_diff) return "max_diff mismatch";
  return std::nullopt;
}

FamilyTriple thm1_family(u64 K) {
  constexpr const char* ctx = "thm1_family";
  require(K >= 2, "thm1_family: K must be >= 2");
  const u128 k = K;
  const u128 A = checked_mul(checked_mul(2 * k + 1, k + 1, ctx), k - 1, ctx);
  const u128 B = checked_mul(checked_mul(2 * k - 1, k, ctx), k, ctx);
  const u64 N = narrow_n(checked_mul(A, B, ctx), ctx);
  const CloseTriple t{N, static_cast<u64>(A), static_cast<u64>(B), K + 1, K, 2 * K + 1, 2 * K - 1};
  return {checked_triple(t, ctx), {"thm1", K, "A = a2(a2-3)(a2+1)/4"}};
}

FamilyPoints thm2_poly_family(u64 K) {
  constexpr const char* ctx = "thm2_poly_family";
  require(K >= 1, "thm2_poly_family: K must be >= 1");
  const u128 k = K;
  const u128 kk1 = checked_mul(k, k + 1, ctx);
  const u128 k1k2 = checked_mul(k + 1, k + 2, ctx);
  const u128 kk2 = checked_mul(k, k + 2, ctx);
  const u128 k1sq = checked_mul(k + 1, k + 1, ctx);
  const u64 N = narrow_n(checked_mul(kk1, k1k2, ctx), ctx);
  const auto x1 = static_cast<u64>(kk1), y1 = static_cast<u64>(k1k2);
  const auto x2 = static_cast<u64>(kk2), y2 = static_cast<u64>(k1sq);
  return {checked_points(N, {{{x1, y1}, {x2, y2}, {y2, x2}}}, ctx), {"poly", K, "2 N^(1/4)"}};
}

FamilyPoints note_family(u64 K) {
  constexpr const char* ctx = "note_family";
  require(K >= 1, "note_family: K must be >= 1");
  const u128 k = K;
  const u128 x2 = checked_mul(2 * k, 3 * k + 1, ctx);
  const u128 y2 = checked_mul(3 * k, 2 * k + 1, ctx);
  const u128 x1 = x2 - 2 * k;  // 6K^2
  const u128 y1 = checked_mul(2 * k + 1, 3 * k + 1, ctx);
  const u64 N = narrow_n(checked_mul(x2, y2, ctx), ctx);
  const auto p1 = LatticePoint{static_cast<u64>(x1), static_cast<u64>(y1)};
  const auto p2 = LatticePoint{static_cast<u64>(x2), static_cast<u64>(y2)};
  return {checked_points(N, {{p1, p2, {p2.y, p2.x}}}, ctx),
          {"note", K, "5/sqrt(6) N^(1/4) ~ 2.04124 N^(1/4)"}};
}

FamilyTriple pell_family(u64 n) {
  constexpr const char* ctx = "pell_family";
  require(n >= 2, "pell_family: n must be >= 2 (n = 1 gives b1 = 0)");
  // Walk the solution stream so an overflow can report the last good index.
  u64 last_valid = 0;
  std::optional<CloseTriple> t;
  std::vector<PellSolution> sols;
  try {
    sols = pell_solutions(n);
  } catch (const OverflowError&) {
  }
  for (u64 i = 2; i <= n; ++i) {
    if (i > sols.size() || !(t = pell_triple(sols[i - 1]))) {
      throw OverflowError(std::string(ctx) + ": n=" + std::to_string(i) +
                              " gives N beyond 63 bits; last valid n=" + std::to_string(last_valid),
                          last_valid);
    }
    last_valid = i;
  }
  return {checked_triple(*t, ctx), {"pell", n, "2 sqrt(2) N^(1/4)"}};
}

FamilyPoints thm3_remark_family(u64 K) {
  constexpr const char* ctx = "thm3_remark_family";
  // K = 2 puts x1 exactly at sqrt N.
  require(K >= 3, "thm3_remark_family: K must be >= 3");
  const u128 k = K;
  const u128 x1 = checked_mul(2 * (k + 1), k - 1, ctx), y1 = checked_mul(k, 2 * k - 1, ctx);
  const u128 x2 = checked_mul(2 * k - 1, k + 1, ctx), y2 = checked_mul(2 * k, k - 1, ctx);
  const u128 x3 = checked_mul(2 * k, k + 1, ctx), y3 = checked_mul(2 * k - 1, k - 1, ctx);
  const u64 N = narrow_n(checked_mul(x1, y1, ctx), ctx);
  if (checked_mul(x1, x1, ctx) <= N) throw std::logic_error("thm3_remark_family: x1 <= sqrt N");
  auto pt = [](u128 x, u128 y) { return LatticePoint{static_cast<u64>(x), static_cast<u64>(y)}; };
  return {checked_points(N, {{pt(x1, y1), pt(x2, y2), pt(x3, y3)}}, ctx),
          {"remark", K, "2.5 sqrt(2) N^(1/4)"}};
}

PointTriple to_point_triple(const CloseTriple& t) { return make_point_triple(t.N, t.points()); }

}  // namespace hyperfact
