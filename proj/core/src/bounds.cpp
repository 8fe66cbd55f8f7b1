#include "hyperfact/bounds.hpp"

#include <stdexcept>

#include "hyperfact/arith.hpp"

namespace hyperfact {

std::string QuarterBound::to_decimal() const {
  const bool neg = numerator < 0;
  const u128 mag = neg ? static_cast<u128>(-(numerator + 1)) + 1 : static_cast<u128>(numerator);
  std::string s = (neg ? "-" : "") + to_string(mag / 4);
  switch (static_cast<int>(mag % 4)) {
    case 1: s += ".25"; break;
    case 2: s += ".5"; break;
    case 3: s += ".75"; break;
    default: break;
  }
  return s == "-0" ? "0" : s;
}

int QuarterBound::compare_integer(u64 value) const noexcept {
  const i128 lhs = static_cast<i128>(value) * 4;
  return lhs < numerator ? -1 : (lhs > numerator ? 1 : 0);
}

bool three_point_floor_admits(u64 m, u64 N) {
  constexpr const char* ctx = "thm2_bound";
  if (m <= 1) return true;  // the target always exceeds 2
  const u128 a = checked_mul(checked_mul(u128{4}, u128{m} + 1, ctx), u128{m} - 1, ctx);
  const u128 b = checked_add(checked_mul(u128{16}, u128{N}, ctx),
                             checked_mul(u128{m} + 1, u128{m} + 1, ctx), ctx);
  return cmp_mul_sqrt(a, b, N) <= 0;
}

bool same_side_floor_admits(u64 m, u64 N) {
  constexpr const char* ctx = "thm3_bound";
  if (m == 0) return true;
  const u128 o = 2 * u128{m} - 1;
  const u128 o2 = checked_mul(o, o, ctx);
  return checked_mul(o2, o2, ctx) <= checked_mul(u128{1024}, u128{N}, ctx);
}

ExactBound thm2_bound(u64 N) {
  if (N < 2) throw std::invalid_argument("thm2_bound: N must be >= 2");
  const u64 r = iroot4(N);
  // 2r <= 2 N^(1/4) < target < 2r + 3, so the floor lies in [2r, 2r + 2].
  const u64 lo = 2 * r >= 2 ? 2 * r - 2 : 0;
  u64 m = 2 * r + 3;
  while (m > lo && !three_point_floor_admits(m, N)) --m;
  if (!three_point_floor_admits(m, N) || three_point_floor_admits(m + 1, N)) {
    throw std::logic_error("thm2_bound: floor not bracketed for N=" + std::to_string(N));
  }
  ExactBound b{BoundKind::kThreePoints, N, m, {}};
  b.certificate = "m=" + std::to_string(m) + ": 4(m+1)(m-1)*sqrt(N) <= 16N+(m+1)^2 holds; m=" +
                  std::to_string(m + 1) + ": fails";
  return b;
}

ExactBound thm3_bound(u64 N) {
  if (N < 1) throw std::invalid_argument("thm3_bound: N must be >= 1");
  const u128 scaled = checked_mul(u128{1024}, u128{N}, "thm3_bound");
  const u128 q = iroot4(scaled);
  const u128 odd = (q % 2 == 1) ? q : q - 1;
  const u64 m = static_cast<u64>((odd + 1) / 2);

  // 1024 N is even and an odd fourth power is odd, so equality never occurs.
  if (odd * odd * odd * odd == scaled) throw std::logic_error("thm3_bound: odd fourth power equals 1024N");
  if (!same_side_floor_admits(m, N) || same_side_floor_admits(m + 1, N)) {
    throw std::logic_error("thm3_bound: floor not bracketed for N=" + std::to_string(N));
  }
  const u128 next = odd + 2;
  ExactBound b{BoundKind::kSameSide, N, m, {}};
  b.certificate = "(2m-1)^4 = " + to_string(odd * odd * odd * odd) + " < 1024N = " +
                  to_string(scaled) + " < (2m+1)^4 = " + to_string(next * next * next * next) +
                  " with m=" + std::to_string(m);
  return b;
}

bool replay_certificate(const ExactBound& b) {
  if (b.kind == BoundKind::kThreePoints) {
    return three_point_floor_admits(b.value, b.N) && !three_point_floor_admits(b.value + 1, b.N);
  }
  return same_side_floor_admits(b.value, b.N) && !same_side_floor_admits(b.value + 1, b.N);
}

QuarterBound thm1_bound(u64 a2) {
  if (a2 < 1) throw std::invalid_argument("thm1_bound: a2 must be >= 1");
  const i128 x = static_cast<i128>(a2);
  return {checked_mul(checked_mul(x, x - 3, "thm1_bound"), x + 1, "thm1_bound")};
}

QuarterBound thm05_bound(u64 m) {
  if (m < 1) throw std::invalid_argument("thm05_bound: m must be >= 1");
  const i128 x = static_cast<i128>(m);
  return {checked_mul(checked_mul(x, x - 1, "thm05_bound"), x - 1, "thm05_bound")};
}

}  // namespace hyperfact
