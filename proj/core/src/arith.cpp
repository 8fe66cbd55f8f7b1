#include "hyperfact/arith.hpp"

#include <bit>
#include <stdexcept>

namespace hyperfact {

namespace {

int bit_width(u128 n) noexcept {
  const u64 hi = static_cast<u64>(n >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<u64>(n));
}

// Newton's iteration from an overestimate 2^ceil(bits/2) > sqrt(n); the
// sequence decreases monotonically to floor(sqrt(n)).
u128 newton_isqrt(u128 n) noexcept {
  if (n < 2) return n;
  u128 x = u128{1} << ((bit_width(n) + 1) / 2);
  for (;;) {
    const u128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  // Final correction by multiplication. x <= 2^64 - 1 here, so x*x fits.
  constexpr u128 kMaxRoot = std::numeric_limits<u64>::max();
  while (x * x > n) --x;
  while (x < kMaxRoot && (x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

u128 isqrt(u128 n) noexcept { return newton_isqrt(n); }

u64 isqrt(u64 n) noexcept { return static_cast<u64>(newton_isqrt(n)); }

// floor(sqrt(floor(sqrt(n)))) == floor(n^(1/4)).
u128 iroot4(u128 n) noexcept {
  u128 r = newton_isqrt(newton_isqrt(n));
  while (r * r * r * r > n) --r;
  return r;
}

u64 iroot4(u64 n) noexcept { return static_cast<u64>(iroot4(u128{n})); }

int cmp_mul_sqrt(u128 a, u128 b, u64 n) {
  constexpr const char* ctx = "cmp_mul_sqrt";
  if (a == 0 || n == 0) return b == 0 ? 0 : -1;

  const u64 r = isqrt(n);
  const u128 ar = checked_mul(a, u128{r}, ctx);
  const u64 e = n - r * r;  // n = r^2 + e, 0 <= e <= 2r

  if (ar > b) return 1;  // a*sqrt(n) >= a*r > b
  if (ar == b) return e == 0 ? 0 : 1;
  if (e == 0) return -1;  // a*sqrt(n) == a*r < b

  // r < sqrt(n) < r + 1 and b = a*r + c with c > 0.
  const u128 c = b - ar;
  if (c >= a) return -1;  // b >= a*(r+1) > a*sqrt(n)

  // a*sqrt(n) vs a*r + c  <=>  a^2*n vs (a*r + c)^2  <=>  a^2*e vs c*(2*a*r + c)
  const u128 lhs = checked_mul(checked_mul(a, a, ctx), u128{e}, ctx);
  const u128 rhs = checked_mul(c, checked_add(checked_mul(ar, 2, ctx), c, ctx), ctx);
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

std::vector<PellSolution> pell_solutions(u64 count) {
  if (count == 0) throw std::invalid_argument("pell_solutions: count must be >= 1");
  std::vector<PellSolution> out;
  out.reserve(count);
  u128 x = 3, y = 2;
  for (u64 i = 1; i <= count; ++i) {
    if (x > std::numeric_limits<u64>::max() || y > std::numeric_limits<u64>::max()) {
      throw OverflowError("pell_solutions: solution " + std::to_string(i) + " exceeds 64 bits",
                          i - 1);
    }
    out.push_back({i, static_cast<u64>(x), static_cast<u64>(y)});
    const u128 nx = 3 * x + 4 * y;  // x, y < 2^64, so no 128-bit overflow
    const u128 ny = 2 * x + 3 * y;
    x = nx;
    y = ny;
  }
  return out;
}

}  // namespace hyperfact
