#include "hyperfact/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperfact/arith.hpp"

namespace hyperfact {

namespace {

// Number of divisors d with d < N/d; divisors at or above sqrt N follow.
std::size_t count_below_root(u64 N, std::span<const u64> divs) {
  const auto it = std::partition_point(divs.begin(), divs.end(), [N](u64 d) { return d < N / d; });
  return static_cast<std::size_t>(it - divs.begin());
}

}  // namespace

std::optional<std::string> check_triple(const CloseTriple& t) {
  constexpr const char* ctx = "check_triple";
  if (t.A == 0 || t.B == 0) return "A and B must be positive";
  if (t.a1 == 0 || t.b1 == 0) return "a1 and b1 must be positive";
  if (!(t.a1 < t.a2)) return "a1 < a2 violated";
  if (!(t.b1 < t.b2)) return "b1 < b2 violated";
  if (!(t.b2 < t.B)) return "B - b2 must be positive";
  const u128 n = checked_mul(u128{t.A}, u128{t.B}, ctx);
  if (n != t.N) return "A*B != N";
  if (checked_mul(u128{t.A} + t.a1, u128{t.B - t.b1}, ctx) != n) return "(A+a1)(B-b1) != N";
  if (checked_mul(u128{t.A} + t.a2, u128{t.B - t.b2}, ctx) != n) return "(A+a2)(B-b2) != N";
  for (const auto& [a, b] : {std::pair{t.a1, t.b1}, std::pair{t.a2, t.b2}}) {
    const u128 aB = checked_mul(u128{a}, u128{t.B}, ctx);
    const u128 bA = checked_mul(u128{b}, u128{t.A}, ctx);
    if (aB <= bA || aB - bA != checked_mul(u128{a}, u128{b}, ctx)) return "a_i*B - b_i*A != a_i*b_i";
  }
  if (t.D() <= 0) return "D = a2*b1 - b2*a1 must be positive";
  return std::nullopt;
}

bool satisfies_cubic_gap(const CloseTriple& t) noexcept {
  const u128 m = t.max_increment();
  // m >= 2^22 already gives m^3 >= 2^66 > 4 * 2^64.
  if (m >= (u128{1} << 22)) return true;
  return m * m * m > u128{4} * t.max_side();
}

std::vector<u64> divisors(u64 N) {
  if (N == 0) throw std::invalid_argument("divisors: N must be >= 1");
  std::vector<u64> low, high;
  const u64 r = isqrt(N);
  for (u64 d = 1; d <= r; ++d) {
    if (N % d == 0) {
      low.push_back(d);
      if (d != N / d) high.push_back(N / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<LatticePoint> lattice_points(u64 N) {
  std::vector<LatticePoint> pts;
  for (u64 d : divisors(N)) pts.push_back({d, N / d});
  return pts;
}

std::vector<u64> abs_diffs(u64 N) {
  std::vector<u64> out;
  for (const auto& p : lattice_points(N)) out.push_back(l1_distance(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<u64> min_max_diff_3(u64 N) {
  const auto divs = divisors(N);
  return min_max_diff_3(N, divs);
}

std::optional<std::array<LatticePoint, 3>> closest_three_points(u64 N, std::span<const u64> divs) {
  if (divs.size() < 3) return std::nullopt;
  const std::size_t k = count_below_root(N, divs);
  const bool square = divs.size() == 2 * k + 1;
  // The smallest |x - y| come in mirror pairs from the divisors just below
  // sqrt N; a square N adds the center point with difference 0.
  const u64 d = divs[k - 1];
  if (square) {
    const u64 r = divs[k];
    return std::array<LatticePoint, 3>{{{d, N / d}, {r, r}, {N / d, d}}};
  }
  const u64 e = divs[k - 2];
  return std::array<LatticePoint, 3>{{{e, N / e}, {d, N / d}, {N / d, d}}};
}

std::optional<u64> min_max_diff_3(u64 N, std::span<const u64> divs) {
  const auto pts = closest_three_points(N, divs);
  if (!pts) return std::nullopt;
  u64 m = 0;
  for (const auto& p : *pts) m = std::max(m, l1_distance(p));
  return m;
}

std::optional<std::array<LatticePoint, 3>> closest_same_side_points(u64 N,
                                                                    std::span<const u64> divs) {
  const std::size_t k = count_below_root(N, divs);
  // Divisors strictly above sqrt N are exactly the last k.
  if (k < 3) return std::nullopt;
  const std::size_t s = divs.size() - k;
  std::array<LatticePoint, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = {divs[s + i], N / divs[s + i]};
  return out;
}

std::optional<u64> min_max_diff_3_same_side(u64 N, std::span<const u64> divs) {
  const auto pts = closest_same_side_points(N, divs);
  if (!pts) return std::nullopt;
  return (*pts)[2].x - (*pts)[2].y;
}

std::optional<u64> min_max_diff_3_same_side(u64 N) {
  const auto divs = divisors(N);
  return min_max_diff_3_same_side(N, divs);
}

std::vector<CloseTriple> close_triples(u64 N) {
  const auto divs = divisors(N);
  std::vector<CloseTriple> out;
  const std::size_t t = divs.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      for (std::size_t k = j + 1; k < t; ++k) {
        const u64 A = divs[i];
        const u64 B = N / A;
        out.push_back({N, A, B, divs[j] - A, B - N / divs[j], divs[k] - A, B - N / divs[k]});
      }
    }
  }
  return out;
}

std::optional<CloseTriple> reconstruct(u64 a1, u64 b1, u64 a2, u64 b2) {
  constexpr const char* ctx = "reconstruct";
  if (a1 == 0 || b1 == 0 || !(a1 < a2) || !(b1 < b2)) {
    throw std::invalid_argument("reconstruct: need 0 < a1 < a2 and 0 < b1 < b2");
  }
  const u128 p = checked_mul(u128{a2}, u128{b1}, ctx);
  const u128 q = checked_mul(u128{b2}, u128{a1}, ctx);
  if (p <= q) return std::nullopt;
  const u128 D = p - q;

  const u128 num_a = checked_mul(checked_mul(u128{a2}, u128{a1}, ctx), u128{b2 - b1}, ctx);
  const u128 num_b = checked_mul(checked_mul(u128{b2}, u128{b1}, ctx), u128{a2 - a1}, ctx);
  if (num_a % D != 0 || num_b % D != 0) return std::nullopt;

  const u64 A = narrow_n(num_a / D, ctx);
  const u64 B = narrow_n(num_b / D, ctx);
  if (B <= b2) return std::nullopt;
  const u64 N = narrow_n(checked_mul(u128{A}, u128{B}, ctx), ctx);

  CloseTriple t{N, A, B, a1, b1, a2, b2};
  if (check_triple(t)) return std::nullopt;
  return t;
}

std::string format_factorizations(u64 N, std::span<const LatticePoint> points) {
  std::string s = std::to_string(N);
  for (const auto& p : points) {
    s += " = ";
    s += std::to_string(p.x);
    s += "·";
    s += std::to_string(p.y);
  }
  return s;
}

}  // namespace hyperfact
