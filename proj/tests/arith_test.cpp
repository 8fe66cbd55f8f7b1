#include <random>

#include <gtest/gtest.h>

#include "hyperfact/arith.hpp"
#include "oracle/brute_force.hpp"

using namespace hyperfact;

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(u64{0}), 0u);
  EXPECT_EQ(isqrt(u64{16}), 4u);
  // 1987^2 = 3948169 <= 3950100 < 1988^2 = 3952144
  EXPECT_EQ(isqrt(u64{3950100}), 1987u);
  EXPECT_EQ(isqrt(std::numeric_limits<u64>::max()), 4294967295u);
}

TEST(Isqrt, WideEdges) {
  const u128 max = ~u128{0};
  EXPECT_EQ(isqrt(max), u128{std::numeric_limits<u64>::max()});
  const u128 sq = u128{std::numeric_limits<u64>::max()} * std::numeric_limits<u64>::max();
  EXPECT_EQ(isqrt(sq), u128{std::numeric_limits<u64>::max()});
  EXPECT_EQ(isqrt(sq - 1), u128{std::numeric_limits<u64>::max()} - 1);
}

TEST(Iroot4, Examples) {
  EXPECT_EQ(iroot4(u64{1} << 20), 32u);
  // 99^4 = 96059601 <= 99990000 < 100^4
  EXPECT_EQ(iroot4(u64{99990000}), 99u);
  EXPECT_EQ(iroot4(u64{15}), 1u);
  EXPECT_EQ(iroot4(u64{16}), 2u);
  EXPECT_EQ(iroot4(u64{0}), 0u);
}

TEST(Iroot4, FloorPropertySampled) {
  std::mt19937_64 gen(20240601);
  std::uniform_int_distribution<u64> dist(0, 1'000'000'000'000ULL);
  for (int i = 0; i < 200000; ++i) {
    const u64 n = i < 1000 ? static_cast<u64>(i) : dist(gen);
    const u64 r = isqrt(n);
    ASSERT_LE(u128{r} * r, n);
    ASSERT_GT(u128{r + 1} * (r + 1), n);
    const u64 q = iroot4(n);
    ASSERT_LE(u128{q} * q * q * q, n);
    ASSERT_GT(u128{q + 1} * (q + 1) * (q + 1) * (q + 1), n);
  }
}

TEST(Iroot4, AroundPerfectPowers) {
  for (u64 r = 1; r < 3000; ++r) {
    const u64 p = r * r * r * r;
    EXPECT_EQ(iroot4(p), r);
    EXPECT_EQ(iroot4(p - 1), r - 1);
    EXPECT_EQ(isqrt(r * r), r);
    EXPECT_EQ(isqrt(r * r - 1), r - 1);
  }
}

TEST(CmpMulSqrt, Examples) {
  EXPECT_EQ(cmp_mul_sqrt(3, 4, 2), 1);   // 18 > 16
  EXPECT_EQ(cmp_mul_sqrt(1, 1, 1), 0);
  EXPECT_EQ(cmp_mul_sqrt(2, 3, 2), -1);  // 8 < 9
  EXPECT_EQ(cmp_mul_sqrt(0, 0, 5), 0);
  EXPECT_EQ(cmp_mul_sqrt(0, 1, 5), -1);
  EXPECT_EQ(cmp_mul_sqrt(7, 0, 0), 0);
  EXPECT_EQ(cmp_mul_sqrt(5, 15, 9), 0);
}

TEST(CmpMulSqrt, AgreesWithHighPrecisionWhereDecided) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<u64> an(1, 1u << 30);
  std::uniform_int_distribution<u64> nn(0, 1'000'000'000'000ULL);
  const oracle::Real margin("1e-40");
  int decided = 0;
  for (int i = 0; i < 20000; ++i) {
    const u64 a = an(gen);
    const u64 n = nn(gen);
    // Put b near a*sqrt(n) so the comparison is not trivial.
    const u64 center = static_cast<u64>(static_cast<long double>(a) * std::sqrt(static_cast<long double>(n)));
    const u64 b = center + (gen() % 5) - 2;
    const int ref = oracle::float_sign(a, b, n, margin);
    if (ref == 0) continue;
    ++decided;
    ASSERT_EQ(cmp_mul_sqrt(a, b, n), ref) << a << " " << b << " " << n;
  }
  EXPECT_GT(decided, 19000);
}

TEST(CmpMulSqrt, OverflowIsExplicit) {
  const u128 big = u128{1} << 100;
  EXPECT_THROW(cmp_mul_sqrt(big, 1, u64{1} << 60), OverflowError);
}

TEST(Pell, FirstSolutions) {
  const auto s = pell_solutions(3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (PellSolution{1, 3, 2}));
  EXPECT_EQ(s[1], (PellSolution{2, 17, 12}));
  EXPECT_EQ(s[2], (PellSolution{3, 99, 70}));
}

TEST(Pell, InvariantsUntilOverflow) {
  // x_n < 2^64 holds through n = 25.
  const auto s = pell_solutions(25);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const u128 x = s[i].x, y = s[i].y;
    EXPECT_EQ(x * x - 2 * y * y, u128{1});
    EXPECT_EQ(s[i].x % 2, 1u);
    EXPECT_EQ(s[i].index, i + 1);
    if (i > 0) {
      EXPECT_GT(s[i].x, s[i - 1].x);
      EXPECT_GT(s[i].y, s[i - 1].y);
    }
  }
}

TEST(Pell, OverflowReportsLastIndex) {
  try {
    pell_solutions(40);
    FAIL() << "expected overflow";
  } catch (const OverflowError& e) {
    ASSERT_TRUE(e.last_valid().has_value());
    EXPECT_EQ(*e.last_valid(), 25u);
  }
  EXPECT_THROW(pell_solutions(0), std::invalid_argument);
}
