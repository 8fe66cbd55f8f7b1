#include "hyperfact/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperfact/arith.hpp"

namespace hyperfact {

namespace {

// Calls f(index) for every multiple m of d in [max(lo, d*d), hi].
template <typename F>
void for_each_multiple(u64 d, u64 lo, u64 hi, F&& f) {
  const u64 first = std::max(d * d, (lo + d - 1) / d * d);
  for (u64 m = first; m <= hi; m += d) f(m - lo);
}

}  // namespace

SegmentDivisors::SegmentDivisors(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
  if (lo == 0 || lo > hi || hi > kMaxN) {
    throw std::invalid_argument("SegmentDivisors: need 1 <= lo <= hi < 2^63");
  }
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  const u64 root = isqrt(hi);

  // Pass 1: count, pass 2: fill. Rows come out ascending because d grows.
  offsets_.assign(len + 1, 0);
  for (u64 d = 1; d <= root; ++d) {
    for_each_multiple(d, lo, hi, [&](u64 i) { ++offsets_[i + 1]; });
  }
  for (std::size_t i = 0; i < len; ++i) offsets_[i + 1] += offsets_[i];

  small_.resize(offsets_[len]);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (u64 d = 1; d <= root; ++d) {
    const auto dd = static_cast<std::uint32_t>(d);
    for_each_multiple(d, lo, hi, [&](u64 i) { small_[cursor[i]++] = dd; });
  }
}

void SegmentDivisors::divisors(u64 n, std::vector<u64>& out) const {
  const auto small = small_divisors(n);
  out.clear();
  out.reserve(small.size() * 2);
  for (auto d : small) out.push_back(d);
  for (auto it = small.rbegin(); it != small.rend(); ++it) {
    const u64 co = n / *it;
    if (co != *it) out.push_back(co);
  }
}

}  // namespace hyperfact
