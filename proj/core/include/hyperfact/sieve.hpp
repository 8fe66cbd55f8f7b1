#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperfact/wide.hpp"

namespace hyperfact {

/// Divisors of every integer in [lo, hi], built by marking multiples of each
/// d <= sqrt(hi) inside the segment. Only the divisors d <= sqrt(n) are
/// stored (compressed-row layout); the cofactors n/d give the rest.
class SegmentDivisors {
 public:
  SegmentDivisors(u64 lo, u64 hi);

  u64 lo() const noexcept { return lo_; }
  u64 hi() const noexcept { return hi_; }

  /// Divisors d of n with d*d <= n, ascending.
  std::span<const std::uint32_t> small_divisors(u64 n) const noexcept {
    const std::size_t i = n - lo_;
    return {small_.data() + offsets_[i], small_.data() + offsets_[i + 1]};
  }

  /// All divisors of n, ascending, written into `out` (cleared first).
  void divisors(u64 n, std::vector<u64>& out) const;

 private:
  u64 lo_;
  u64 hi_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> small_;
};

}  // namespace hyperfact
