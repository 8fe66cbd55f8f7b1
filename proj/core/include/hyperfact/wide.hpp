#pragma once

// 128-bit helpers. Every intermediate that can exceed 64 bits goes through
// the checked_* functions below, which throw OverflowError instead of wrapping.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperfact {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Largest N accepted by the public API (63 bits).
inline constexpr u64 kMaxN = (u64{1} << 63) - 1;

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what,
                         std::optional<u64> last_valid = std::nullopt)
      : std::overflow_error(what), last_valid_(last_valid) {}

  /// For generators: the last parameter value that still fit.
  std::optional<u64> last_valid() const noexcept { return last_valid_; }

 private:
  std::optional<u64> last_valid_;
};

inline u128 checked_mul(u128 a, u128 b, const char* ctx) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": 128-bit product overflow");
  return r;
}

inline u128 checked_add(u128 a, u128 b, const char* ctx) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": 128-bit sum overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b, const char* ctx) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": 128-bit product overflow");
  return r;
}

/// Narrow to u64, throwing if the value does not fit in kMaxN.
inline u64 narrow_n(u128 v, const char* ctx) {
  if (v > kMaxN) throw OverflowError(std::string(ctx) + ": value exceeds 63 bits");
  return static_cast<u64>(v);
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int i = 40;
  while (v != 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return std::string(buf + i, buf + 40);
}

inline std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
  return to_string(static_cast<u128>(v));
}

}  // namespace hyperfact
