#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace osdom {

// All ground sets in this toolkit are capped at 64 elements, so element
// sets are plain uint64_t masks.
using Bits = std::uint64_t;

constexpr int kMaxUniverse = 64;

inline constexpr Bits bit(int i) { return Bits{1} << i; }

inline constexpr bool has_bit(Bits b, int i) { return (b >> i) & Bits{1}; }

inline int bit_count(Bits b) { return std::popcount(b); }

inline int lowest_bit(Bits b) { return std::countr_zero(b); }

inline constexpr Bits full_mask(int n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

template <typename F>
inline void for_each_bit(Bits b, F&& f) {
  while (b) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

inline std::vector<int> bits_to_vector(Bits b) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(bit_count(b)));
  for_each_bit(b, [&](int i) { out.push_back(i); });
  return out;
}

inline Bits vector_to_bits(const std::vector<int>& v) {
  Bits b = 0;
  for (int i : v) b |= bit(i);
  return b;
}

}  // namespace osdom
