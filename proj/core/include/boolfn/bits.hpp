#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace boolfn::detail {

inline constexpr std::uint64_t all_ones = ~std::uint64_t{0};

/* Positions whose bit d is zero, i.e. the lower member of every pair at
   in-word distance 2^d.  Index by d = 0..5. */
inline constexpr std::uint64_t low_pair_mask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

constexpr std::size_t word_count(std::uint64_t nbits)
{
  return static_cast<std::size_t>((nbits + 63) / 64);
}

// Mask covering the valid bits of the last word of an nbits-long vector.
constexpr std::uint64_t tail_mask(std::uint64_t nbits)
{
  const auto rem = nbits % 64;
  return rem == 0 ? all_ones : (std::uint64_t{1} << rem) - 1;
}

inline bool get_bit(std::span<const std::uint64_t> words, std::uint64_t pos)
{
  return (words[pos >> 6] >> (pos & 63)) & 1u;
}

inline void set_bit(std::span<std::uint64_t> words, std::uint64_t pos, bool value)
{
  const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
  if (value)
    words[pos >> 6] |= mask;
  else
    words[pos >> 6] &= ~mask;
}

inline std::uint64_t popcount(std::span<const std::uint64_t> words)
{
  std::uint64_t n = 0;
  for (auto w : words)
    n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

} // namespace boolfn::detail
