#pragma once

#include <cstdint>

namespace boolfn {

/*! \brief Seedable counter-based random generator (splitmix64).

  The generator state advances by the fixed increment 0x9e3779b97f4a7c15 and
  each output is the finalizer

      z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
      z ^= z >> 27; z *= 0x94d049bb133111eb;
      z ^= z >> 31;

  applied to the new state.  The sequence therefore depends only on the seed
  and the draw counter, which makes every sampling routine in this library
  reproducible across platforms and thread schedules.
*/
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  //! Uniform double in [0, 1), 53 random bits.
  double next_double()
  {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  //! Uniform integer in [0, bound) by 128-bit multiply-shift; bound > 0.
  std::uint64_t next_below(std::uint64_t bound)
  {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /*! \brief Independent stream derived from (seed, stream).

    The initial state is finalize(seed) xor finalize(~stream), so distinct
    stream indices give decorrelated sequences under one master seed.
  */
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream)
  {
    return SplitMix64(finalize(seed) ^ finalize(~stream));
  }

private:
  static std::uint64_t finalize(std::uint64_t z)
  {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

} // namespace boolfn
