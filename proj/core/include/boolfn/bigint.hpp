#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace boolfn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/*! \brief Binomial coefficient C(n, r) as an exact integer.

  Out-of-range arguments follow the usual combinatorial convention:
  C(n, r) = 0 for r < 0 or r > n, and C(0, 0) = 1.
*/
BigInt binomial(std::int64_t n, std::int64_t r);

//! 2^e as an exact integer.
inline BigInt pow2(std::uint64_t e)
{
  return BigInt{1} << e;
}

} // namespace boolfn
