#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolfn/bigint.hpp"
#include "boolfn/bits.hpp"
#include "boolfn/rng.hpp"

namespace boolfn {

/*! \brief One assignment of the k binary arguments (S_1, ..., S_k).

  Argument i is stored at bit i-1 of the mask, so the 1-based position of the
  assignment in the canonical input order is simply 1 + mask.
*/
class InputVector {
public:
  InputVector(int k, std::uint32_t mask);

  static InputVector from_bits(std::span<const int> bits);

  int k() const { return k_; }
  std::uint32_t mask() const { return mask_; }

  //! S_i, 1-based.
  int bit(int i) const;

private:
  int k_;
  std::uint32_t mask_;
};

//! 1-based position s = 1 + sum S_i 2^(i-1); a bijection onto [1, 2^k].
inline std::uint64_t input_index(const InputVector& s)
{
  return std::uint64_t{1} + s.mask();
}

/*! \brief A k-argument Boolean function stored as its 2^k-bit truth table.

  Output sigma_s for the s-th input assignment (s = 1..2^k in the canonical
  order) lives at bit position s-1, least-significant bit first, words in
  ascending order.  With that layout the classification kernels reduce to
  XOR/shift/popcount passes over whole words.
*/
class TruthTable {
public:
  static constexpr int k_max = 20;

  //! All-zero table (the contradiction) on k arguments; 0 <= k <= k_max.
  explicit TruthTable(int k = 0);

  //! Build from the output list sigma_1..sigma_{2^k}.
  static TruthTable from_bits(int k, std::span<const int> sigma);

  //! Build from packed words (bit s-1 = sigma_s); tail bits must be zero.
  static TruthTable from_words(int k, std::vector<std::uint64_t> words);

  int k() const { return k_; }

  //! Number of table entries, 2^k.
  std::uint64_t size() const { return std::uint64_t{1} << k_; }

  //! sigma_s, 1-based; s in [1, 2^k].
  bool sigma(std::uint64_t s) const;
  void set_sigma(std::uint64_t s, bool value);

  //! Zero-based bit access without range checks, for kernels.
  bool bit_at(std::uint64_t pos) const
  {
    return detail::get_bit(words_, pos);
  }

  std::span<const std::uint64_t> words() const { return words_; }

  bool evaluate(const InputVector& s) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  int k_;
  std::vector<std::uint64_t> words_;
};

/*! \brief 1-based total order over all k-argument functions.

  mu = 1 + sum_s 2^(s-1) sigma_s, i.e. one plus the table read as a single
  big-endian-free integer; ranges over [1, 2^(2^k)].
*/
BigInt wolfram_index(const TruthTable& t);

//! Inverse of wolfram_index; throws std::out_of_range unless 1 <= mu <= 2^(2^k).
TruthTable from_wolfram(int k, const BigInt& mu);

//! Pointwise complement; an involution.
TruthTable negate(const TruthTable& t);

//! Number of ones in the table.
inline std::uint64_t weight(const TruthTable& t)
{
  return detail::popcount(t.words());
}

/*! \brief Bernoulli bias p for independent truth-table entries.

  Under bias p each sigma_s is 1 with probability p, so a table of weight
  omega is drawn with probability p^omega (1-p)^(2^k - omega).
*/
class BiasModel {
public:
  explicit BiasModel(double p);
  double p() const { return p_; }

private:
  double p_;
};

//! Extraction probability of any fixed table with the given weight.
double bias_probability(std::uint64_t omega, int k, BiasModel bias);

/*! \brief Draw a random table; each sigma_s independently 1 with probability p.

  Entries are drawn in ascending s with one generator call each, so the result
  is a pure function of (k, p, seed).
*/
TruthTable sample(int k, BiasModel bias, std::uint64_t seed);

//! Same draw protocol, consuming an existing generator.
TruthTable sample(int k, BiasModel bias, SplitMix64& rng);

} // namespace boolfn
