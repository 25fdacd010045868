#include "boolfn/truth_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace boolfn {

InputVector::InputVector(int k, std::uint32_t mask) : k_(k), mask_(mask)
{
  if (k < 0 || k > TruthTable::k_max)
    throw std::invalid_argument("InputVector: arity out of range");
  if (k < 32 && (mask >> k) != 0)
    throw std::invalid_argument("InputVector: mask has bits beyond arity");
}

InputVector InputVector::from_bits(std::span<const int> bits)
{
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1)
      throw std::invalid_argument("InputVector: entries must be 0 or 1");
    mask |= static_cast<std::uint32_t>(bits[i]) << i;
  }
  return InputVector(static_cast<int>(bits.size()), mask);
}

int InputVector::bit(int i) const
{
  if (i < 1 || i > k_)
    throw std::out_of_range("InputVector: argument index out of range");
  return (mask_ >> (i - 1)) & 1;
}

TruthTable::TruthTable(int k) : k_(k)
{
  if (k < 0 || k > k_max)
    throw std::invalid_argument("TruthTable: arity must be in [0, " +
                                std::to_string(k_max) + "]");
  words_.assign(detail::word_count(size()), 0);
}

TruthTable TruthTable::from_bits(int k, std::span<const int> sigma)
{
  TruthTable t(k);
  if (sigma.size() != t.size())
    throw std::invalid_argument("TruthTable: expected 2^k output bits");
  for (std::uint64_t pos = 0; pos < sigma.size(); ++pos) {
    if (sigma[pos] != 0 && sigma[pos] != 1)
      throw std::invalid_argument("TruthTable: outputs must be 0 or 1");
    detail::set_bit(t.words_, pos, sigma[pos] != 0);
  }
  return t;
}

TruthTable TruthTable::from_words(int k, std::vector<std::uint64_t> words)
{
  TruthTable t(k);
  if (words.size() != t.words_.size())
    throw std::invalid_argument("TruthTable: wrong word count");
  if ((words.back() & ~detail::tail_mask(t.size())) != 0)
    throw std::invalid_argument("TruthTable: nonzero bits beyond 2^k");
  t.words_ = std::move(words);
  return t;
}

bool TruthTable::sigma(std::uint64_t s) const
{
  if (s < 1 || s > size())
    throw std::out_of_range("TruthTable: position out of range");
  return detail::get_bit(words_, s - 1);
}

void TruthTable::set_sigma(std::uint64_t s, bool value)
{
  if (s < 1 || s > size())
    throw std::out_of_range("TruthTable: position out of range");
  detail::set_bit(words_, s - 1, value);
}

bool TruthTable::evaluate(const InputVector& s) const
{
  if (s.k() != k_)
    throw std::invalid_argument("TruthTable: input arity mismatch");
  return detail::get_bit(words_, s.mask());
}

BigInt wolfram_index(const TruthTable& t)
{
  BigInt value = 0;
  const auto words = t.words();
  // words are little-endian 64-bit limbs of the table integer
  boost::multiprecision::import_bits(value, words.begin(), words.end(), 64, false);
  return value + 1;
}

TruthTable from_wolfram(int k, const BigInt& mu)
{
  TruthTable t(k);
  const BigInt bound = BigInt{1} << t.size();
  if (mu < 1 || mu > bound)
    throw std::out_of_range("from_wolfram: index must be in [1, 2^(2^k)]");
  const BigInt value = mu - 1;
  std::vector<std::uint64_t> words;
  if (value != 0)
    boost::multiprecision::export_bits(value, std::back_inserter(words), 64, false);
  words.resize(detail::word_count(t.size()), 0);
  return TruthTable::from_words(k, std::move(words));
}

TruthTable negate(const TruthTable& t)
{
  std::vector<std::uint64_t> words(t.words().begin(), t.words().end());
  for (auto& w : words)
    w = ~w;
  words.back() &= detail::tail_mask(t.size());
  return TruthTable::from_words(t.k(), std::move(words));
}

BiasModel::BiasModel(double p) : p_(p)
{
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("BiasModel: p must be in [0, 1]");
}

double bias_probability(std::uint64_t omega, int k, BiasModel bias)
{
  const std::uint64_t n = std::uint64_t{1} << k;
  if (omega > n)
    throw std::out_of_range("bias_probability: weight exceeds 2^k");
  // powl keeps small-p tables representable far beyond double range
  const long double p = bias.p();
  const long double value = std::pow(p, static_cast<long double>(omega)) *
                            std::pow(1.0L - p, static_cast<long double>(n - omega));
  return static_cast<double>(value);
}

TruthTable sample(int k, BiasModel bias, SplitMix64& rng)
{
  TruthTable t(k);
  const double p = bias.p();
  for (std::uint64_t s = 1; s <= t.size(); ++s)
    if (rng.next_double() < p)
      t.set_sigma(s, true);
  return t;
}

TruthTable sample(int k, BiasModel bias, std::uint64_t seed)
{
  SplitMix64 rng(seed);
  return sample(k, bias, rng);
}

} // namespace boolfn
