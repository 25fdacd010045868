#include "boolfn/irreducibility.hpp"

#include <bit>
#include <stdexcept>

namespace boolfn {

namespace {

void check_index(const TruthTable& t, int i)
{
  if (i < 1 || i > t.k())
    throw std::out_of_range("argument index out of range");
}

// Count differing (s, s + 2^(i-1)) pairs on the packed table.
std::uint64_t pair_diff_count(std::span<const std::uint64_t> words, int i)
{
  const int d_log = i - 1;
  std::uint64_t count = 0;
  if (d_log < 6) {
    const int d = 1 << d_log;
    const std::uint64_t lo = detail::low_pair_mask[d_log];
    for (auto w : words)
      count += std::popcount((w ^ (w >> d)) & lo);
  } else {
    const std::size_t wd = std::size_t{1} << (d_log - 6);
    for (std::size_t j = 0; j < words.size(); ++j)
      if ((j & wd) == 0)
        count += std::popcount(words[j] ^ words[j + wd]);
  }
  return count;
}

// Ones in the half-cube S_i = xi.
std::uint64_t half_popcount(std::span<const std::uint64_t> words, int i, int xi)
{
  const int d_log = i - 1;
  std::uint64_t count = 0;
  if (d_log < 6) {
    const std::uint64_t half =
        xi ? ~detail::low_pair_mask[d_log] : detail::low_pair_mask[d_log];
    for (auto w : words)
      count += std::popcount(w & half);
  } else {
    const std::size_t shift = static_cast<std::size_t>(d_log - 6);
    for (std::size_t j = 0; j < words.size(); ++j)
      if (((j >> shift) & 1) == static_cast<std::size_t>(xi))
        count += std::popcount(words[j]);
  }
  return count;
}

} // namespace

std::uint64_t dependency_count(const TruthTable& t, int i)
{
  check_index(t, i);
  return pair_diff_count(t.words(), i);
}

bool is_index_reducible(const TruthTable& t, int i)
{
  check_index(t, i);
  return pair_diff_count(t.words(), i) == 0;
}

IrreducibilityReport irreducible_degree(const TruthTable& t)
{
  IrreducibilityReport report;
  report.k = t.k();
  report.irreducible.resize(t.k());
  report.dependency_counts.resize(t.k());
  for (int i = 1; i <= t.k(); ++i) {
    const auto f = pair_diff_count(t.words(), i);
    report.dependency_counts[i - 1] = f;
    report.irreducible[i - 1] = f > 0;
    report.lambda += f > 0;
  }
  return report;
}

CanalizingReport canalizing_report(const TruthTable& t)
{
  CanalizingReport report;
  const std::uint64_t half_size = t.size() / 2;
  for (int i = 1; i <= t.k(); ++i) {
    for (int xi = 0; xi <= 1; ++xi) {
      const auto ones = half_popcount(t.words(), i, xi);
      if (ones == 0)
        report.witnesses.push_back({i, xi, 0});
      else if (ones == half_size)
        report.witnesses.push_back({i, xi, 1});
    }
  }
  report.is_canalizing = !report.witnesses.empty();
  return report;
}

} // namespace boolfn
