#include "boolfn/ring.hpp"

#include <bit>
#include <stdexcept>

namespace boolfn {

namespace {

std::vector<std::uint64_t> copy_words(const SetFamily& b)
{
  const auto w = b.characteristic().words();
  return {w.begin(), w.end()};
}

SetFamily family_from_words(int k, std::vector<std::uint64_t> words)
{
  return to_set_family(TruthTable::from_words(k, std::move(words)));
}

void check_same_ground(const SetFamily& a, const SetFamily& b)
{
  if (a.k() != b.k())
    throw std::invalid_argument("set families have different ground sets");
}

// In-place member permutation A -> A symdiff {i}.
void shift_by_index(std::vector<std::uint64_t>& words, int i)
{
  const int d_log = i - 1;
  if (d_log < 6) {
    const int d = 1 << d_log;
    const std::uint64_t lo = detail::low_pair_mask[d_log];
    for (auto& w : words)
      w = ((w & lo) << d) | ((w >> d) & lo);
  } else {
    const std::size_t wd = std::size_t{1} << (d_log - 6);
    for (std::size_t j = 0; j < words.size(); ++j)
      if ((j & wd) == 0)
        std::swap(words[j], words[j + wd]);
  }
}

} // namespace

IndexSet::IndexSet(int k, std::uint32_t mask) : k_(k), mask_(mask)
{
  if (k < 0 || k > TruthTable::k_max)
    throw std::invalid_argument("IndexSet: ground-set size out of range");
  if (k < 32 && (mask >> k) != 0)
    throw std::invalid_argument("IndexSet: index beyond the ground set");
}

IndexSet IndexSet::from_indices(int k, std::span<const int> indices)
{
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > k)
      throw std::invalid_argument("IndexSet: index beyond the ground set");
    mask |= std::uint32_t{1} << (i - 1);
  }
  return IndexSet(k, mask);
}

int IndexSet::count() const
{
  return std::popcount(mask_);
}

bool IndexSet::contains(int i) const
{
  return i >= 1 && i <= k_ && ((mask_ >> (i - 1)) & 1u);
}

std::vector<int> IndexSet::indices() const
{
  std::vector<int> out;
  out.reserve(count());
  for (int i = 1; i <= k_; ++i)
    if ((mask_ >> (i - 1)) & 1u)
      out.push_back(i);
  return out;
}

SetFamily sym_diff(const SetFamily& a, const SetFamily& b)
{
  check_same_ground(a, b);
  auto words = copy_words(a);
  const auto wb = b.characteristic().words();
  for (std::size_t j = 0; j < words.size(); ++j)
    words[j] ^= wb[j];
  return family_from_words(a.k(), std::move(words));
}

SetFamily intersect(const SetFamily& a, const SetFamily& b)
{
  check_same_ground(a, b);
  auto words = copy_words(a);
  const auto wb = b.characteristic().words();
  for (std::size_t j = 0; j < words.size(); ++j)
    words[j] &= wb[j];
  return family_from_words(a.k(), std::move(words));
}

SetFamily shift_family(const SetFamily& b, const IndexSet& c)
{
  if (c.k() != b.k())
    throw std::invalid_argument("shift_family: ground-set mismatch");
  auto words = copy_words(b);
  for (int i : c.indices())
    shift_by_index(words, i);
  return family_from_words(b.k(), std::move(words));
}

SetFamily lift(const SetFamily& b, const IndexSet& on)
{
  const int k = on.k();
  const int m = on.count();
  if (b.k() != k - m)
    throw std::invalid_argument("lift: family must be over the complement ground set");
  // target positions of the complement indices, ascending
  std::vector<int> slots;
  slots.reserve(k - m);
  for (int i = 1; i <= k; ++i)
    if (!on.contains(i))
      slots.push_back(i - 1);
  SetFamily out(k);
  for (auto member : b.members()) {
    std::uint32_t lifted = 0;
    for (int bpos = 0; bpos < k - m; ++bpos)
      if ((member >> bpos) & 1u)
        lifted |= std::uint32_t{1} << slots[bpos];
    out.insert(lifted);
  }
  return out;
}

SetFamily embed(const SetFamily& b, const IndexSet& on)
{
  const int k = on.k();
  SetFamily ambient(0);
  if (b.k() == k - on.count()) {
    ambient = lift(b, on);
  } else if (b.k() == k) {
    for (auto member : b.members())
      if ((member & on.mask()) != 0)
        throw std::invalid_argument("embed: member meets the reducible index set");
    ambient = b;
  } else {
    throw std::invalid_argument("embed: family ground set matches neither k nor k-#on");
  }

  auto words = copy_words(ambient);
  for (int i : on.indices()) {
    auto shifted = words;
    shift_by_index(shifted, i);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if ((words[j] & shifted[j]) != 0)
        throw std::logic_error("embed: shifted copies are not disjoint");
      words[j] |= shifted[j];
    }
  }
  return family_from_words(k, std::move(words));
}

SetFamily project(const SetFamily& b, const IndexSet& on)
{
  if (on.k() != b.k())
    throw std::invalid_argument("project: ground-set mismatch");
  const int k = b.k();
  const std::uint32_t drop = on.mask();
  SetFamily out(k - on.count());
  for (auto member : b.members()) {
    if ((member & drop) != 0)
      continue;
    std::uint32_t compact = 0;
    int bpos = 0;
    for (int i = 0; i < k; ++i) {
      if ((drop >> i) & 1u)
        continue;
      compact |= ((member >> i) & 1u) << bpos;
      ++bpos;
    }
    out.insert(compact);
  }
  return out;
}

bool is_reducible_on(const SetFamily& b, const IndexSet& on)
{
  if (on.k() != b.k())
    throw std::invalid_argument("is_reducible_on: ground-set mismatch");
  // invariance under each generator implies invariance under every subset
  for (int i : on.indices()) {
    auto words = copy_words(b);
    shift_by_index(words, i);
    const auto orig = b.characteristic().words();
    for (std::size_t j = 0; j < words.size(); ++j)
      if (words[j] != orig[j])
        return false;
  }
  return true;
}

} // namespace boolfn
