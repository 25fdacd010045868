#include "boolfn/set_family.hpp"

#include <stdexcept>

namespace boolfn {

SetFamily::SetFamily(int k) : chi_(k) {}

SetFamily SetFamily::from_members(int k, std::span<const std::uint32_t> masks)
{
  SetFamily b(k);
  for (auto m : masks)
    b.insert(m);
  return b;
}

bool SetFamily::contains(std::uint32_t member_mask) const
{
  if (member_mask >= chi_.size())
    throw std::out_of_range("SetFamily: member outside the ground set");
  return chi_.bit_at(member_mask);
}

void SetFamily::insert(std::uint32_t member_mask)
{
  if (member_mask >= chi_.size())
    throw std::out_of_range("SetFamily: member outside the ground set");
  chi_.set_sigma(member_mask + 1, true);
}

void SetFamily::erase(std::uint32_t member_mask)
{
  if (member_mask >= chi_.size())
    throw std::out_of_range("SetFamily: member outside the ground set");
  chi_.set_sigma(member_mask + 1, false);
}

std::vector<std::uint32_t> SetFamily::members() const
{
  std::vector<std::uint32_t> out;
  out.reserve(size());
  const auto words = chi_.words();
  for (std::size_t j = 0; j < words.size(); ++j) {
    std::uint64_t w = words[j];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<std::uint32_t>(j * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

SetFamily to_set_family(const TruthTable& t)
{
  return SetFamily(t);
}

TruthTable from_set_family(const SetFamily& b)
{
  return b.characteristic();
}

} // namespace boolfn
