#pragma once

#include <cstdint>
#include <vector>

#include "boolfn/truth_table.hpp"

namespace boolfn {

/*! \brief A set of subsets of {1..k}, the set-family view of a truth table.

  A member subset A is encoded as a k-bit mask with bit i-1 set iff i is in A,
  which is exactly the zero-based position of the corresponding input
  assignment.  The family as a whole therefore shares the TruthTable bit
  layout: member mask m is present iff table bit m is set, and the family
  cardinality equals the table weight.
*/
class SetFamily {
public:
  //! Empty family over the ground set {1..k}.
  explicit SetFamily(int k = 0);

  static SetFamily from_members(int k, std::span<const std::uint32_t> masks);

  int k() const { return chi_.k(); }

  //! Number of member subsets.
  std::uint64_t size() const { return weight(chi_); }

  bool contains(std::uint32_t member_mask) const;
  void insert(std::uint32_t member_mask);
  void erase(std::uint32_t member_mask);

  //! Member masks in ascending order.
  std::vector<std::uint32_t> members() const;

  //! The characteristic-function view (shared bit encoding).
  const TruthTable& characteristic() const { return chi_; }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
  explicit SetFamily(TruthTable chi) : chi_(std::move(chi)) {}
  friend SetFamily to_set_family(const TruthTable&);

  TruthTable chi_;
};

//! View a truth table as its family of on-set input subsets.
SetFamily to_set_family(const TruthTable& t);

//! Inverse view; round-trips exactly.
TruthTable from_set_family(const SetFamily& b);

} // namespace boolfn
