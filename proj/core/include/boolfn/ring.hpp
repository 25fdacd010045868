#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolfn/set_family.hpp"

namespace boolfn {

//! A subset {i_1, ..., i_m} of the ground set {1..k}, bit-encoded.
class IndexSet {
public:
  IndexSet(int k, std::uint32_t mask);

  static IndexSet from_indices(int k, std::span<const int> indices);

  int k() const { return k_; }
  std::uint32_t mask() const { return mask_; }
  int count() const;
  bool contains(int i) const;
  std::vector<int> indices() const; // ascending, 1-based

private:
  int k_;
  std::uint32_t mask_;
};

// Ring operations of the double power set: symmetric difference is addition,
// intersection is multiplication.  Both reject mismatched ground sets.
SetFamily sym_diff(const SetFamily& a, const SetFamily& b);
SetFamily intersect(const SetFamily& a, const SetFamily& b);

/*! \brief Replace every member A by A symdiff C.

  Implemented as a bit permutation of the packed family: one masked
  shift-swap per index in C, so the whole map costs O(2^k / 64) words.
*/
SetFamily shift_family(const SetFamily& b, const IndexSet& c);

/*! \brief Relabel a family over {1..k-m} onto the ground set {1..k} minus
  `on`, by order-preserving index renumbering.  Inverse of the compaction
  performed by project().
*/
SetFamily lift(const SetFamily& b, const IndexSet& on);

/*! \brief Embed a family into the subring of functions reducible on `on`.

  Returns the disjoint union of shift_family(B, C) over all C subset of `on`.
  Accepts B either over the full ground set (members must avoid `on`; anything
  else throws) or in the compacted form over k - #on produced by project(),
  which is lifted first.  The result is reducible on every index of `on` and
  has cardinality #B * 2^#on; overlap between the shifted copies is checked
  during construction.
*/
SetFamily embed(const SetFamily& b, const IndexSet& on);

/*! \brief Keep the members avoiding every index of `on`, compacted to the
  ground set {1..k-#on}.

  Defined for arbitrary families; when B is reducible on `on`, embed() undoes
  project() exactly.
*/
SetFamily project(const SetFamily& b, const IndexSet& on);

//! True iff the family is invariant under shifts by every subset of `on`.
bool is_reducible_on(const SetFamily& b, const IndexSet& on);

} // namespace boolfn
