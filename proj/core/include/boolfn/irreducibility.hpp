#pragma once

#include <cstdint>
#include <vector>

#include "boolfn/truth_table.hpp"

namespace boolfn {

//! Per-argument dependency analysis of one function.
struct IrreducibilityReport {
  int k = 0;
  //! irreducible[i-1] is true iff the output depends on argument i.
  std::vector<bool> irreducible;
  //! Number of arguments the function genuinely depends on.
  int lambda = 0;
  //! dependency_counts[i-1] = number of input pairs across argument i with
  //! differing outputs; zero exactly when the argument is ignored.
  std::vector<std::uint64_t> dependency_counts;
};

struct CanalizingWitness {
  int index;        // argument i
  int input_value;  // fixing S_i to this value...
  int output_value; // ...forces this output for every completion
};

struct CanalizingReport {
  bool is_canalizing = false;
  std::vector<CanalizingWitness> witnesses; // all witnesses, not just the first
};

/*! \brief Count input pairs across argument i whose outputs differ.

  Pairs are (s, s + 2^(i-1)) over all assignments with S_i = 0; the count is
  in [0, 2^(k-1)] and vanishes exactly when the function is reducible on i.
  Computed as popcount(bits XOR bits>>2^(i-1)) under the lower-pair mask.
*/
std::uint64_t dependency_count(const TruthTable& t, int i);

//! True iff the output never depends on argument i (1-based); throws on bad i.
bool is_index_reducible(const TruthTable& t, int i);

//! Full per-argument report; lambda equals the number of set flags.
IrreducibilityReport irreducible_degree(const TruthTable& t);

/*! \brief All (i, xi, tau) triples such that fixing S_i = xi forces output tau.

  A function is canalizing iff at least one witness exists.  Constant
  functions yield witnesses for both values of every argument.
*/
CanalizingReport canalizing_report(const TruthTable& t);

} // namespace boolfn
