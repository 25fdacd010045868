#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "boolfn/counting.hpp"

namespace boolfn {

//! Result of exhaustively classifying all 2^(2^k) functions.
struct CensusResult {
  int k = 0;
  std::vector<std::vector<std::uint64_t>> counts; // (k+1) x (2^k + 1)
  std::uint64_t canalizing_count = 0;
  std::uint64_t functions_scanned = 0;
  std::chrono::duration<double> elapsed{};
};

struct CensusDiffEntry {
  int lambda;
  int omega;
  BigInt expected;
  std::uint64_t found;
};

struct CensusDiff {
  std::vector<CensusDiffEntry> entries;
  bool empty() const { return entries.empty(); }
};

using ProgressFn = std::function<void(std::uint64_t scanned, std::uint64_t total)>;

/*! \brief Classify every k-argument function by (degree, weight, canalizing).

  The index range is split into contiguous chunks, one per worker; each worker
  runs the single-word XOR/shift/popcount kernels with no allocation, and the
  partial tallies are merged in worker order, so the result is identical for
  any worker count.  k is capped at 5 (2^32 scans); workers = 0 means the
  hardware concurrency.  The optional progress callback is polled from the
  calling thread, off the result path.
*/
CensusResult enumerate_census(int k, unsigned workers = 0,
                              const ProgressFn& progress = {});

//! Entry-by-entry comparison against an analytic table of the same k.
CensusDiff compare_census(const CensusResult& census, const CountTable& analytic);

//! Same CSV layout as the analytic table export, plus a trailing
//! `# canalizing_count,<n>` comment line.
void write_census_csv(const CensusResult& census, std::ostream& out);

} // namespace boolfn
