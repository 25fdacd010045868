#include "boolfn/census.hpp"

#include <atomic>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace boolfn {

namespace {

constexpr int max_enum_k = 5; // 2^(2^5) = 2^32 scans

struct Tally {
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t canalizing = 0;
};

/* All 2^(2^k) tables fit a single word here, so the whole classification is
   k XOR/shift/popcount passes plus 2k mask compares, no memory traffic. */
void scan_range(int k, std::uint64_t lo, std::uint64_t hi, Tally& tally,
                std::atomic<std::uint64_t>* scanned)
{
  const int nbits = 1 << k;
  std::uint64_t low_mask[max_enum_k];
  std::uint64_t high_mask[max_enum_k];
  const std::uint64_t table_mask =
      nbits >= 64 ? detail::all_ones : (std::uint64_t{1} << nbits) - 1;
  for (int i = 0; i < k; ++i) {
    low_mask[i] = detail::low_pair_mask[i] & table_mask;
    high_mask[i] = ~detail::low_pair_mask[i] & table_mask;
  }

  constexpr std::uint64_t report_chunk = std::uint64_t{1} << 22;
  std::uint64_t since_report = 0;

  for (std::uint64_t v = lo; v < hi; ++v) {
    const int omega = std::popcount(v);
    int lambda = 0;
    bool canalizing = false;
    for (int i = 0; i < k; ++i) {
      const int d = 1 << i;
      lambda += ((v ^ (v >> d)) & low_mask[i]) != 0;
      const std::uint64_t lo_half = v & low_mask[i];
      const std::uint64_t hi_half = v & high_mask[i];
      canalizing |= lo_half == 0 || lo_half == low_mask[i] ||
                    hi_half == 0 || hi_half == high_mask[i];
    }
    ++tally.counts[static_cast<std::size_t>(lambda)][static_cast<std::size_t>(omega)];
    tally.canalizing += k > 0 && canalizing;

    if (scanned && ++since_report == report_chunk) {
      scanned->fetch_add(report_chunk, std::memory_order_relaxed);
      since_report = 0;
    }
  }
  if (scanned && since_report)
    scanned->fetch_add(since_report, std::memory_order_relaxed);
}

} // namespace

CensusResult enumerate_census(int k, unsigned workers, const ProgressFn& progress)
{
  if (k < 0 || k > max_enum_k)
    throw std::invalid_argument(
        "enumerate_census: supported maximum is k = " + std::to_string(max_enum_k) +
        " (2^(2^5) = 4294967296 scans)");

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << k);
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total / 1024, 1)));

  const std::size_t nrows = static_cast<std::size_t>(k) + 1;
  const std::size_t ncols = (std::size_t{1} << k) + 1;
  std::vector<Tally> partial(workers);
  for (auto& t : partial)
    t.counts.assign(nrows, std::vector<std::uint64_t>(ncols, 0));

  std::atomic<std::uint64_t> scanned{0};
  std::atomic<std::uint64_t>* counter = progress ? &scanned : nullptr;

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t hi =
          total / workers * (w + 1) + std::min<std::uint64_t>(w + 1, total % workers);
      pool.emplace_back(
          [&, lo, hi, w] { scan_range(k, lo, hi, partial[w], counter); });
    }
    if (progress) {
      // poll off the result path until the workers are done
      while (scanned.load(std::memory_order_relaxed) < total) {
        progress(scanned.load(std::memory_order_relaxed), total);
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
      }
    }
  }
  if (progress)
    progress(total, total);

  CensusResult result;
  result.k = k;
  result.counts.assign(nrows, std::vector<std::uint64_t>(ncols, 0));
  // merge in worker order: element-wise addition, order-independent
  for (const auto& t : partial) {
    for (std::size_t l = 0; l < nrows; ++l)
      for (std::size_t w = 0; w < ncols; ++w)
        result.counts[l][w] += t.counts[l][w];
    result.canalizing_count += t.canalizing;
  }
  result.functions_scanned = total;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

CensusDiff compare_census(const CensusResult& census, const CountTable& analytic)
{
  if (census.k != analytic.k)
    throw std::invalid_argument("compare_census: arity mismatch");
  CensusDiff diff;
  for (std::size_t lambda = 0; lambda < analytic.counts.size(); ++lambda) {
    for (std::size_t omega = 0; omega < analytic.counts[lambda].size(); ++omega) {
      const BigInt& expected = analytic.counts[lambda][omega];
      const std::uint64_t found = census.counts[lambda][omega];
      if (expected != found)
        diff.entries.push_back({static_cast<int>(lambda), static_cast<int>(omega),
                                expected, found});
    }
  }
  return diff;
}

void write_census_csv(const CensusResult& census, std::ostream& out)
{
  out << "lambda";
  const std::size_t ncols = census.counts.empty() ? 0 : census.counts.front().size();
  for (std::size_t omega = 0; omega < ncols; ++omega)
    out << ',' << omega;
  out << '\n';
  for (std::size_t lambda = 0; lambda < census.counts.size(); ++lambda) {
    out << lambda;
    for (auto value : census.counts[lambda])
      out << ',' << value;
    out << '\n';
  }
  out << "# canalizing_count," << census.canalizing_count << '\n';
}

} // namespace boolfn
