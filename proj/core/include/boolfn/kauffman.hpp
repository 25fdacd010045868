#pragma once

#include <cstdint>
#include <vector>

#include "boolfn/rng.hpp"
#include "boolfn/truth_table.hpp"

namespace boolfn {

//! N random Boolean rules, each reading k fixed nodes of the network.
struct NKNetwork {
  int n = 0;
  int k = 0;
  std::vector<TruthTable> rules;                     // n tables of arity k
  std::vector<std::vector<std::uint32_t>> inputs;    // n sorted k-subsets of [0, n)
};

//! Packed n-bit network state.
class StateVector {
public:
  explicit StateVector(int n);

  int n() const { return n_; }
  bool bit(int i) const;        // 0-based
  void set(int i, bool value);
  void flip(int i);
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

private:
  int n_;
  std::vector<std::uint64_t> words_;
};

//! Number of differing positions; lengths must match.
std::uint64_t hamming_distance(const StateVector& a, const StateVector& b);

/*! \brief Draw a random network: rules sampled under `bias`, each input set
  uniform over the C(n, k) possibilities.  Deterministic per generator state.
*/
NKNetwork build_network(int n, int k, BiasModel bias, SplitMix64& rng);
NKNetwork build_network(int n, int k, BiasModel bias, std::uint64_t seed);

//! One synchronous update: every node reads the old state, so the result is
//! independent of evaluation order.
StateVector step(const NKNetwork& net, const StateVector& state);

//! Uniform random state on n bits.
StateVector random_state(int n, SplitMix64& rng);

struct DivergenceParams {
  int n = 2000;
  int k = 2;
  double p = 0.5;
  int d0 = 16;           // initial Hamming distance; 8 <= d0 <= n/10
  int horizon = 30;      // steps per trajectory
  int runs = 200;        // ensemble size
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/*! \brief Ensemble Hamming-divergence experiment.

  Per run: draw a fresh network and initial state, flip d0 random bits to get
  the twin, iterate both trajectories through the shared network, and record
  d_H(t).  The per-run growth rate is the mean of ln d(t+1)/d(t) over the
  steps with both distances inside the mean-field window [1, n/4]; runs whose
  twin collapses onto the trajectory before any valid step count as negative
  in the sign tallies.  growth_rate aggregates the per-run rates with a 99%
  normal confidence interval.  Runs use substream(seed, run) generators and a
  fixed reduction order, so the result does not depend on the worker count.
*/
struct DivergenceSeries {
  DivergenceParams params;
  std::vector<std::vector<std::uint32_t>> dh; // [run][t], t = 0..horizon
  std::vector<double> mean_dh;                // [t]
  std::vector<double> stderr_dh;              // [t]
  double growth_rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int rated_runs = 0;     // runs contributing a finite rate
  int positive_runs = 0;  // sign census over decided runs
  int negative_runs = 0;
};

DivergenceSeries divergence_experiment(const DivergenceParams& params);

} // namespace boolfn
