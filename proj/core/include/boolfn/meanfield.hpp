#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolfn/truth_table.hpp"

namespace boolfn {

enum class Regime { ordered, critical, chaotic };

//! One point of the order/chaos phase diagram.
struct PhasePoint {
  int k;
  double p;
  double delta;
  Regime regime;
};

//! Aggregate statistics of the random-network ensemble at (n, k).
struct NetworkStats {
  std::uint64_t n;
  int k;
  double theta;       // mean number of networks per functional graph
  double phi;         // the defining ratio; theta = (1 - phi)^(-n)
  double p_invariant; // probability a single rewiring leaves the map unchanged
};

/*! \brief Mean-field Hamming-divergence multiplier.

  2Kp(1-p) * {1 - 2p(1-p) [1 - 2p(1-p)]^(2^(K-1)-2)}; a small perturbation
  grows by this factor per step, so delta = 1 marks the phase frontier.
  Requires k >= 1.
*/
double delta(int k, BiasModel bias);

//! The uncorrected multiplier 2Kp(1-p), for comparison.
double delta_ds(int k, BiasModel bias);

//! Classify (k, p); |delta - 1| <= tol counts as critical.
PhasePoint phase_point(int k, BiasModel bias, double tol = 1e-9);

/*! \brief All bias values p in (0, 1/2] with delta(k, p) = 1.

  Located by a sign-change scan at step 1e-3 followed by bisection; every
  returned root satisfies |delta - 1| <= 1e-10.  The mirrored roots at 1 - p
  are implied by symmetry and not listed.  Empty when the curve never reaches
  1 (k <= 2).
*/
std::vector<double> critical_bias(int k);

//! Leading-order connectivity log2 log2 (2n / ln 2) at which the
//! network-to-graph map turns injective; n >= 2.
double critical_connectivity(std::uint64_t n);

/*! \brief The ratio phi(n, k) driving the mean multiplicity.

  sum_lambda degree_count(k,lambda) [C(n-lambda, k-lambda) - 1] over
  2^(2^k) C(n,k), evaluated in exact integer arithmetic before the final
  division; requires 1 <= k <= n.
*/
double multiplicity_ratio(std::uint64_t n, int k);

//! theta(n, k) = (1 - phi)^(-n); +infinity when it exceeds double range.
double mean_multiplicity(std::uint64_t n, int k);

/*! \brief Probability that replacing one connection function leaves the
  network map invariant.

  sum_lambda C(n-lambda, k-lambda)/C(n,k) * degree_probability(k, lambda).
*/
double invariance_probability(std::uint64_t n, int k, BiasModel bias);

NetworkStats network_stats(std::uint64_t n, int k, BiasModel bias);

/*! \brief Divergence multiplier with a caller-supplied per-weight
  output-change probability.

  sum_omega Pi(omega) change_prob[omega] sum_lambda lambda * counts[lambda][omega].
  change_prob must have 2^k + 1 entries.  delta() is the closed form of this
  sum for the change probability of the random-rewiring model; the hook exists
  for experimenting with alternatives.
*/
double delta_weighted(int k, BiasModel bias, std::span<const double> change_prob);

} // namespace boolfn
