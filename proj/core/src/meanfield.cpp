#include "boolfn/meanfield.hpp"

#include <cmath>
#include <stdexcept>

#include "boolfn/counting.hpp"

namespace boolfn {

double delta(int k, BiasModel bias)
{
  if (k < 1)
    throw std::invalid_argument("delta: connectivity must be at least 1");
  const double x = 2.0 * bias.p() * (1.0 - bias.p());
  const double exponent = std::ldexp(1.0, k - 1) - 2.0; // 2^(k-1) - 2
  return k * x * (1.0 - x * std::pow(1.0 - x, exponent));
}

double delta_ds(int k, BiasModel bias)
{
  if (k < 1)
    throw std::invalid_argument("delta_ds: connectivity must be at least 1");
  return 2.0 * k * bias.p() * (1.0 - bias.p());
}

PhasePoint phase_point(int k, BiasModel bias, double tol)
{
  const double d = delta(k, bias);
  Regime regime = Regime::critical;
  if (std::abs(d - 1.0) > tol)
    regime = d < 1.0 ? Regime::ordered : Regime::chaotic;
  return {k, bias.p(), d, regime};
}

std::vector<double> critical_bias(int k)
{
  if (k < 1)
    throw std::invalid_argument("critical_bias: connectivity must be at least 1");
  const auto f = [k](double p) { return delta(k, BiasModel(p)) - 1.0; };

  std::vector<double> roots;
  const double step = 1e-3;
  double a = step / 2; // stay inside (0, 1/2]
  double fa = f(a);
  while (a < 0.5) {
    const double b = std::min(a + step, 0.5);
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) != (fmid < 0.0))
          hi = mid;
        else
          lo = mid, flo = fmid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0)
    roots.push_back(0.5);
  return roots;
}

double critical_connectivity(std::uint64_t n)
{
  if (n < 2)
    throw std::invalid_argument("critical_connectivity: n must be at least 2");
  return std::log2(std::log2(2.0 * static_cast<double>(n) / std::log(2.0)));
}

namespace {

BigRational multiplicity_ratio_exact(std::uint64_t n, int k)
{
  if (k < 1 || static_cast<std::uint64_t>(k) > n)
    throw std::invalid_argument("multiplicity ratio requires 1 <= k <= n");
  const auto sn = static_cast<std::int64_t>(n);
  BigInt num = 0;
  for (int lambda = 0; lambda <= k; ++lambda)
    num += degree_count(k, lambda) * (binomial(sn - lambda, k - lambda) - 1);
  const BigInt den = pow2(std::uint64_t{1} << k) * binomial(sn, k);
  return BigRational(num, den);
}

} // namespace

double multiplicity_ratio(std::uint64_t n, int k)
{
  return multiplicity_ratio_exact(n, k).convert_to<double>();
}

double mean_multiplicity(std::uint64_t n, int k)
{
  const double phi = multiplicity_ratio(n, k);
  if (phi >= 1.0)
    return std::numeric_limits<double>::infinity();
  // (1 - phi)^(-n), computed in log space to survive large n
  return std::exp(-static_cast<double>(n) * std::log1p(-phi));
}

double invariance_probability(std::uint64_t n, int k, BiasModel bias)
{
  if (k < 1 || static_cast<std::uint64_t>(k) > n)
    throw std::invalid_argument("invariance_probability requires 1 <= k <= n");
  const auto sn = static_cast<std::int64_t>(n);
  const BigInt den = binomial(sn, k);
  long double total = 0.0L;
  for (int lambda = 0; lambda <= k; ++lambda) {
    const BigRational coeff(binomial(sn - lambda, k - lambda), den);
    total += coeff.convert_to<long double>() *
             static_cast<long double>(degree_probability(k, lambda, bias));
  }
  return static_cast<double>(total);
}

NetworkStats network_stats(std::uint64_t n, int k, BiasModel bias)
{
  NetworkStats stats;
  stats.n = n;
  stats.k = k;
  stats.phi = multiplicity_ratio(n, k);
  stats.theta = mean_multiplicity(n, k);
  stats.p_invariant = invariance_probability(n, k, bias);
  return stats;
}

double delta_weighted(int k, BiasModel bias, std::span<const double> change_prob)
{
  if (k < 1)
    throw std::invalid_argument("delta_weighted: connectivity must be at least 1");
  const std::uint64_t n = std::uint64_t{1} << k;
  if (change_prob.size() != n + 1)
    throw std::invalid_argument("delta_weighted: need 2^k + 1 change probabilities");
  const CountTable table = degree_weight_table(k);
  const long double p = bias.p();
  long double total = 0.0L;
  for (std::uint64_t omega = 0; omega <= n; ++omega) {
    long double weighted_lambda = 0.0L;
    for (int lambda = 1; lambda <= k; ++lambda)
      weighted_lambda +=
          static_cast<long double>(lambda) *
          table.counts[static_cast<std::size_t>(lambda)][omega].convert_to<long double>();
    const long double pi = std::pow(p, static_cast<long double>(omega)) *
                           std::pow(1.0L - p, static_cast<long double>(n - omega));
    total += pi * change_prob[omega] * weighted_lambda;
  }
  return static_cast<double>(total);
}

} // namespace boolfn
