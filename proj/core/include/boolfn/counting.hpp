#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boolfn/bigint.hpp"
#include "boolfn/truth_table.hpp"

namespace boolfn {

/*! \brief Exact joint census by irreducible degree and weight.

  counts[lambda][omega] is the number of k-argument functions that depend on
  exactly lambda arguments and have omega ones in their table.  Row sums give
  the per-degree counts, column sums the per-weight binomials, and every row
  is symmetric about omega = 2^(k-1).
*/
struct CountTable {
  int k = 0;
  std::vector<std::vector<BigInt>> counts; // (k+1) x (2^k + 1)
};

/*! \brief Number of k-argument functions depending on all k arguments.

  Equals sum_{m=0..k} (-1)^(k-m) C(k,m) 2^(2^m) by inclusion-exclusion over
  the ignored-argument subsets; 2 for k = 0.
*/
BigInt totally_irreducible_count(int k);

//! Number of k-argument functions of irreducible degree lambda:
//! C(k, lambda) times the fully-dependent count on lambda arguments.
BigInt degree_count(int k, int lambda);

/*! \brief Exact count of functions with degree lambda and weight omega.

  C(k,lambda) * sum_m (-1)^(lambda-m) C(lambda,m) C(2^m, omega/2^(k-m)), the
  inner term contributing only when 2^(k-m) divides omega (tested in exact
  integer arithmetic).
*/
BigInt degree_weight_count(int k, int lambda, std::int64_t omega);

//! Number of functions reducible on a fixed set of lambda indices: 2^(2^(k-lambda)).
BigInt reducible_set_count(int k, int lambda);

//! Of those, the ones with weight omega: C(2^(k-lambda), omega/2^lambda) when
//! 2^lambda divides omega, else zero.
BigInt reducible_weight_count(int k, int lambda, std::int64_t omega);

//! Full (k+1) x (2^k+1) table of degree_weight_count values.
//! k above the cap (default 10) is rejected.
CountTable degree_weight_table(int k, int cap = 10);

/*! \brief Probability that a table drawn under `bias` has degree lambda.

  sum_omega counts[lambda][omega] * p^omega (1-p)^(2^k-omega), accumulated in
  extended precision with compensated summation.
*/
double degree_probability(int k, int lambda, BiasModel bias);

//! Exact-rational variant for bias expressible as a ratio.
BigRational degree_probability_exact(int k, int lambda, const BigRational& p);

//! CSV export: header row carries the omega values, first column the lambda.
void write_csv(const CountTable& table, std::ostream& out);

//! JSON export; counts are emitted as decimal strings to survive any parser.
std::string to_json_string(const CountTable& table);

//! True iff row sums, column sums and the weight symmetry all hold.
bool satisfies_invariants(const CountTable& table);

} // namespace boolfn
