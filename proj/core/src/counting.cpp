#include "boolfn/counting.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace boolfn {

BigInt binomial(std::int64_t n, std::int64_t r)
{
  if (r < 0 || r > n || n < 0)
    return 0;
  if (r > n - r)
    r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

namespace {

void check_degree_range(int k, int lambda)
{
  if (k < 0 || lambda < 0 || lambda > k)
    throw std::out_of_range("degree must satisfy 0 <= lambda <= k");
}

void check_weight_range(int k, std::int64_t omega)
{
  if (omega < 0 || omega > (std::int64_t{1} << k))
    throw std::out_of_range("weight must satisfy 0 <= omega <= 2^k");
}

// Row C(n, 0..n) by the multiplicative recurrence.
std::vector<BigInt> binomial_row(std::int64_t n)
{
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (std::int64_t r = 1; r <= n; ++r)
    row[static_cast<std::size_t>(r)] =
        row[static_cast<std::size_t>(r - 1)] * (n - r + 1) / r;
  return row;
}

// degree_weight_count with the inner binomials looked up from cached rows,
// rows[m] = C(2^m, .).
BigInt degree_weight_count_cached(int k, int lambda, std::int64_t omega,
                                  const std::vector<std::vector<BigInt>>& rows)
{
  BigInt inner = 0;
  for (int m = 0; m <= lambda; ++m) {
    const std::int64_t block = std::int64_t{1} << (k - m);
    if (omega % block != 0)
      continue;
    const std::int64_t q = omega / block;
    if (q > (std::int64_t{1} << m))
      continue;
    const BigInt& c = rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)];
    if ((lambda - m) % 2 == 0)
      inner += binomial(lambda, m) * c;
    else
      inner -= binomial(lambda, m) * c;
  }
  return binomial(k, lambda) * inner;
}

} // namespace

BigInt totally_irreducible_count(int k)
{
  if (k < 0)
    throw std::out_of_range("arity must be non-negative");
  BigInt total = 0;
  for (int m = 0; m <= k; ++m) {
    const BigInt term = binomial(k, m) * pow2(std::uint64_t{1} << m);
    if ((k - m) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt degree_count(int k, int lambda)
{
  check_degree_range(k, lambda);
  return binomial(k, lambda) * totally_irreducible_count(lambda);
}

BigInt degree_weight_count(int k, int lambda, std::int64_t omega)
{
  check_degree_range(k, lambda);
  check_weight_range(k, omega);
  BigInt inner = 0;
  for (int m = 0; m <= lambda; ++m) {
    // the divisibility test is Kronecker's delta, kept in exact arithmetic
    const std::int64_t block = std::int64_t{1} << (k - m);
    if (omega % block != 0)
      continue;
    const BigInt term =
        binomial(lambda, m) * binomial(std::int64_t{1} << m, omega / block);
    if ((lambda - m) % 2 == 0)
      inner += term;
    else
      inner -= term;
  }
  return binomial(k, lambda) * inner;
}

BigInt reducible_set_count(int k, int lambda)
{
  check_degree_range(k, lambda);
  return pow2(std::uint64_t{1} << (k - lambda));
}

BigInt reducible_weight_count(int k, int lambda, std::int64_t omega)
{
  check_degree_range(k, lambda);
  check_weight_range(k, omega);
  const std::int64_t block = std::int64_t{1} << lambda;
  if (omega % block != 0)
    return 0;
  return binomial(std::int64_t{1} << (k - lambda), omega / block);
}

CountTable degree_weight_table(int k, int cap)
{
  if (k < 0 || k > cap)
    throw std::invalid_argument("degree_weight_table: k exceeds the cap of " +
                                std::to_string(cap));
  CountTable table;
  table.k = k;
  const std::int64_t ncols = (std::int64_t{1} << k) + 1;
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m)
    rows[static_cast<std::size_t>(m)] = binomial_row(std::int64_t{1} << m);
  table.counts.resize(static_cast<std::size_t>(k) + 1);
  for (int lambda = 0; lambda <= k; ++lambda) {
    auto& row = table.counts[static_cast<std::size_t>(lambda)];
    row.resize(static_cast<std::size_t>(ncols));
    for (std::int64_t omega = 0; omega < ncols; ++omega)
      row[static_cast<std::size_t>(omega)] =
          degree_weight_count_cached(k, lambda, omega, rows);
  }
  return table;
}

double degree_probability(int k, int lambda, BiasModel bias)
{
  check_degree_range(k, lambda);
  const std::int64_t n = std::int64_t{1} << k;
  const long double p = bias.p();
  // Kahan-compensated accumulation; terms span many orders of magnitude.
  long double sum = 0.0L, carry = 0.0L;
  for (std::int64_t omega = 0; omega <= n; ++omega) {
    const BigInt count = degree_weight_count(k, lambda, omega);
    if (count == 0)
      continue;
    const long double pi = std::pow(p, static_cast<long double>(omega)) *
                           std::pow(1.0L - p, static_cast<long double>(n - omega));
    const long double term = count.convert_to<long double>() * pi - carry;
    const long double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return static_cast<double>(sum);
}

BigRational degree_probability_exact(int k, int lambda, const BigRational& p)
{
  check_degree_range(k, lambda);
  if (p < 0 || p > 1)
    throw std::invalid_argument("bias must be in [0, 1]");
  const std::int64_t n = std::int64_t{1} << k;
  const BigInt u = boost::multiprecision::numerator(p);
  const BigInt v = boost::multiprecision::denominator(p);
  BigInt num = 0;
  for (std::int64_t omega = 0; omega <= n; ++omega) {
    const BigInt count = degree_weight_count(k, lambda, omega);
    if (count == 0)
      continue;
    BigInt term = count;
    for (std::int64_t j = 0; j < omega; ++j)
      term *= u;
    for (std::int64_t j = omega; j < n; ++j)
      term *= v - u;
    num += term;
  }
  BigInt den = 1;
  for (std::int64_t j = 0; j < n; ++j)
    den *= v;
  return BigRational(num, den);
}

void write_csv(const CountTable& table, std::ostream& out)
{
  out << "lambda";
  const std::size_t ncols = table.counts.empty() ? 0 : table.counts.front().size();
  for (std::size_t omega = 0; omega < ncols; ++omega)
    out << ',' << omega;
  out << '\n';
  for (std::size_t lambda = 0; lambda < table.counts.size(); ++lambda) {
    out << lambda;
    for (const auto& value : table.counts[lambda])
      out << ',' << value;
    out << '\n';
  }
}

std::string to_json_string(const CountTable& table)
{
  std::ostringstream out;
  out << "{\"k\":" << table.k << ",\"counts\":[";
  for (std::size_t lambda = 0; lambda < table.counts.size(); ++lambda) {
    if (lambda)
      out << ',';
    out << '[';
    for (std::size_t omega = 0; omega < table.counts[lambda].size(); ++omega) {
      if (omega)
        out << ',';
      out << '"' << table.counts[lambda][omega] << '"';
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

bool satisfies_invariants(const CountTable& table)
{
  const int k = table.k;
  const std::int64_t n = std::int64_t{1} << k;
  if (table.counts.size() != static_cast<std::size_t>(k) + 1)
    return false;
  for (const auto& row : table.counts)
    if (row.size() != static_cast<std::size_t>(n) + 1)
      return false;
  for (std::int64_t omega = 0; omega <= n; ++omega) {
    BigInt col = 0;
    for (int lambda = 0; lambda <= k; ++lambda)
      col += table.counts[lambda][static_cast<std::size_t>(omega)];
    if (col != binomial(n, omega))
      return false;
  }
  for (int lambda = 0; lambda <= k; ++lambda) {
    BigInt row = 0;
    for (std::int64_t omega = 0; omega <= n; ++omega)
      row += table.counts[lambda][static_cast<std::size_t>(omega)];
    if (row != degree_count(k, lambda))
      return false;
  }
  for (int lambda = 0; lambda <= k; ++lambda)
    for (std::int64_t omega = 0; omega <= n; ++omega)
      if (table.counts[lambda][static_cast<std::size_t>(omega)] !=
          table.counts[lambda][static_cast<std::size_t>(n - omega)])
        return false;
  return true;
}

} // namespace boolfn
