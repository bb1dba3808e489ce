#include "geogrowth/counting.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace geogrowth::algebra {

std::vector<BigInt> transfer_count(const CountMatrix& m, std::size_t n) {
  const std::size_t size = m.size();
  if (m.initial.size() != size || m.accepting.size() != size)
    throw std::invalid_argument("transfer_count: vector and matrix dimensions disagree");
  for (const auto& row : m.matrix)
    if (row.size() != size) throw std::invalid_argument("transfer_count: matrix is not square");

  // Sparse copy of the nonzero entries; DFA matrices are mostly zero.
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (m.matrix[i][j] != 0) rows[i].emplace_back(j, m.matrix[i][j]);

  std::vector<BigInt> out;
  out.reserve(n + 1);
  std::vector<BigInt> current = m.initial;
  std::vector<BigInt> next(size);
  for (std::size_t k = 0;; ++k) {
    BigInt total = 0;
    for (std::size_t i = 0; i < size; ++i)
      if (current[i] != 0 && m.accepting[i] != 0) total += current[i] * m.accepting[i];
    out.push_back(std::move(total));
    if (k == n) break;
    for (auto& x : next) x = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if (current[i] == 0) continue;
      for (const auto& [j, w] : rows[i]) next[j] += current[i] * w;
    }
    std::swap(current, next);
  }
  return out;
}

namespace {

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) {
    const BigInt d = boost::multiprecision::denominator(v);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

}  // namespace

RationalSeries fit_recurrence(std::span<const BigInt> sequence, std::size_t bound) {
  const std::size_t size = sequence.size();
  if (size < 2 * bound + 1)
    throw std::invalid_argument("fit_recurrence: need at least 2*bound+1 terms, got " +
                                std::to_string(size));

  // Berlekamp-Massey over Q. `connection` is C(z) with C(0) = 1 and
  // sum_i C_i a_{k-i} = 0 for L <= k < processed.
  std::vector<Rational> connection{1};
  std::vector<Rational> previous{1};
  std::size_t order = 0;
  std::size_t shift = 1;
  Rational previous_discrepancy = 1;

  for (std::size_t k = 0; k < size; ++k) {
    Rational discrepancy = sequence[k];
    for (std::size_t i = 1; i <= order && i < connection.size(); ++i)
      discrepancy += connection[i] * sequence[k - i];
    if (discrepancy == 0) {
      ++shift;
      continue;
    }
    const Rational factor = discrepancy / previous_discrepancy;
    std::vector<Rational> updated = connection;
    if (updated.size() < previous.size() + shift) updated.resize(previous.size() + shift);
    for (std::size_t i = 0; i < previous.size(); ++i) updated[i + shift] -= factor * previous[i];
    if (2 * order <= k) {
      previous = std::move(connection);
      order = k + 1 - order;
      previous_discrepancy = discrepancy;
      shift = 1;
    } else {
      ++shift;
    }
    connection = std::move(updated);
  }

  if (order > bound)
    throw NoFitError("no linear recurrence of order <= " + std::to_string(bound) +
                     " fits the sequence (minimal order " + std::to_string(order) + ")");

  connection.resize(order + 1);
  // Numerator = (A(z) * C(z)) mod z^order.
  std::vector<Rational> numerator(order);
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t i = 0; i <= k; ++i) numerator[k] += connection[i] * sequence[k - i];

  std::vector<Rational> all(numerator);
  all.insert(all.end(), connection.begin(), connection.end());
  const BigInt scale = lcm_of_denominators(all);
  std::vector<BigInt> num, den;
  for (const auto& c : numerator) num.push_back(boost::multiprecision::numerator(Rational(c * scale)));
  for (const auto& c : connection) den.push_back(boost::multiprecision::numerator(Rational(c * scale)));

  RationalSeries fitted(IntPolynomial(std::move(num)), IntPolynomial(std::move(den)));
  const auto check = fitted.expand(size - 1);
  for (std::size_t k = 0; k < size; ++k)
    if (check[k] != sequence[k])
      throw NoFitError("fitted recurrence disagrees with term " + std::to_string(k));
  return fitted;
}

}  // namespace geogrowth::algebra
