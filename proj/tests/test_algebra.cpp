#include <doctest.h>

#include <optional>
#include <random>

#include "geogrowth/counting.hpp"
#include "geogrowth/polynomial.hpp"
#include "geogrowth/series.hpp"
#include "support.hpp"

using namespace geogrowth::algebra;
using geotest::ints;

namespace {

/// Fit by solving the Hankel system a_k = c_1 a_{k-1} + ... + c_L a_{k-L},
/// k = L..2L-1, for L = 0, 1, ... with exact rational elimination, taking the
/// first L whose solution also reproduces every later term. Independent of
/// the Berlekamp-Massey code path.
std::optional<RationalSeries> hankel_fit(const std::vector<BigInt>& a, std::size_t bound) {
  for (std::size_t L = 0; L <= bound && 2 * L <= a.size(); ++L) {
    // Augmented rows [a_{k-1} ... a_{k-L} | a_k].
    std::vector<std::vector<Rational>> m;
    for (std::size_t k = L; k < 2 * L; ++k) {
      std::vector<Rational> row;
      for (std::size_t i = 1; i <= L; ++i) row.emplace_back(a[k - i]);
      row.emplace_back(a[k]);
      m.push_back(row);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    bool consistent = true;
    for (std::size_t c = 0; c < L && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[r][c];
        for (std::size_t j = c; j <= L; ++j) m[i][j] -= f * m[r][j];
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i) consistent = consistent && m[i][L] == 0;
    if (!consistent) continue;
    std::vector<Rational> coeff(L, 0);
    for (std::size_t i = 0; i < r; ++i) coeff[pivot_col[i]] = m[i][L] / m[i][pivot_col[i]];

    bool fits = true;
    for (std::size_t k = L; k < a.size() && fits; ++k) {
      Rational s = 0;
      for (std::size_t i = 1; i <= L; ++i) s += coeff[i - 1] * a[k - i];
      fits = s == Rational(a[k]);
    }
    if (!fits) continue;

    // Clear denominators: D = d (1 - sum c_i z^i), N = (A D) mod z^L.
    BigInt d = 1;
    for (const auto& c : coeff) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(c));
    std::vector<BigInt> den{d};
    for (const auto& c : coeff) den.push_back(-BigInt(boost::multiprecision::numerator(Rational(c * d))));
    std::vector<BigInt> num(L);
    for (std::size_t k = 0; k < L; ++k)
      for (std::size_t i = 0; i <= k; ++i) num[k] += den[i] * a[k - i];
    return RationalSeries(IntPolynomial(num), IntPolynomial(den));
  }
  return std::nullopt;
}

IntPolynomial random_poly(std::mt19937& rng, std::size_t degree, int range) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<BigInt> c;
  for (std::size_t i = 0; i <= degree; ++i) c.emplace_back(coef(rng));
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const IntPolynomial p{1, -5, 2};
  CHECK(p.to_string() == "1 - 5z + 2z^2");
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK((p * IntPolynomial{1, 1}) == IntPolynomial{1, -4, -3, 2});
  CHECK((p - p).is_zero());
  CHECK(p.evaluate(2) == -1);
  CHECK(IntPolynomial{4, 6}.content() == 2);
  CHECK(IntPolynomial{-4, -6}.primitive_part() == IntPolynomial{2, 3});
  CHECK(IntPolynomial{1, 1}.scaled_argument(3) == IntPolynomial{1, 3});
}

TEST_CASE("gcd and exact division") {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{-3, 1};
  CHECK(gcd(a, b) == IntPolynomial{-1, 1});
  CHECK(gcd(IntPolynomial{}, IntPolynomial{}).is_zero());
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{}) == IntPolynomial{2, 4});
  CHECK(gcd(IntPolynomial{-2, -4}, IntPolynomial{6, 12}) == IntPolynomial{2, 4});
  CHECK(exact_quotient(a, IntPolynomial{2, 1}) == IntPolynomial{-1, 1});
  CHECK_THROWS_AS(exact_quotient(a, IntPolynomial{5, 1}), std::domain_error);

  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, geotest::uniform(rng, 0, 3), 5);
    const auto g = random_poly(rng, geotest::uniform(rng, 1, 3), 5);
    const auto h = random_poly(rng, geotest::uniform(rng, 1, 3), 5);
    if (g.is_zero() || h.is_zero() || f.is_zero()) continue;
    const auto pd = pseudo_divide(f * g, h);
    const BigInt lc = h.leading();
    BigInt scale = 1;
    for (int k = 0; k < (f * g).degree() - h.degree() + 1; ++k) scale *= lc;
    CHECK((f * g) * scale == pd.quotient * h + pd.remainder);
    // gcd(f h, g h) is a multiple of h.
    const auto common = gcd(f * h, g * h);
    CHECK_NOTHROW(exact_quotient(common, h));
  }
}

TEST_CASE("series normalization and expansion") {
  const RationalSeries s(IntPolynomial{2, 2}, IntPolynomial{2, -2});
  CHECK(s == RationalSeries(IntPolynomial{1, 1}, IntPolynomial{1, -1}));
  CHECK(s.expand(4) == ints({1, 2, 2, 2, 2}));
  // Common factor (1 + z) cancels.
  const RationalSeries t(IntPolynomial{1, 1} * IntPolynomial{1, 2}, IntPolynomial{1, 1} * IntPolynomial{1, -3});
  CHECK(t.denominator() == IntPolynomial{1, -3});
  CHECK(rational_equal(t, RationalSeries(IntPolynomial{1, 2}, IntPolynomial{1, -3})));
  CHECK(RationalSeries(IntPolynomial{1, 1, 2}, IntPolynomial{1, -5, 2}).expand(4) == ints({1, 6, 30, 138, 630}));
  CHECK(RationalSeries(IntPolynomial{1, 1, 2}, IntPolynomial{1, -5, 2}).to_string() == "(1 + z + 2z^2)/(1 - 5z + 2z^2)");
  CHECK_THROWS_AS(RationalSeries(IntPolynomial{1}, IntPolynomial{}), std::domain_error);
  CHECK_THROWS_AS(RationalSeries(IntPolynomial{1}, IntPolynomial{0, 1}), std::domain_error);
  CHECK_THROWS_AS(RationalSeries(IntPolynomial{1}, IntPolynomial{2, 1}), std::domain_error);
}

TEST_CASE("transfer counts") {
  CountMatrix m{{{1, 1}, {1, 0}}, {1, 0}, {1, 1}};
  CHECK(transfer_count(m, 6) == ints({1, 2, 3, 5, 8, 13, 21}));
}

TEST_CASE("fit_recurrence agrees with a Hankel solve") {
  const auto c6 = RationalSeries(IntPolynomial{1, 1, 2}, IntPolynomial{1, -5, 2});
  const auto c6_terms = c6.expand(12);
  CHECK(fit_recurrence(c6_terms, 3) == c6);
  CHECK(hankel_fit(c6_terms, 3) == c6);
  CHECK_THROWS_AS(fit_recurrence(c6_terms, 2), NoFitError);
  CHECK_THROWS_AS(fit_recurrence(std::vector<BigInt>(c6_terms.begin(), c6_terms.begin() + 6), 3), std::invalid_argument);

  // Finite sequences are polynomials.
  const auto dihedral = ints({1, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(fit_recurrence(dihedral, 6) == RationalSeries::polynomial(IntPolynomial{1, 2, 2, 2, 2}));
  CHECK(hankel_fit(dihedral, 6) == fit_recurrence(dihedral, 6));

  std::mt19937 rng(2024);
  for (int i = 0; i < 400; ++i) {
    const std::size_t dd = geotest::uniform(rng, 1, 4), nd = geotest::uniform(rng, 0, 4);
    auto den = random_poly(rng, dd, 6);
    auto coeffs = den.coefficients();
    if (coeffs.empty()) continue;
    coeffs[0] = 1;
    const RationalSeries truth(random_poly(rng, nd, 6), IntPolynomial(coeffs));
    const std::size_t bound = std::max(dd, nd + 1);
    const auto terms = truth.expand(2 * bound + 4);
    CHECK(fit_recurrence(terms, bound) == truth);
    CHECK(hankel_fit(terms, bound) == truth);
  }
}
