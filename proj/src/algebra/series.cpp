#include "geogrowth/series.hpp"

#include <stdexcept>
#include <utility>

namespace geogrowth::algebra {

RationalSeries::RationalSeries(IntPolynomial numerator, IntPolynomial denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational series with zero denominator");

  const IntPolynomial common = gcd(numerator, denominator);
  numerator = exact_quotient(numerator, common);
  denominator = exact_quotient(denominator, common);

  BigInt scalar = boost::multiprecision::gcd(numerator.content(), denominator.content());
  if (numerator.is_zero()) scalar = denominator.content();
  const BigInt constant = denominator.coefficient(0);
  if (constant == 0) throw std::domain_error("denominator vanishes at z = 0; not a power series");
  if (constant < 0) scalar = -scalar;
  std::vector<BigInt> num, den;
  for (const auto& c : numerator.coefficients()) num.push_back(c / scalar);
  for (const auto& c : denominator.coefficients()) den.push_back(c / scalar);
  numerator_ = IntPolynomial(std::move(num));
  denominator_ = IntPolynomial(std::move(den));
  if (denominator_.coefficient(0) != 1)
    throw std::domain_error("series has no integer form with denominator constant term 1: " +
                            numerator_.to_string() + " / " + denominator_.to_string());
}

RationalSeries RationalSeries::polynomial(IntPolynomial p) {
  return RationalSeries(std::move(p), IntPolynomial{1});
}

std::vector<BigInt> RationalSeries::expand(std::size_t n) const {
  // den(0) == 1, so long division needs no exact-division checks.
  std::vector<BigInt> out(n + 1);
  const auto& den = denominator_.coefficients();
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt acc = numerator_.coefficient(k);
    const std::size_t top = std::min(k, den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= den[j] * out[k - j];
    out[k] = std::move(acc);
  }
  return out;
}

std::string RationalSeries::to_string(std::string_view variable) const {
  return "(" + numerator_.to_string(variable) + ")/(" + denominator_.to_string(variable) + ")";
}

std::vector<BigInt> expand(const RationalSeries& series, std::size_t n) { return series.expand(n); }

bool rational_equal(const RationalSeries& a, const RationalSeries& b) { return a == b; }

}  // namespace geogrowth::algebra
