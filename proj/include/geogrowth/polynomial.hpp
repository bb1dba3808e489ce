#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace geogrowth::algebra {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The zero polynomial has no coefficients and
/// no other polynomial carries a trailing zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(BigInt coefficient, std::size_t degree);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  /// Coefficient of t^i; zero past the degree.
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const { return coefficients_.back(); }

  /// gcd of the coefficients, positive; zero for the zero polynomial.
  BigInt content() const;
  /// Polynomial divided by its content, with positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// p(c*t).
  IntPolynomial scaled_argument(const BigInt& factor) const;
  /// First `terms` coefficients (p mod t^terms).
  IntPolynomial truncated(std::size_t terms) const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& factor);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  /// Orders by degree, then by coefficients from the top down.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form such as "1 - 5z + 2z^2".
  std::string to_string(std::string_view variable = "z") const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b over the integers; throws std::domain_error if b does not
/// divide a exactly.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor in Z[t] via the subresultant remainder sequence.
/// The result has positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace geogrowth::algebra
