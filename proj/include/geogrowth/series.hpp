#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "geogrowth/polynomial.hpp"

namespace geogrowth::algebra {

/// A power series given as numerator/denominator in lowest terms with
/// denominator constant term +1. Construction normalizes; two series are
/// equal as power series iff their normalized forms are identical.
class RationalSeries {
 public:
  /// Throws std::domain_error when the denominator is zero or the reduced
  /// fraction cannot be written with unit constant term in the denominator.
  RationalSeries(IntPolynomial numerator, IntPolynomial denominator);

  static RationalSeries polynomial(IntPolynomial p);

  const IntPolynomial& numerator() const { return numerator_; }
  const IntPolynomial& denominator() const { return denominator_; }

  /// Taylor coefficients of z^0 .. z^n.
  std::vector<BigInt> expand(std::size_t n) const;

  std::string to_string(std::string_view variable = "z") const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  IntPolynomial numerator_;
  IntPolynomial denominator_;
};

/// Free-function spelling of RationalSeries::expand.
std::vector<BigInt> expand(const RationalSeries& series, std::size_t n);

bool rational_equal(const RationalSeries& a, const RationalSeries& b);

}  // namespace geogrowth::algebra
