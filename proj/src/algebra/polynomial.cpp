#include "geogrowth/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace geogrowth::algebra {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : BigInt(0);
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coefficients_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> out;
  out.reserve(coefficients_.size());
  for (const auto& x : coefficients_) out.push_back(x / c);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled_argument(const BigInt& factor) const {
  std::vector<BigInt> out(coefficients_);
  BigInt power = 1;
  for (auto& c : out) {
    c *= power;
    power *= factor;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::truncated(std::size_t terms) const {
  if (terms >= coefficients_.size()) return *this;
  return IntPolynomial(std::vector<BigInt>(coefficients_.begin(),
                                           coefficients_.begin() + static_cast<long>(terms)));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(*this);
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& factor) {
  if (factor == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(out));
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coefficients_.size(); i-- > 0;) {
    if (a.coefficients_[i] < b.coefficients_[i]) return std::strong_ordering::less;
    if (a.coefficients_[i] > b.coefficients_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntPolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt magnitude = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || magnitude != 1) out << magnitude;
    if (i >= 1) out << variable;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_divide: division by zero polynomial");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  const int db = b.degree();
  const BigInt& lead = b.leading();
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  // Classic pseudo-division: multiply through by lead once per step.
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt top = rem[static_cast<std::size_t>(k + db)];
    for (auto& q : quo) q *= lead;
    quo[static_cast<std::size_t>(k)] += top;
    for (auto& r : rem) r *= lead;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= top * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: divisor does not divide");
  const int db = b.degree();
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + db)];
    if (top % b.leading() != 0) throw std::domain_error("exact_quotient: divisor does not divide");
    BigInt q = top / b.leading();
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& r) { return r != 0; }))
    throw std::domain_error("exact_quotient: divisor does not divide");
  return IntPolynomial(std::move(quo));
}

namespace {

BigInt power(const BigInt& base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

IntPolynomial divide_by_scalar(const IntPolynomial& p, const BigInt& d) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c / d);
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();

  IntPolynomial x = a.degree() >= b.degree() ? a : b;
  IntPolynomial y = a.degree() >= b.degree() ? b : a;
  const BigInt scalar = boost::multiprecision::gcd(x.content(), y.content());
  x = x.primitive_part();
  y = y.primitive_part();

  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const int delta = x.degree() - y.degree();
    IntPolynomial r = pseudo_divide(x, y).remainder;
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      y = IntPolynomial{1};
      break;
    }
    x = std::move(y);
    y = divide_by_scalar(r, g * power(h, delta));
    g = x.leading();
    // h <- h^(1-delta) g^delta
    if (delta > 0) h = power(g, delta) / power(h, delta - 1);
  }
  return y.primitive_part() * scalar;
}

}  // namespace geogrowth::algebra
