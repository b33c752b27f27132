#include "padicla/rational.hpp"

#include <numeric>

#include "padicla/error.hpp"

namespace padicla {

Rational::Rational(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorCode::kDivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Valuation::str() const {
  if (infinite_) return "inf@" + std::to_string(value_);
  return std::to_string(value_);
}

Valuation min(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() && b.is_infinite()) {
    return a.precision() <= b.precision() ? a : b;
  }
  if (a.is_infinite()) return b.value() <= a.precision() ? b : a;
  if (b.is_infinite()) return a.value() <= b.precision() ? a : b;
  return a.value() <= b.value() ? a : b;
}

}  // namespace padicla
