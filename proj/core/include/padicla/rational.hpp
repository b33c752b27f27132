#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace padicla {

// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return {-num_, den_}; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// The p-adic valuation of a scalar known to finite precision: either an exact
// integer, or "infinity at precision k" meaning the value lies in p^k Z_p and
// nothing more is known.
class Valuation {
 public:
  static Valuation finite(std::int64_t v) { return Valuation(v, false); }
  static Valuation infinity(std::int64_t at_precision) {
    return Valuation(at_precision, true);
  }

  bool is_infinite() const { return infinite_; }
  // Exact valuation for finite values, the absolute precision otherwise.
  std::int64_t value() const { return value_; }
  std::int64_t precision() const { return value_; }

  // True iff the scalar is certainly divisible by p^k.
  bool at_least(std::int64_t k) const { return value_ >= k; }
  bool at_least(const Rational& k) const { return Rational(value_) >= k; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

  std::string str() const;

 private:
  Valuation(std::int64_t value, bool infinite)
      : value_(value), infinite_(infinite) {}

  std::int64_t value_;
  bool infinite_;
};

// Minimum in the ultrametric sense: a finite valuation is always smaller than
// an infinite one; two infinities keep the weaker precision.
Valuation min(const Valuation& a, const Valuation& b);

}  // namespace padicla
