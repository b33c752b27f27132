#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "padicla/rational.hpp"

namespace padicla {

using Prime = unsigned long;  // matches GMP's ui arithmetic

inline constexpr int kDefaultPrecision = 20;

// p^e for e >= 0.
mpz_class prime_power(Prime p, std::int64_t e);

bool is_prime(Prime p);

// An element of Q_p known to finite precision, stored as p^v * u with p not
// dividing u and u known modulo p^N (N = relative precision). A scalar that is
// zero modulo its available precision is "zero at absolute precision k": the
// value lies in p^k Z_p and no digit is known.
//
// Precision is never invented: a sum is known to the minimum absolute
// precision of its summands, a product to the minimum relative precision.
class PadicScalar {
 public:
  static PadicScalar zero(Prime p, std::int64_t absolute_precision);
  static PadicScalar one(Prime p, int precision = kDefaultPrecision);
  // Exact integer n with relative precision N (n = 0 gives zero at absolute
  // precision N).
  static PadicScalar from_integer(const mpz_class& n, Prime p,
                                  int precision = kDefaultPrecision);
  // n known only modulo p^absolute_precision.
  static PadicScalar from_integer_mod(const mpz_class& n, Prime p,
                                      std::int64_t absolute_precision);
  static PadicScalar from_rational(const mpz_class& num, const mpz_class& den,
                                   Prime p, int precision = kDefaultPrecision);
  // Canonical parts as they appear in the serialized encoding. Throws
  // kPreconditionViolation when the parts are not canonical.
  static PadicScalar from_parts(Prime p, int precision, std::int64_t valuation,
                                const mpz_class& unit);

  Prime prime() const { return p_; }
  bool is_zero() const { return zero_; }
  Valuation valuation() const;
  // Valuation for nonzero scalars, absolute precision for zeros.
  std::int64_t valuation_lower_bound() const { return v_; }
  const mpz_class& unit() const { return u_; }
  int relative_precision() const { return n_; }
  std::int64_t absolute_precision() const { return v_ + n_; }

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }

  PadicScalar inverse() const;
  // Multiplication by p^k; lossless in both directions.
  PadicScalar shifted(std::int64_t k) const;
  // The same value with absolute precision lowered to at most k.
  PadicScalar truncated(std::int64_t absolute_precision) const;

  bool is_integral() const { return v_ >= 0; }
  bool is_unit() const { return !zero_ && v_ == 0; }
  // Congruence at the precision both operands justify.
  bool congruent(const PadicScalar& other) const { return (*this - other).is_zero(); }

  // The value modulo p^n, in [0, p^n). Requires an integral scalar known to
  // absolute precision >= n.
  mpz_class residue(int n) const;

  // Structural equality of the canonical encoding.
  friend bool operator==(const PadicScalar&, const PadicScalar&) = default;

  // Human-readable, e.g. "2*5^2 + O(5^22)" or "O(2^8)".
  std::string str() const;

 private:
  PadicScalar(Prime p, bool zero, std::int64_t v, mpz_class u, int n)
      : p_(p), zero_(zero), v_(v), u_(std::move(u)), n_(n) {}

  // Normalizes p^v * u known modulo p^abs into canonical form.
  static PadicScalar make(Prime p, std::int64_t v, mpz_class u, std::int64_t abs);

  Prime p_;
  bool zero_;
  std::int64_t v_;  // valuation, or absolute precision when zero_
  mpz_class u_;     // 0 when zero_
  int n_;           // relative precision, 0 when zero_
};

}  // namespace padicla
