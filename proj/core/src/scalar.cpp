#include "padicla/scalar.hpp"

#include <algorithm>
#include <limits>

#include "padicla/error.hpp"

namespace padicla {

mpz_class prime_power(Prime p, std::int64_t e) {
  require(e >= 0, ErrorCode::kPreconditionViolation, "negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

bool is_prime(Prime p) {
  if (p < 2) return false;
  for (Prime d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Strips factors of p from u, returning how many were removed.
std::int64_t remove_p(mpz_class& u, Prime p) {
  if (u == 0) return 0;
  mpz_class pp(p);
  return static_cast<std::int64_t>(
      mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t()));
}

void check_same_prime(const PadicScalar& a, const PadicScalar& b) {
  require(a.prime() == b.prime(), ErrorCode::kPrimeMismatch,
          "scalars over Q_" + std::to_string(a.prime()) + " and Q_" +
              std::to_string(b.prime()));
}

}  // namespace

PadicScalar PadicScalar::make(Prime p, std::int64_t v, mpz_class u,
                              std::int64_t abs) {
  if (abs <= v) return zero(p, abs);
  const mpz_class mod = prime_power(p, abs - v);
  u %= mod;
  if (u < 0) u += mod;
  if (u == 0) return zero(p, abs);
  v += remove_p(u, p);
  const auto n = static_cast<int>(abs - v);
  return PadicScalar(p, false, v, std::move(u), n);
}

PadicScalar PadicScalar::zero(Prime p, std::int64_t absolute_precision) {
  return PadicScalar(p, true, absolute_precision, 0, 0);
}

PadicScalar PadicScalar::one(Prime p, int precision) {
  return from_integer(1, p, precision);
}

PadicScalar PadicScalar::from_integer(const mpz_class& n, Prime p, int precision) {
  require(precision >= 1, ErrorCode::kPreconditionViolation, "precision must be >= 1");
  if (n == 0) return zero(p, precision);
  mpz_class u = n;
  const std::int64_t v = remove_p(u, p);
  return make(p, v, u, v + precision);
}

PadicScalar PadicScalar::from_integer_mod(const mpz_class& n, Prime p,
                                          std::int64_t absolute_precision) {
  return make(p, 0, n, absolute_precision);
}

PadicScalar PadicScalar::from_rational(const mpz_class& num, const mpz_class& den,
                                       Prime p, int precision) {
  require(den != 0, ErrorCode::kDivisionByZero, "rational with zero denominator");
  return from_integer(num, p, precision) / from_integer(den, p, precision);
}

PadicScalar PadicScalar::from_parts(Prime p, int precision, std::int64_t valuation,
                                    const mpz_class& unit) {
  require(precision >= 1, ErrorCode::kPreconditionViolation, "precision must be >= 1");
  require(unit > 0, ErrorCode::kPreconditionViolation, "unit must be positive");
  require(unit < prime_power(p, precision), ErrorCode::kPreconditionViolation,
          "unit must be below p^prec");
  require(mpz_divisible_ui_p(unit.get_mpz_t(), p) == 0,
          ErrorCode::kPreconditionViolation, "unit must be coprime to p");
  return PadicScalar(p, false, valuation, unit, precision);
}

Valuation PadicScalar::valuation() const {
  return zero_ ? Valuation::infinity(v_) : Valuation::finite(v_);
}

PadicScalar PadicScalar::operator-() const {
  if (zero_) return *this;
  return PadicScalar(p_, false, v_, prime_power(p_, n_) - u_, n_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  check_same_prime(a, b);
  const std::int64_t abs = std::min(a.absolute_precision(), b.absolute_precision());
  const std::int64_t vmin = std::min(a.v_, b.v_);
  if (abs <= vmin) return PadicScalar::zero(a.p_, abs);
  // Terms at or beyond `abs` vanish, so exponents stay bounded by abs - vmin.
  auto term = [&](const PadicScalar& x) -> mpz_class {
    if (x.zero_ || x.v_ >= abs) return 0;
    return x.u_ * prime_power(x.p_, x.v_ - vmin);
  };
  return PadicScalar::make(a.p_, vmin, term(a) + term(b), abs);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  check_same_prime(a, b);
  const std::int64_t v = a.v_ + b.v_;
  const int n = std::min(a.n_, b.n_);
  return PadicScalar::make(a.p_, v, a.u_ * b.u_, v + n);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  return a * b.inverse();
}

PadicScalar PadicScalar::inverse() const {
  require(!zero_, ErrorCode::kDivisionByZero,
          "inverse of a scalar that is zero at precision " + std::to_string(v_));
  const mpz_class mod = prime_power(p_, n_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
  return PadicScalar(p_, false, -v_, inv, n_);
}

PadicScalar PadicScalar::shifted(std::int64_t k) const {
  PadicScalar r = *this;
  r.v_ += k;
  return r;
}

PadicScalar PadicScalar::truncated(std::int64_t absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) return *this;
  return make(p_, v_, u_, absolute_precision);
}

mpz_class PadicScalar::residue(int n) const {
  require(absolute_precision() >= n, ErrorCode::kPrecisionExhausted,
          "scalar known to absolute precision " + std::to_string(absolute_precision()) +
              " cannot be reduced modulo p^" + std::to_string(n));
  if (zero_ || v_ >= n) return 0;
  require(v_ >= 0, ErrorCode::kNormExceedsOne, "non-integral scalar has no residue");
  mpz_class r = u_ * prime_power(p_, v_);
  return r % prime_power(p_, n);
}

std::string PadicScalar::str() const {
  const std::string p = std::to_string(p_);
  const std::string big_o = "O(" + p + "^" + std::to_string(absolute_precision()) + ")";
  if (zero_) return big_o;
  std::string s = u_.get_str();
  if (v_ != 0) s += "*" + p + "^" + std::to_string(v_);
  return s + " + " + big_o;
}

}  // namespace padicla
