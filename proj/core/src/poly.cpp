#include "padicla/poly.hpp"

#include <algorithm>

#include "padicla/error.hpp"

namespace padicla {

PadicPoly::PadicPoly(Prime p, std::vector<PadicScalar> coefficients, int precision)
    : p_(p), precision_(precision), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    require(c.prime() == p_, ErrorCode::kPrimeMismatch, "polynomial coefficient prime");
  }
  normalize();
}

PadicPoly PadicPoly::from_integers(const std::vector<long>& coefficients, Prime p,
                                   int precision) {
  std::vector<PadicScalar> cs;
  cs.reserve(coefficients.size());
  for (long c : coefficients) cs.push_back(PadicScalar::from_integer(c, p, precision));
  return PadicPoly(p, std::move(cs), precision);
}

PadicPoly PadicPoly::monomial(std::size_t degree, Prime p, int precision) {
  std::vector<PadicScalar> cs(degree + 1, PadicScalar::zero(p, precision));
  cs[degree] = PadicScalar::one(p, precision);
  return PadicPoly(p, std::move(cs), precision);
}

void PadicPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PadicScalar PadicPoly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return PadicScalar::zero(p_, precision_);
}

bool PadicPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().valuation() == Valuation::finite(0) &&
         coeffs_.back().unit() == 1;
}

bool PadicPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const PadicScalar& c) { return c.valuation().at_least(0); });
}

Valuation PadicPoly::gauss_norm() const {
  Valuation m = Valuation::infinity(precision_);
  for (const auto& c : coeffs_) m = min(m, c.valuation());
  return m;
}

PadicPoly operator+(const PadicPoly& a, const PadicPoly& b) {
  require(a.p_ == b.p_, ErrorCode::kPrimeMismatch, "polynomial primes differ");
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<PadicScalar> cs;
  cs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cs.push_back(a.coeff(i) + b.coeff(i));
  return PadicPoly(a.p_, std::move(cs), std::min(a.precision_, b.precision_));
}

PadicPoly operator-(const PadicPoly& a, const PadicPoly& b) {
  return a + b * PadicScalar::from_integer(-1, b.p_, b.precision_);
}

PadicPoly operator*(const PadicPoly& a, const PadicPoly& b) {
  require(a.p_ == b.p_, ErrorCode::kPrimeMismatch, "polynomial primes differ");
  const int precision = std::min(a.precision_, b.precision_);
  if (a.is_zero() || b.is_zero()) return PadicPoly(a.p_, precision);
  // Partial sums start empty rather than at a zero of bounded precision.
  std::vector<std::optional<PadicScalar>> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const PadicScalar term = a.coeffs_[i] * b.coeffs_[j];
      acc[i + j] = acc[i + j] ? *acc[i + j] + term : term;
    }
  }
  std::vector<PadicScalar> cs;
  cs.reserve(acc.size());
  for (auto& c : acc) cs.push_back(std::move(*c));
  return PadicPoly(a.p_, std::move(cs), precision);
}

PadicPoly PadicPoly::operator*(const PadicScalar& c) const {
  std::vector<PadicScalar> cs;
  cs.reserve(coeffs_.size());
  for (const auto& x : coeffs_) cs.push_back(x * c);
  return PadicPoly(p_, std::move(cs), precision_);
}

PadicPoly PadicPoly::derivative() const {
  std::vector<PadicScalar> cs;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    cs.push_back(coeffs_[i] * PadicScalar::from_integer(static_cast<long>(i), p_, precision_));
  }
  return PadicPoly(p_, std::move(cs), precision_);
}

PadicScalar PadicPoly::eval(const PadicScalar& x) const {
  require(x.prime() == p_, ErrorCode::kPrimeMismatch, "evaluation point prime");
  if (coeffs_.empty()) return PadicScalar::zero(p_, precision_);
  PadicScalar acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> PadicPoly::residue_coefficients() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.residue(1));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string PadicPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].str() + ")";
    if (i > 0) s += "*X^" + std::to_string(i);
  }
  return s;
}

PadicScalar poly_eval(const PadicPoly& f, const PadicScalar& x) {
  PadicScalar r = f.eval(x);
  require(!(r.is_zero() && r.absolute_precision() <= 0), ErrorCode::kPrecisionExhausted,
          "evaluation retains no p-adic digit");
  return r;
}

std::vector<mpz_class> residue_roots(const PadicPoly& f) {
  const auto cs = f.residue_coefficients();
  std::vector<mpz_class> roots;
  if (cs.empty()) return roots;  // f = 0 mod p has no well-defined root set
  const mpz_class p(f.prime());
  for (mpz_class r = 0; r < p; ++r) {
    mpz_class acc = 0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * r + *it) % p;
    if (acc == 0) roots.push_back(r);
  }
  return roots;
}

PadicScalar hensel_lift(const PadicPoly& f, const mpz_class& r0) {
  const Prime p = f.prime();
  const PadicPoly df = f.derivative();
  PadicScalar x = PadicScalar::from_integer(r0, p, f.precision());
  require(f.eval(x).valuation().at_least(1), ErrorCode::kPreconditionViolation,
          "not a residue root");
  require(df.eval(x).is_unit(), ErrorCode::kPreconditionViolation,
          "residue root is not simple");
  // Newton's method doubles the number of correct digits per step.
  for (int k = 1; k < 2 * f.precision() + 2; k *= 2) {
    x = x - f.eval(x) / df.eval(x);
  }
  return x;
}

}  // namespace padicla
