#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicla/scalar.hpp"

namespace padicla {

// Polynomial over Q_p; coefficient i multiplies X^i. Trailing coefficients that
// are zero at precision are dropped, so the zero polynomial has no
// coefficients and degree -1.
class PadicPoly {
 public:
  PadicPoly(Prime p, int precision = kDefaultPrecision) : p_(p), precision_(precision) {}
  PadicPoly(Prime p, std::vector<PadicScalar> coefficients,
            int precision = kDefaultPrecision);

  static PadicPoly from_integers(const std::vector<long>& coefficients, Prime p,
                                 int precision = kDefaultPrecision);
  static PadicPoly monomial(std::size_t degree, Prime p, int precision = kDefaultPrecision);

  Prime prime() const { return p_; }
  int precision() const { return precision_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<PadicScalar>& coefficients() const { return coeffs_; }
  // Coefficient of X^i (zero at the working precision beyond the degree).
  PadicScalar coeff(std::size_t i) const;

  bool is_monic() const;
  bool is_integral() const;
  // min coefficient valuation m, i.e. the Gauss norm is p^(-m).
  Valuation gauss_norm() const;

  friend PadicPoly operator+(const PadicPoly& a, const PadicPoly& b);
  friend PadicPoly operator-(const PadicPoly& a, const PadicPoly& b);
  friend PadicPoly operator*(const PadicPoly& a, const PadicPoly& b);
  PadicPoly operator*(const PadicScalar& c) const;

  PadicPoly derivative() const;
  // Horner evaluation with precision tracking.
  PadicScalar eval(const PadicScalar& x) const;

  // Coefficients reduced modulo p (requires an integral polynomial).
  std::vector<mpz_class> residue_coefficients() const;

  std::string str() const;

  friend bool operator==(const PadicPoly&, const PadicPoly&) = default;

 private:
  void normalize();

  Prime p_;
  int precision_;
  std::vector<PadicScalar> coeffs_;
};

// Gauss norm exponent of f: the least coefficient valuation.
inline Valuation gauss_norm(const PadicPoly& f) { return f.gauss_norm(); }

// Evaluates f at x; throws kPrecisionExhausted when no digit of the result,
// not even its residue, survives.
PadicScalar poly_eval(const PadicPoly& f, const PadicScalar& x);

// Roots of f modulo p, by exhaustion over F_p.
std::vector<mpz_class> residue_roots(const PadicPoly& f);

// Lifts a simple root r0 of f mod p to a root in Z_p at the precision the
// coefficients support. Throws kPreconditionViolation when r0 is not a simple
// residue root.
PadicScalar hensel_lift(const PadicPoly& f, const mpz_class& r0);

}  // namespace padicla
