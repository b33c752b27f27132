#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/rational.hpp"

namespace padicla {

// Commuting lattice automorphisms g_1..g_k giving a Z_p^k-action; the
// Iwasawa algebra acts through T_i = g_i - 1.
class GroupActionSpec {
 public:
  // Throws kNoncommutingGenerators, kNormExceedsOne, or
  // kPreconditionViolation (residue not invertible).
  explicit GroupActionSpec(std::vector<BoundedOperator> generators);

  std::size_t rank() const { return g_.size(); }
  const TruncatedSpace& space() const { return g_.front().space(); }
  const std::vector<BoundedOperator>& generators() const { return g_; }
  const std::vector<BoundedOperator>& t_operators() const { return t_; }

 private:
  std::vector<BoundedOperator> g_;
  std::vector<BoundedOperator> t_;
};

// Least n with T_i^n(L) ⊆ pL for every i; none when some T_i is not
// topologically nilpotent on the truncation.
std::optional<int> minimal_uniform_exponent(const GroupActionSpec& action);

// Exponents (a, b) of a monomial U^a S^b, with U_i standing for T_i^n / p
// and S_i for T_i.
struct PolydiscMonomial {
  std::vector<unsigned> u;
  std::vector<unsigned> s;
  friend auto operator<=>(const PolydiscMonomial&, const PolydiscMonomial&) = default;
};

// A finite element of Q_p<U_1..U_k, S_1..S_k>.
class PolydiscFunction {
 public:
  PolydiscFunction(Prime p, std::size_t k, int precision = kDefaultPrecision);

  static PolydiscFunction constant(const PadicScalar& c, std::size_t k);
  static PolydiscFunction u(std::size_t i, std::size_t k, Prime p,
                            int precision = kDefaultPrecision);
  static PolydiscFunction s(std::size_t i, std::size_t k, Prime p,
                            int precision = kDefaultPrecision);

  Prime prime() const { return p_; }
  std::size_t k() const { return k_; }
  int precision() const { return precision_; }
  const std::map<PolydiscMonomial, PadicScalar>& terms() const { return terms_; }
  void add_term(const PolydiscMonomial& m, const PadicScalar& c);

  // Least coefficient valuation (Gauss norm p^-m).
  Valuation gauss_norm() const;
  bool is_integral() const;

  friend PolydiscFunction operator+(const PolydiscFunction& a, const PolydiscFunction& b);
  friend PolydiscFunction operator*(const PolydiscFunction& a, const PolydiscFunction& b);

 private:
  Prime p_;
  std::size_t k_;
  int precision_;
  std::map<PolydiscMonomial, PadicScalar> terms_;
};

// Substitutes U_i -> T_i^n / p and S_i -> T_i. Throws kExponentTooSmall when
// some T_i^n is not divisible by p, kPreconditionViolation for non-integral
// f, and kPrecisionExhausted when no digit of the result survives.
BoundedOperator polydisc_eval(const PolydiscFunction& f, const GroupActionSpec& action, int n);

struct PowerFixReport {
  // (g - 1)^(p^m) maps L into pL.
  bool certificate = false;
  // g^(p^m) acts trivially on L/pL.
  bool fixes_residue = false;
  bool holds() const { return certificate && fixes_residue; }
};

// Throws kImplicationViolated if the certificate holds but g^(p^m) does not
// fix L/pL.
PowerFixReport power_fix_certificate(const BoundedOperator& g, int m);

// Eigenvalues of a commuting family, one per operator.
struct EigenSystem {
  std::vector<PadicScalar> eigenvalues;
  std::vector<mpz_class> signature() const;
};

// Joint systems read off the diagonals of an upper triangular family, one
// per diagonal position (with repeats).
std::vector<EigenSystem> triangular_eigen_systems(const std::vector<BoundedOperator>& family);
// Joint systems through the simple residue roots of the first operator's
// characteristic polynomial, Hensel lifted, with the remaining eigenvalues
// read off an eigenvector.
std::vector<EigenSystem> simple_eigen_systems(const std::vector<BoundedOperator>& family);

// True iff some primitive v in L has t_i v ≡ λ_i v mod p^M for all i.
bool system_appears(const std::vector<BoundedOperator>& family, const EigenSystem& system, int m);

// Least n such that (t_i - c_i)^n kills the joint generalized eigenspace of
// `signature` mod p, for every i. Throws kPreconditionViolation when the
// signature does not occur.
int localized_exponent(const std::vector<BoundedOperator>& family,
                       const std::vector<mpz_class>& signature);

struct CongruenceReport {
  std::vector<Valuation> differences;
  Rational kappa;
  bool passes = false;
  Valuation kappa_observed = Valuation::infinity(0);
};

// Throws kResidueMismatch when the signatures differ (the statement is then
// vacuous) and kPreconditionViolation when a system does not appear.
CongruenceReport congruence_check(const std::vector<BoundedOperator>& family,
                                  const EigenSystem& lambda, const EigenSystem& lambda_prime,
                                  const Rational& kappa);

}  // namespace padicla
