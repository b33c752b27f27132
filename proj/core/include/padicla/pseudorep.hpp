#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicla/poly.hpp"
#include "padicla/scalar.hpp"

namespace padicla {

// Multiplication table of a finite group on elements 0..g-1.
class FiniteGroupTable {
 public:
  // Validates closure, identity, inverses and associativity; throws
  // kPreconditionViolation naming the failed law.
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

// a + b ε in Z_p[ε]/(ε²), each part carrying its own precision.
class DualScalar {
 public:
  DualScalar(PadicScalar a, PadicScalar b);
  static DualScalar from_integer(const mpz_class& n, Prime p, int precision = kDefaultPrecision);
  static DualScalar epsilon(Prime p, int precision = kDefaultPrecision);

  const PadicScalar& real() const { return a_; }
  const PadicScalar& dual() const { return b_; }
  Prime prime() const { return a_.prime(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_unit() const { return a_.is_unit(); }
  // Order in the maximal ideal (p, ε): min of the part valuations.
  Valuation valuation() const;
  DualScalar inverse() const;

  DualScalar operator-() const { return {-a_, -b_}; }
  friend DualScalar operator+(const DualScalar& x, const DualScalar& y);
  friend DualScalar operator-(const DualScalar& x, const DualScalar& y);
  friend DualScalar operator*(const DualScalar& x, const DualScalar& y);
  friend bool operator==(const DualScalar&, const DualScalar&) = default;
  bool congruent(const DualScalar& o) const { return (*this - o).is_zero(); }
  std::string str() const;

 private:
  PadicScalar a_;
  PadicScalar b_;
};

// Minimal number of generators of the ideal spanned by `xs` (0 for the zero
// ideal). Over Z_p every ideal is principal.
long ideal_generator_count(const std::vector<PadicScalar>& xs);
long ideal_generator_count(const std::vector<DualScalar>& xs);

template <class R>
struct TraceFunction {
  FiniteGroupTable group;
  std::vector<R> values;
  std::size_t sigma_star = 0;
};

struct TraceValidation {
  bool valid = true;
  // Name of the first failed axiom: "dimension", "symmetry", "oddness",
  // "determinant".
  std::string axiom;
  // Offending element or pair.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string message;
};

// Checks T(1) = 2, T(στ) = T(τσ), T(σ*) = 0 with σ*² = 1, and the degree-2
// determinant identity in the form
// 2T(σ)T(τ) - 2T(στ) - (T(σ)² - T(σ²)) T(σ⁻¹τ) = 0.
template <class R>
TraceValidation validate_trace(const TraceFunction<R>& t);

template <class R>
struct SplitData {
  std::vector<R> a;
  std::vector<R> d;
  // x(σ, τ) at index σ * order + τ.
  std::vector<R> x;
  std::size_t order = 0;
  const R& at(std::size_t s, std::size_t t) const { return x[s * order + t]; }
};

// a(σ) = (T(σ*σ) + T(σ))/2, d = T - a, x(σ, τ) = a(στ) - a(σ)a(τ).
// Throws kEvenPrime at p = 2 and kPreconditionViolation for invalid traces.
template <class R>
SplitData<R> odd_split(const TraceFunction<R>& t);

template <class R>
struct ReducibilityReport {
  struct Generator {
    std::size_t sigma;
    std::size_t tau;
    R value;
  };
  std::vector<Generator> generators;
  // Every x vanishes at the tracked precision.
  bool reducible_at_precision = true;
  // Least valuation of a nonzero x: the representation is reducible modulo
  // p^k for k up to this value and irreducible over the fraction field.
  std::optional<Valuation> min_valuation;
  long generator_count = 0;
  bool principal() const { return generator_count <= 1; }
};

template <class R>
ReducibilityReport<R> reducibility_ideal(const SplitData<R>& s);

template <class R>
using Matrix2 = std::array<R, 4>;  // row major

template <class R>
struct Reconstruction {
  std::size_t sigma0 = 0;
  std::size_t tau0 = 0;
  std::vector<Matrix2<R>> matrices;
  bool multiplicative = false;
  bool trace_matches = false;
  bool determinant_matches = false;
  bool verified() const { return multiplicative && trace_matches && determinant_matches; }
};

// First pair (σ0, τ0) in lexicographic order with x(σ0, τ0) a unit.
template <class R>
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const SplitData<R>& s);

// R(σ) = [[a(σ), x(σ,τ0)/x(σ0,τ0)], [x(σ0,σ), d(σ)]], then checks it.
// Throws kPivotNotInvertible when x(σ0, τ0) is not a unit.
template <class R>
Reconstruction<R> reconstruct(const TraceFunction<R>& t, const SplitData<R>& s, std::size_t sigma0,
                              std::size_t tau0);

// X² - l⁻¹T_l X + l⁻¹S_l; throws kLEqualsP when l = p.
PadicPoly hecke_charpoly(const PadicScalar& t_l, const PadicScalar& s_l, unsigned long l);

}  // namespace padicla
