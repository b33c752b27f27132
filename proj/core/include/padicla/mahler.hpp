#pragma once

#include <optional>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/rational.hpp"
#include "padicla/residue.hpp"

namespace padicla {

// Coefficients a_0..a_M of f = sum a_n C(x, n). `tail_bound` asserts
// val(a_n) >= tail_bound for n > M; an infinite bound says the tail vanishes,
// i.e. f is a polynomial.
struct MahlerSeries {
  Prime p = 2;
  std::vector<PadicScalar> coefficients;
  std::optional<Valuation> tail_bound;
};

// a_n = (Δ^n f)(0) from the samples f(0..M).
MahlerSeries mahler_transform(const std::vector<PadicScalar>& samples);

// sum a_n C(x, n) at the integer x >= 0.
PadicScalar mahler_evaluate(const MahlerSeries& series, unsigned long x);

// (Δf)(k) = f(k+1) - f(k).
std::vector<PadicScalar> forward_difference(const std::vector<PadicScalar>& samples);

enum class Verdict { kYes, kNo, kInconclusive };

// Level h: f is analytic on every coset a + p^h Z_p, detected by the decay
// rate rho of the coefficients beating the slope 1/((p-1) p^h).
struct AnalyticityReport {
  std::optional<int> level;
  // rho - 1/((p-1)p^level); none when the decay is unbounded (polynomials,
  // zero).
  std::optional<Rational> margin;
  // Measured decay rate; none when unbounded.
  std::optional<Rational> decay;
  bool inconclusive() const { return !level.has_value(); }
};

// The decay rate is the least (val(a_n) - c0)/n over the upper half
// (M/2, M] of the coefficients (and the tail bound, if finite), with c0 the
// least coefficient valuation. A coefficient that is zero at precision k
// counts as valuation k, so missing digits never certify decay. Levels are
// searched up to log_p M; beyond that the verdict is inconclusive.
AnalyticityReport amice_level(const MahlerSeries& series);

struct AnalyticVectorsReport {
  Verdict mahler = Verdict::kInconclusive;
  // Largest component level, when every component is conclusive.
  std::optional<int> level;
  // (g^(p^m) - 1) v ∈ pL, and the same at m + 1.
  bool lattice_at_m = false;
  bool lattice_at_next = false;
  // The Mahler verdict at m implies the lattice criterion at m + 1.
  bool consistent = true;
  std::size_t samples = 0;
};

// Orbit k -> g^k v for k = 0..M, analysed componentwise. With no explicit
// sample count, M is the larger of min(64, max(2, N/2)) for N the orbit's
// absolute precision and 4 p^m, so that level m is within reach.
AnalyticVectorsReport analytic_vectors(const BoundedOperator& g, const std::vector<PadicScalar>& v,
                                       int m, std::optional<std::size_t> samples = std::nullopt);

// An element of the commuting algebra A acting on functions Z/p^j -> Z/p^N.
struct AGenerator {
  enum class Kind { kShift, kConvolution, kScalar, kCharacter, kMatrix };
  Kind kind = Kind::kScalar;
  // kShift: translation by `shift`.
  long shift = 0;
  // kConvolution: f -> sum_y weights[y] f(. + y).
  std::vector<mpz_class> weights;
  // kScalar: multiplication by `value`; kCharacter: multiplication by
  // x -> value^x.
  mpz_class value = 1;
  // kMatrix: explicit p^j x p^j matrix on the basis of point masses.
  std::optional<ResidueMatrix> matrix;
};

// Toy admissible representation: W^o/p^N modelled by functions on Z/p^j with
// Z_p acting by translation.
struct ToyAdmissible {
  Prime p = 2;
  int j = 1;
  int coefficient_exponent = 1;
  std::vector<AGenerator> generators;
  // K' = p^m Z_p.
  int k_level = 0;
  // Analytic sublattice level.
  int analytic_level = 0;
  // Declared bound on the rank of the K'-invariants.
  std::optional<long> invariant_bound;
};

// Translation f -> f(. + 1) on the point-mass basis, modulo p^n.
ResidueMatrix toy_translation(Prime p, int j, int n);
// Matrix of an A-generator modulo p^n.
ResidueMatrix toy_generator_matrix(const ToyAdmissible& model, const AGenerator& g, int n);

struct OclaReport {
  long invariant_rank = 0;
  long analytic_rank = 0;
  // Every basis vector of the analytic sublattice passes the Mahler test at
  // the analytic level.
  bool analytic_confirmed = false;
  // A-image on the analytic sublattice factors through the image on the
  // invariants.
  bool factors = false;
  long closure_rank = 0;
  long closure_log_size = 0;
  long joint_log_size = 0;
  // Generator restrictions to the invariants, in the Howell basis.
  std::vector<ResidueMatrix> restricted_generators;
};

// Throws kModelNotAdmissible when A does not commute with translation or the
// invariant rank exceeds the declared bound, kPreconditionViolation when
// j < n + m or the levels are inconsistent.
OclaReport ocla_harness(const ToyAdmissible& model, int n);

}  // namespace padicla
