#pragma once

#include <optional>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/poly.hpp"
#include "padicla/residue.hpp"

namespace padicla {

enum class WitnessMode { kCharpoly, kPower, kMinimalPolyLift };

// Evidence that f(T)(L) ⊆ p^k L for a monic integral f, with k >= 1. This is
// the defining property of a locally analytic operator.
struct LocAnCertificate {
  PadicPoly witness_poly{2};
  // Largest k (up to the tracked precision) with f(T)(L) ⊆ p^k L.
  std::int64_t verified_exponent = 0;
  WitnessMode mode = WitnessMode::kCharpoly;
  // Set when T is an approximate truncation; the certificate then says
  // nothing about the untruncated operator.
  bool truncation_only = false;
};

// f(T) by Horner's rule.
BoundedOperator poly_apply(const PadicPoly& f, const BoundedOperator& t);

struct NilpotencyReport {
  bool top_nilpotent = false;
  // Nilpotency index of T mod p when top_nilpotent.
  std::optional<int> index;
  bool truncation_only = false;
};

// On a truncation T is topologically nilpotent iff T mod p is nilpotent.
NilpotencyReport is_top_nilpotent(const BoundedOperator& t);

// Least n <= dim * p with T^n(L) ⊆ pL, found by repeated composition.
std::optional<int> locan_degree(const BoundedOperator& t);

// Division-free (Berkowitz) characteristic polynomial det(X - T).
PadicPoly characteristic_polynomial(const BoundedOperator& t);

// Witness f = charpoly(T); f(T) = 0 by Cayley–Hamilton.
LocAnCertificate charpoly_witness(const BoundedOperator& t);
// Witness f = X^n with n = locan_degree(T); throws kPreconditionViolation when
// T^n never lands in pL.
LocAnCertificate power_witness(const BoundedOperator& t);
// Witness f = integer lift of the minimal polynomial of T mod p.
LocAnCertificate minimal_poly_witness(const BoundedOperator& t);

// Re-checks f monic integral and f(T)(L) ⊆ pL.
bool verify_certificate(const LocAnCertificate& cert, const BoundedOperator& t);

// Monic minimal polynomial over F_p of a residue matrix mod p, low degree first.
std::vector<mpz_class> residue_minimal_polynomial(const ResidueOperator& r);

// Evaluates a polynomial with F_p coefficients (low degree first) at r.
ResidueOperator residue_poly_apply(const std::vector<mpz_class>& g, const ResidueOperator& r);

struct NilpotentDecomposition {
  int k = 0;
  // g with f = X^k g mod p and g(0) != 0, low degree first.
  std::vector<mpz_class> g;
};

// Splits f mod p = X^k g(X), checks g(T) is invertible mod p and concludes
// T^k ≡ 0 on L/pL. Throws kGNotInvertible when g(T mod p) is singular, which
// means T is not topologically nilpotent on the truncation.
NilpotentDecomposition nilpotent_decompose(const BoundedOperator& t, const PadicPoly& f);

// Image of the unital algebra generated by some operators in End(L/p^n L).
struct AlgebraImage {
  int exponent = 1;
  std::vector<ResidueOperator> generators;
  // Howell basis of the image, as matrices.
  std::vector<ResidueOperator> closure_basis;
  // Minimal number of generators of the image as a Z/p^n-module.
  long rank = 0;
  // log_p of the number of elements of the image.
  long log_size = 0;
  // log_p of the bound (p^n)^rank.
  long size_bound_log = 0;
};

AlgebraImage algebra_closure(const TruncatedSpace& space,
                             const std::vector<BoundedOperator>& gens, int n);
AlgebraImage algebra_closure(Prime p, int n, std::size_t dimension,
                             const std::vector<ResidueOperator>& gens);

struct FiltrationCheck {
  // Howell basis size of I_1 = {a in the image : a L ⊆ pL}.
  std::size_t kernel_generators = 0;
  long kernel_rank = 0;
  std::size_t products_checked = 0;
};

// Checks that every product of n elements of I_1 kills L/p^n L. Throws
// kCounterexampleFound naming the offending product otherwise.
FiltrationCheck noela_filtration_check(const TruncatedSpace& space,
                                       const std::vector<BoundedOperator>& gens, int n);

}  // namespace padicla
