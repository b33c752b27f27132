#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicla/residue.hpp"
#include "padicla/scalar.hpp"

namespace padicla {

// A finite orthonormal truncation of a p-adic Banach space. An optional
// filtration assigns each basis vector a level; operators preserving it
// commute with truncation.
class TruncatedSpace {
 public:
  TruncatedSpace(Prime p, std::vector<std::string> basis_labels,
                 std::optional<std::vector<int>> filtration = std::nullopt);

  // Basis labelled "e0".."e{d-1}", no filtration.
  static TruncatedSpace standard(Prime p, std::size_t dimension);
  // Monomials X^0..X^degree, filtered by degree.
  static TruncatedSpace polynomials(Prime p, std::size_t degree);

  Prime prime() const { return p_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<int>>& filtration() const { return filtration_; }

  friend bool operator==(const TruncatedSpace&, const TruncatedSpace&) = default;

 private:
  Prime p_;
  std::vector<std::string> labels_;
  std::optional<std::vector<int>> filtration_;
};

enum class Exactness { kFiltrationExact, kApproximate };

// A linear map on a TruncatedSpace; column j of the matrix is the image of
// basis vector j. Because the basis is orthonormal the operator norm is the
// largest entry norm, so norm <= 1 means every entry is integral.
class BoundedOperator {
 public:
  // Throws kPreconditionViolation if `exactness` claims filtration-exactness
  // but the matrix moves some vector to a higher filtration level.
  BoundedOperator(TruncatedSpace space, std::vector<PadicScalar> row_major,
                  Exactness exactness = Exactness::kFiltrationExact);

  static BoundedOperator identity(const TruncatedSpace& space,
                                  int precision = kDefaultPrecision);
  static BoundedOperator zero(const TruncatedSpace& space, int precision = kDefaultPrecision);
  static BoundedOperator from_integers(const TruncatedSpace& space,
                                       const std::vector<std::vector<long>>& rows,
                                       int precision = kDefaultPrecision);

  const TruncatedSpace& space() const { return space_; }
  Prime prime() const { return space_.prime(); }
  std::size_t dimension() const { return space_.dimension(); }
  Exactness exactness() const { return exactness_; }
  bool is_exact() const { return exactness_ == Exactness::kFiltrationExact; }
  const PadicScalar& at(std::size_t i, std::size_t j) const { return a_[i * dimension() + j]; }
  const std::vector<PadicScalar>& entries() const { return a_; }

  friend BoundedOperator operator+(const BoundedOperator& a, const BoundedOperator& b);
  friend BoundedOperator operator-(const BoundedOperator& a, const BoundedOperator& b);
  BoundedOperator operator*(const PadicScalar& c) const;
  // Multiplication by p^k (k < 0 divides by p without losing digits).
  BoundedOperator shifted(std::int64_t k) const;
  BoundedOperator power(unsigned long k) const;
  std::vector<PadicScalar> apply(const std::vector<PadicScalar>& v) const;

  // True iff every entry of the difference is zero at the tracked precision.
  bool congruent(const BoundedOperator& other) const;
  bool is_zero() const;
  // Smallest absolute precision among the entries.
  std::int64_t absolute_precision() const;
  // Largest relative precision among the entries; the precision used for
  // freshly built identities and zeros on the same space.
  int working_precision() const;

 private:
  TruncatedSpace space_;
  std::vector<PadicScalar> a_;
  Exactness exactness_;
};

// Exponent m of the operator norm p^(-m): the least entry valuation.
Valuation op_norm(const BoundedOperator& t);

// t ∘ s. The result is approximate unless both factors are filtration-exact.
BoundedOperator compose(const BoundedOperator& t, const BoundedOperator& s);

// Entrywise reduction modulo p^n; throws kNormExceedsOne unless op_norm <= 1.
ResidueOperator reduce(const BoundedOperator& t, int n);

// True iff t(L) ⊆ p^k L on the truncation.
bool certify_image(const BoundedOperator& t, std::int64_t k);

// Restriction of a filtration-exact operator to the sub-truncation spanned by
// the basis vectors of level <= max_level.
BoundedOperator restrict_to_level(const BoundedOperator& t, int max_level);

}  // namespace padicla
