#include "padicla/banach.hpp"

#include <algorithm>
#include <set>

#include "padicla/error.hpp"

namespace padicla {

TruncatedSpace::TruncatedSpace(Prime p, std::vector<std::string> basis_labels,
                               std::optional<std::vector<int>> filtration)
    : p_(p), labels_(std::move(basis_labels)), filtration_(std::move(filtration)) {
  require(is_prime(p_), ErrorCode::kPreconditionViolation,
          std::to_string(p_) + " is not prime");
  require(!labels_.empty(), ErrorCode::kPreconditionViolation, "dimension must be >= 1");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), ErrorCode::kPreconditionViolation,
          "basis labels must be distinct");
  if (filtration_) {
    const auto& f = *filtration_;
    require(f.size() == labels_.size(), ErrorCode::kPreconditionViolation,
            "filtration length must match the dimension");
    for (std::size_t i = 0; i < f.size(); ++i) {
      require(f[i] >= 0, ErrorCode::kPreconditionViolation, "filtration levels must be >= 0");
      require(i == 0 || f[i - 1] <= f[i], ErrorCode::kPreconditionViolation,
              "filtration levels must be nondecreasing");
    }
  }
}

TruncatedSpace TruncatedSpace::standard(Prime p, std::size_t dimension) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dimension; ++i) labels.push_back("e" + std::to_string(i));
  return TruncatedSpace(p, std::move(labels));
}

TruncatedSpace TruncatedSpace::polynomials(Prime p, std::size_t degree) {
  std::vector<std::string> labels;
  std::vector<int> levels;
  for (std::size_t i = 0; i <= degree; ++i) {
    labels.push_back("X^" + std::to_string(i));
    levels.push_back(static_cast<int>(i));
  }
  return TruncatedSpace(p, std::move(labels), std::move(levels));
}

BoundedOperator::BoundedOperator(TruncatedSpace space, std::vector<PadicScalar> row_major,
                                 Exactness exactness)
    : space_(std::move(space)), a_(std::move(row_major)), exactness_(exactness) {
  const std::size_t d = space_.dimension();
  require(a_.size() == d * d, ErrorCode::kPreconditionViolation,
          "operator matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  for (const auto& x : a_) {
    require(x.prime() == space_.prime(), ErrorCode::kPrimeMismatch, "operator entry prime");
  }
  if (exactness_ == Exactness::kFiltrationExact && space_.filtration()) {
    const auto& f = *space_.filtration();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        require(f[i] <= f[j] || at(i, j).is_zero(), ErrorCode::kPreconditionViolation,
                "filtration-exact operator has a nonzero entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") raising the filtration level");
      }
    }
  }
}

BoundedOperator BoundedOperator::identity(const TruncatedSpace& space, int precision) {
  const std::size_t d = space.dimension();
  std::vector<PadicScalar> a(d * d, PadicScalar::zero(space.prime(), precision));
  for (std::size_t i = 0; i < d; ++i) a[i * d + i] = PadicScalar::one(space.prime(), precision);
  return BoundedOperator(space, std::move(a));
}

BoundedOperator BoundedOperator::zero(const TruncatedSpace& space, int precision) {
  const std::size_t d = space.dimension();
  return BoundedOperator(space,
                         std::vector<PadicScalar>(d * d, PadicScalar::zero(space.prime(), precision)));
}

BoundedOperator BoundedOperator::from_integers(const TruncatedSpace& space,
                                               const std::vector<std::vector<long>>& rows,
                                               int precision) {
  const std::size_t d = space.dimension();
  require(rows.size() == d, ErrorCode::kPreconditionViolation, "row count");
  std::vector<PadicScalar> a;
  a.reserve(d * d);
  for (const auto& row : rows) {
    require(row.size() == d, ErrorCode::kPreconditionViolation, "row length");
    for (long x : row) a.push_back(PadicScalar::from_integer(x, space.prime(), precision));
  }
  return BoundedOperator(space, std::move(a));
}

namespace {

Exactness combine(Exactness a, Exactness b) {
  return a == Exactness::kFiltrationExact && b == Exactness::kFiltrationExact
             ? Exactness::kFiltrationExact
             : Exactness::kApproximate;
}

void check_same_space(const BoundedOperator& a, const BoundedOperator& b) {
  require(a.space() == b.space(), ErrorCode::kSpaceMismatch,
          "operators act on different truncated spaces");
}

}  // namespace

BoundedOperator operator+(const BoundedOperator& a, const BoundedOperator& b) {
  check_same_space(a, b);
  std::vector<PadicScalar> c;
  c.reserve(a.a_.size());
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.push_back(a.a_[i] + b.a_[i]);
  return BoundedOperator(a.space_, std::move(c), combine(a.exactness_, b.exactness_));
}

BoundedOperator operator-(const BoundedOperator& a, const BoundedOperator& b) {
  check_same_space(a, b);
  std::vector<PadicScalar> c;
  c.reserve(a.a_.size());
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.push_back(a.a_[i] - b.a_[i]);
  return BoundedOperator(a.space_, std::move(c), combine(a.exactness_, b.exactness_));
}

BoundedOperator BoundedOperator::operator*(const PadicScalar& c) const {
  std::vector<PadicScalar> r;
  r.reserve(a_.size());
  for (const auto& x : a_) r.push_back(x * c);
  return BoundedOperator(space_, std::move(r), exactness_);
}

BoundedOperator BoundedOperator::shifted(std::int64_t k) const {
  std::vector<PadicScalar> r;
  r.reserve(a_.size());
  for (const auto& x : a_) r.push_back(x.shifted(k));
  return BoundedOperator(space_, std::move(r), exactness_);
}

BoundedOperator BoundedOperator::power(unsigned long k) const {
  if (k == 0) return identity(space_, working_precision());
  std::optional<BoundedOperator> result;
  BoundedOperator base = *this;
  while (k > 0) {
    if (k & 1UL) result = result ? compose(*result, base) : base;
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return *result;
}

int BoundedOperator::working_precision() const {
  int n = 0;
  for (const auto& x : a_) n = std::max(n, x.relative_precision());
  if (n > 0) return n;
  return static_cast<int>(std::max<std::int64_t>(1, absolute_precision()));
}

std::vector<PadicScalar> BoundedOperator::apply(const std::vector<PadicScalar>& v) const {
  const std::size_t d = dimension();
  require(v.size() == d, ErrorCode::kSpaceMismatch, "vector length");
  std::vector<PadicScalar> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    PadicScalar acc = at(i, 0) * v[0];
    for (std::size_t j = 1; j < d; ++j) acc += at(i, j) * v[j];
    out.push_back(acc);
  }
  return out;
}

bool BoundedOperator::congruent(const BoundedOperator& other) const {
  return (*this - other).is_zero();
}

bool BoundedOperator::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const PadicScalar& x) { return x.is_zero(); });
}

std::int64_t BoundedOperator::absolute_precision() const {
  std::int64_t m = a_.front().absolute_precision();
  for (const auto& x : a_) m = std::min(m, x.absolute_precision());
  return m;
}

Valuation op_norm(const BoundedOperator& t) {
  Valuation m = t.entries().front().valuation();
  for (const auto& x : t.entries()) m = min(m, x.valuation());
  return m;
}

BoundedOperator compose(const BoundedOperator& t, const BoundedOperator& s) {
  check_same_space(t, s);
  const std::size_t d = t.dimension();
  std::vector<PadicScalar> c;
  c.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      PadicScalar acc = t.at(i, 0) * s.at(0, j);
      for (std::size_t k = 1; k < d; ++k) acc += t.at(i, k) * s.at(k, j);
      c.push_back(acc);
    }
  }
  return BoundedOperator(t.space(), std::move(c), combine(t.exactness(), s.exactness()));
}

ResidueOperator reduce(const BoundedOperator& t, int n) {
  require(op_norm(t).at_least(0), ErrorCode::kNormExceedsOne,
          "operator norm exceeds 1, so the unit ball is not stable");
  const std::size_t d = t.dimension();
  ResidueOperator r(t.prime(), n, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) r.set(i, j, t.at(i, j).residue(n));
  }
  return r;
}

bool certify_image(const BoundedOperator& t, std::int64_t k) {
  return op_norm(t).at_least(k);
}

BoundedOperator restrict_to_level(const BoundedOperator& t, int max_level) {
  const auto& space = t.space();
  require(t.is_exact() && space.filtration().has_value(), ErrorCode::kPreconditionViolation,
          "restriction needs a filtration-exact operator");
  const auto& f = *space.filtration();
  std::size_t keep = 0;
  while (keep < f.size() && f[keep] <= max_level) ++keep;
  require(keep > 0, ErrorCode::kPreconditionViolation, "restriction would be empty");
  TruncatedSpace sub(space.prime(),
                     std::vector<std::string>(space.labels().begin(),
                                              space.labels().begin() + static_cast<long>(keep)),
                     std::vector<int>(f.begin(), f.begin() + static_cast<long>(keep)));
  std::vector<PadicScalar> a;
  a.reserve(keep * keep);
  for (std::size_t i = 0; i < keep; ++i) {
    for (std::size_t j = 0; j < keep; ++j) a.push_back(t.at(i, j));
  }
  return BoundedOperator(std::move(sub), std::move(a), t.exactness());
}

}  // namespace padicla
