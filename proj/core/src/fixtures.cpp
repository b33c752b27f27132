#include "padicla/fixtures.hpp"

#include <gmpxx.h>

#include <map>

#include "padicla/error.hpp"
#include "padicla/random.hpp"

namespace padicla {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t d = a.size();
  IntMatrix c(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

BoundedOperator from_matrix(const TruncatedSpace& space, const IntMatrix& m, int precision) {
  std::vector<PadicScalar> entries;
  for (const auto& row : m)
    for (const auto& x : row) entries.push_back(PadicScalar::from_integer(x, space.prime(), precision));
  return BoundedOperator(space, std::move(entries));
}

}  // namespace

BoundedOperator make_translation(Prime p, std::size_t degree, int precision) {
  const std::size_t d = degree + 1;
  IntMatrix m(d, std::vector<mpz_class>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      mpz_bin_uiui(m[i][j].get_mpz_t(), j, i);
    }
  }
  return from_matrix(TruncatedSpace::polynomials(p, degree), m, precision);
}

BoundedOperator make_random_nilres(Prime p, std::size_t d, std::uint64_t seed, int precision) {
  require(d >= 1, ErrorCode::kPreconditionViolation, "dimension must be positive");
  Rng rng(seed);
  const auto q = static_cast<std::int64_t>(p);
  IntMatrix core(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::int64_t r = rng.range(-q, q);
      core[i][j] = q * r;
      if (j > i) core[i][j] += rng.range(0, q - 1);
    }
  }
  // P = I + L with L strictly lower triangular, so P^-1 = sum (-L)^k.
  IntMatrix lower(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) lower[i][j] = rng.range(-2, 2);
  IntMatrix pm(d, std::vector<mpz_class>(d, 0)), inv(d, std::vector<mpz_class>(d, 0));
  IntMatrix term(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    pm[i][i] = 1;
    term[i][i] = 1;
  }
  IntMatrix neg = lower;
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) inv[i][j] += term[i][j];
    term = multiply(term, neg);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) pm[i][j] += lower[i][j];
  return from_matrix(TruncatedSpace::standard(p, d), multiply(multiply(pm, core), inv), precision);
}

BoundedOperator make_random_unipotent(Prime p, std::size_t d, std::uint64_t seed, int precision) {
  const BoundedOperator n = make_random_nilres(p, d, seed, precision);
  return n + BoundedOperator::identity(n.space(), precision);
}

}  // namespace padicla

namespace padicla {

namespace {

IntMatrix2 mul2(const IntMatrix2& a, const IntMatrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

constexpr IntMatrix2 kIdentity2 = {1, 0, 0, 1};

}  // namespace

GroupTraceFixture group_trace_from_matrices(Prime p, const std::vector<IntMatrix2>& faithful,
                                            const std::vector<IntMatrix2>& traced,
                                            std::size_t sigma_star_generator, int precision) {
  require(faithful.size() == traced.size() && sigma_star_generator < faithful.size(),
          ErrorCode::kPreconditionViolation, "generator lists do not match");
  constexpr std::size_t kMaxOrder = 512;
  std::vector<IntMatrix2> elements = {kIdentity2};
  std::vector<IntMatrix2> images = {kIdentity2};
  std::map<IntMatrix2, std::size_t> index = {{kIdentity2, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < faithful.size(); ++g) {
      const IntMatrix2 next = mul2(elements[head], faithful[g]);
      const IntMatrix2 image = mul2(images[head], traced[g]);
      auto [it, fresh] = index.emplace(next, elements.size());
      if (fresh) {
        require(elements.size() < kMaxOrder, ErrorCode::kPreconditionViolation,
                "generated group is too large or infinite");
        elements.push_back(next);
        images.push_back(image);
      } else {
        require(images[it->second] == image, ErrorCode::kPreconditionViolation,
                "traced matrices do not define a homomorphism");
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(mul2(elements[a], elements[b]));

  GroupTraceFixture fx{{FiniteGroupTable(std::move(table)), {}, 0}, images, {}};
  for (const auto& m : images) {
    fx.trace.values.push_back(PadicScalar::from_integer(m[0] + m[3], p, precision));
  }
  for (const auto& g : faithful) fx.generator_elements.push_back(index.at(g));
  fx.trace.sigma_star = fx.generator_elements[sigma_star_generator];
  return fx;
}

GroupTraceFixture make_group_trace(const std::string& kind, Prime p, int precision) {
  if (kind == "s3-standard") {
    require(p >= 5, ErrorCode::kUnsupportedPrime, "s3-standard needs p >= 5");
    // Transposition and 3-cycle on the root lattice of A2.
    const std::vector<IntMatrix2> gens = {{0, 1, 1, 0}, {0, -1, 1, -1}};
    return group_trace_from_matrices(p, gens, gens, 0, precision);
  }
  if (kind == "char-sum" || kind == "char-sum-trivial") {
    const std::vector<IntMatrix2> gens = {{1, 0, 0, -1}, {-1, 0, 0, -1}};
    const std::vector<IntMatrix2> trivial = {kIdentity2, kIdentity2};
    return group_trace_from_matrices(p, gens, kind == "char-sum" ? gens : trivial, 0, precision);
  }
  if (kind == "dihedral") {
    require(p != 2, ErrorCode::kUnsupportedPrime, "dihedral fixture needs p odd");
    const std::vector<IntMatrix2> gens = {{1, 0, 0, -1}, {0, -1, 1, 0}};
    return group_trace_from_matrices(p, gens, gens, 0, precision);
  }
  fail(ErrorCode::kPreconditionViolation, "unknown group-trace kind '" + kind + "'");
}

ToyAdmissible make_toy_admissible(Prime p, int j, std::uint64_t seed) {
  require(j >= 1, ErrorCode::kPreconditionViolation, "j must be >= 1");
  Rng rng(seed);
  ToyAdmissible t;
  t.p = p;
  t.j = j;
  t.coefficient_exponent = 3;
  t.k_level = static_cast<int>(rng.range(0, j - 1));
  t.analytic_level = static_cast<int>(rng.range(0, t.k_level));
  AGenerator shift;
  shift.kind = AGenerator::Kind::kShift;
  shift.shift = static_cast<long>(rng.range(0, 3));
  AGenerator conv;
  conv.kind = AGenerator::Kind::kConvolution;
  const auto width = rng.range(1, 3);
  for (std::int64_t y = 0; y < width; ++y) conv.weights.push_back(static_cast<long>(rng.range(0, 4)));
  t.generators = {shift, conv};
  return t;
}

}  // namespace padicla
