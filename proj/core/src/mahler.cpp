#include "padicla/mahler.hpp"

#include <algorithm>

#include "padicla/error.hpp"
#include "padicla/locan.hpp"

namespace padicla {

namespace {

std::int64_t valuation_bound(const PadicScalar& x) {
  return x.is_zero() ? x.absolute_precision() : x.valuation().value();
}

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<PadicScalar> forward_difference(const std::vector<PadicScalar>& samples) {
  std::vector<PadicScalar> out;
  if (samples.size() < 2) return out;
  out.reserve(samples.size() - 1);
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) out.push_back(samples[k + 1] - samples[k]);
  return out;
}

MahlerSeries mahler_transform(const std::vector<PadicScalar>& samples) {
  require(!samples.empty(), ErrorCode::kPreconditionViolation, "no samples");
  MahlerSeries s;
  s.p = samples.front().prime();
  std::vector<PadicScalar> row = samples;
  while (!row.empty()) {
    s.coefficients.push_back(row.front());
    row = forward_difference(row);
  }
  return s;
}

PadicScalar mahler_evaluate(const MahlerSeries& series, unsigned long x) {
  require(!series.coefficients.empty(), ErrorCode::kPreconditionViolation, "empty series");
  const int precision = std::max(1, series.coefficients.front().relative_precision());
  PadicScalar acc = series.coefficients.front();
  mpz_class binom = 1;
  const std::size_t top = std::min<std::size_t>(x, series.coefficients.size() - 1);
  for (std::size_t n = 1; n <= top; ++n) {
    // C(x, n) = C(x, n-1) (x - n + 1) / n, exact in Z.
    binom = binom * (x - n + 1) / n;
    acc += series.coefficients[n] * PadicScalar::from_integer(binom, series.p, precision);
  }
  return acc;
}

AnalyticityReport amice_level(const MahlerSeries& series) {
  AnalyticityReport rep;
  const auto& a = series.coefficients;
  if (series.tail_bound && series.tail_bound->is_infinite()) {
    rep.level = 0;  // finite Mahler expansion: a polynomial
    return rep;
  }
  std::optional<std::int64_t> c0;
  for (const auto& x : a) {
    if (!x.is_zero()) c0 = c0 ? std::min(*c0, x.valuation().value()) : x.valuation().value();
  }
  if (!c0) {
    // Every coefficient vanishes at its precision and nothing is asserted
    // beyond: the zero function at the tracked precision.
    if (!series.tail_bound) rep.level = 0;
    return rep;
  }
  const std::size_t m = a.size() - 1;
  if (m == 0 && !series.tail_bound) return rep;

  std::optional<Rational> rho;
  auto consider = [&rho](const Rational& r) { rho = rho ? std::min(*rho, r) : r; };
  for (std::size_t n = m / 2 + 1; n <= m; ++n) {
    consider(Rational(valuation_bound(a[n]) - *c0, static_cast<std::int64_t>(n)));
  }
  if (series.tail_bound) {
    consider(Rational(series.tail_bound->value() - *c0, static_cast<std::int64_t>(m + 1)));
  }
  rep.decay = rho;

  const auto p = static_cast<std::int64_t>(series.p);
  int top = 0;
  while (int_pow(p, top + 1) <= static_cast<std::int64_t>(std::max<std::size_t>(m, 1))) ++top;
  for (int h = 0; h <= top; ++h) {
    const Rational slope(1, (p - 1) * int_pow(p, h));
    if (*rho > slope) {
      rep.level = h;
      rep.margin = *rho - slope;
      break;
    }
  }
  return rep;
}

AnalyticVectorsReport analytic_vectors(const BoundedOperator& g, const std::vector<PadicScalar>& v,
                                       int m, std::optional<std::size_t> samples) {
  require(op_norm(g).at_least(0), ErrorCode::kNormExceedsOne, "g does not stabilize the lattice");
  require(reduce(g, 1).is_invertible(), ErrorCode::kPreconditionViolation,
          "g is not invertible mod p");
  require(v.size() == g.dimension(), ErrorCode::kSpaceMismatch, "vector length");
  require(m >= 0, ErrorCode::kPreconditionViolation, "level must be nonnegative");
  for (const auto& x : v) {
    require(x.is_integral(), ErrorCode::kNormExceedsOne, "vector is not in the lattice");
  }

  std::int64_t precision = g.absolute_precision();
  for (const auto& x : v) precision = std::min(precision, x.absolute_precision());
  // Level m is only testable with more than p^m samples; take a few periods.
  const std::size_t count =
      samples ? *samples
              : std::max(static_cast<std::size_t>(std::clamp<std::int64_t>(precision / 2, 2, 64)),
                         4 * prime_power(g.prime(), m).get_ui());

  AnalyticVectorsReport rep;
  rep.samples = count + 1;
  std::vector<std::vector<PadicScalar>> orbit = {v};
  for (std::size_t k = 0; k < count; ++k) orbit.push_back(g.apply(orbit.back()));

  bool conclusive = true;
  int level = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<PadicScalar> component;
    for (const auto& x : orbit) component.push_back(x[i]);
    const auto r = amice_level(mahler_transform(component));
    if (!r.level) {
      conclusive = false;
    } else {
      level = std::max(level, *r.level);
    }
  }
  if (conclusive) {
    rep.level = level;
    rep.mahler = level <= m ? Verdict::kYes : Verdict::kNo;
  }

  auto lattice = [&](int e) {
    const unsigned long q = prime_power(g.prime(), e).get_ui();
    const auto w = (g.power(q) - BoundedOperator::identity(g.space(), g.working_precision())).apply(v);
    return std::all_of(w.begin(), w.end(), [](const PadicScalar& x) { return x.valuation().at_least(1); });
  };
  rep.lattice_at_m = lattice(m);
  rep.lattice_at_next = lattice(m + 1);
  rep.consistent = rep.mahler != Verdict::kYes || rep.lattice_at_next;
  return rep;
}

ResidueMatrix toy_translation(Prime p, int j, int n) {
  const std::size_t d = prime_power(p, j).get_ui();
  ResidueMatrix t(p, n, d, d);
  for (std::size_t y = 0; y < d; ++y) t.set((y + d - 1) % d, y, 1);
  return t;
}

ResidueMatrix toy_generator_matrix(const ToyAdmissible& model, const AGenerator& g, int n) {
  const Prime p = model.p;
  const std::size_t d = prime_power(p, model.j).get_ui();
  const ResidueMatrix tau = toy_translation(p, model.j, n);
  auto shift = [&](long s) {
    const long dd = static_cast<long>(d);
    return tau.power(static_cast<unsigned long>(((s % dd) + dd) % dd));
  };
  switch (g.kind) {
    case AGenerator::Kind::kShift:
      return shift(g.shift);
    case AGenerator::Kind::kConvolution: {
      require(g.weights.size() <= d, ErrorCode::kPreconditionViolation,
              "more convolution weights than points");
      ResidueMatrix out(p, n, d, d);
      for (std::size_t y = 0; y < g.weights.size(); ++y) {
        out = out + shift(static_cast<long>(y)).scaled(g.weights[y]);
      }
      return out;
    }
    case AGenerator::Kind::kScalar:
      return ResidueMatrix::identity(p, n, d).scaled(g.value);
    case AGenerator::Kind::kCharacter: {
      ResidueMatrix out(p, n, d, d);
      mpz_class c = 1;
      for (std::size_t x = 0; x < d; ++x) {
        out.set(x, x, c);
        c = c * g.value % out.modulus();
      }
      return out;
    }
    case AGenerator::Kind::kMatrix:
      require(g.matrix && g.matrix->rows() == d && g.matrix->cols() == d &&
                  g.matrix->prime() == p && g.matrix->exponent() >= n,
              ErrorCode::kPreconditionViolation, "generator matrix does not fit the model");
      return g.matrix->reduced(n);
  }
  fail(ErrorCode::kPreconditionViolation, "unknown generator kind");
}

namespace {

ResidueMatrix restrict_to(const ZnModule& sub, const ResidueMatrix& a) {
  const std::size_t r = sub.rows().size();
  ResidueMatrix out(sub.prime(), sub.exponent(), r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto c = sub.coordinates(a.apply(sub.rows()[i].vec));
    for (std::size_t k = 0; k < r; ++k) out.set(k, i, c[k]);
  }
  return out;
}

ResidueMatrix block_diagonal(const ResidueMatrix& a, const ResidueMatrix& b) {
  const std::size_t r = a.rows(), s = b.rows();
  ResidueMatrix out(a.prime(), a.exponent(), r + s, r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out.set(r + i, r + j, b.at(i, j));
  return out;
}

}  // namespace

OclaReport ocla_harness(const ToyAdmissible& model, int n) {
  const Prime p = model.p;
  require(is_prime(p), ErrorCode::kPreconditionViolation, "model prime is not prime");
  require(model.j >= 1 && n >= 1 && n <= model.coefficient_exponent,
          ErrorCode::kPreconditionViolation, "need 1 <= n <= coefficient exponent and j >= 1");
  require(model.k_level >= 0 && model.analytic_level >= 0 &&
              model.analytic_level <= model.k_level,
          ErrorCode::kPreconditionViolation, "need 0 <= analytic level <= K' level");
  require(model.j >= n + model.k_level, ErrorCode::kPreconditionViolation,
          "the model level j must be at least n + m");

  const int big = model.coefficient_exponent;
  const ResidueMatrix tau_big = toy_translation(p, model.j, big);
  std::vector<ResidueMatrix> gens;
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    const ResidueMatrix a = toy_generator_matrix(model, model.generators[i], big);
    require(a * tau_big == tau_big * a, ErrorCode::kModelNotAdmissible,
            "A-generator " + std::to_string(i) + " does not commute with translation");
    gens.push_back(a.reduced(n));
  }

  const ResidueMatrix tau = toy_translation(p, model.j, n);
  const std::size_t d = tau.rows();
  const ResidueMatrix id = ResidueMatrix::identity(p, n, d);
  const ZnModule invariants =
      kernel(tau.power(prime_power(p, model.k_level).get_ui()) - id);
  const ZnModule analytic =
      kernel(tau.power(prime_power(p, model.analytic_level).get_ui()) - id);

  OclaReport rep;
  rep.invariant_rank = invariants.rank();
  rep.analytic_rank = analytic.rank();
  if (model.invariant_bound) {
    require(rep.invariant_rank <= *model.invariant_bound, ErrorCode::kModelNotAdmissible,
            "K'-invariants have rank " + std::to_string(rep.invariant_rank) +
                ", above the declared bound " + std::to_string(*model.invariant_bound));
  }

  // Mahler confirmation on exact integer lifts of the analytic basis.
  std::vector<PadicScalar> tau_entries;
  const ResidueMatrix permutation = toy_translation(p, model.j, 1);
  for (const auto& x : permutation.entries()) {
    tau_entries.push_back(PadicScalar::from_integer(x, p));
  }
  const BoundedOperator tau_op(TruncatedSpace::standard(p, d), tau_entries);
  rep.analytic_confirmed = true;
  for (const auto& row : analytic.rows()) {
    std::vector<PadicScalar> v;
    for (const auto& x : row.vec) v.push_back(PadicScalar::from_integer(x, p));
    const auto av = analytic_vectors(tau_op, v, model.analytic_level);
    rep.analytic_confirmed = rep.analytic_confirmed && av.mahler == Verdict::kYes;
  }

  std::vector<ResidueMatrix> on_invariants, joint;
  for (const auto& a : gens) {
    on_invariants.push_back(restrict_to(invariants, a));
    joint.push_back(block_diagonal(on_invariants.back(), restrict_to(analytic, a)));
  }
  const std::size_t r = invariants.rows().size();
  const AlgebraImage img = algebra_closure(p, n, r, on_invariants);
  const AlgebraImage joint_img =
      algebra_closure(p, n, r + analytic.rows().size(), joint);
  rep.closure_rank = img.rank;
  rep.closure_log_size = img.log_size;
  rep.joint_log_size = joint_img.log_size;
  // The projection from the joint image onto the invariant image is onto;
  // equal sizes make it injective, so a|analytic is a function of a|V'.
  rep.factors = joint_img.log_size == img.log_size;
  rep.restricted_generators = std::move(on_invariants);
  return rep;
}

}  // namespace padicla
