#include "padicla/iwasawa.hpp"

#include <algorithm>

#include "padicla/error.hpp"
#include "padicla/locan.hpp"
#include "padicla/poly.hpp"

namespace padicla {

namespace {

ResidueOperator stacked(const std::vector<ResidueOperator>& blocks) {
  const std::size_t d = blocks.front().cols();
  ResidueOperator out(blocks.front().prime(), blocks.front().exponent(), d * blocks.size(), d);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out.set(b * d + i, j, blocks[b].at(i, j));
    }
  }
  return out;
}

bool has_unit_entry(const ResidueVector& v, Prime p) {
  return std::any_of(v.begin(), v.end(), [p](const mpz_class& x) { return x % p != 0; });
}

// A primitive vector of the joint kernel, if any. Rows of a Howell basis
// have no unit entry exactly when the whole module lies in p times the
// ambient space.
std::optional<ResidueVector> primitive_kernel_vector(const std::vector<ResidueOperator>& blocks) {
  const ZnModule ker = kernel(stacked(blocks));
  for (const auto& row : ker.rows()) {
    if (has_unit_entry(row.vec, ker.prime())) return row.vec;
  }
  return std::nullopt;
}

void check_family(const std::vector<BoundedOperator>& family) {
  require(!family.empty(), ErrorCode::kPreconditionViolation, "empty operator family");
  for (const auto& t : family) {
    require(t.space() == family.front().space(), ErrorCode::kSpaceMismatch,
            "family operators act on different spaces");
  }
}

int usable_precision(const std::vector<BoundedOperator>& family,
                     const std::vector<const EigenSystem*>& systems) {
  std::int64_t m = kDefaultPrecision;
  for (const auto& t : family) m = std::min(m, t.absolute_precision());
  for (const auto* s : systems) {
    for (const auto& x : s->eigenvalues) m = std::min(m, x.absolute_precision());
  }
  return static_cast<int>(std::max<std::int64_t>(m, 1));
}

}  // namespace

GroupActionSpec::GroupActionSpec(std::vector<BoundedOperator> generators)
    : g_(std::move(generators)) {
  require(!g_.empty(), ErrorCode::kPreconditionViolation, "an action needs at least one generator");
  for (std::size_t i = 0; i < g_.size(); ++i) {
    require(g_[i].space() == g_.front().space(), ErrorCode::kSpaceMismatch,
            "generators act on different spaces");
    require(reduce(g_[i], 1).is_invertible(), ErrorCode::kPreconditionViolation,
            "generator " + std::to_string(i) + " is not invertible mod p");
    for (std::size_t j = 0; j < i; ++j) {
      require(compose(g_[i], g_[j]).congruent(compose(g_[j], g_[i])),
              ErrorCode::kNoncommutingGenerators,
              "generators " + std::to_string(j) + " and " + std::to_string(i) + " do not commute");
    }
  }
  for (const auto& g : g_) t_.push_back(g - BoundedOperator::identity(g.space(), g.working_precision()));
}

std::optional<int> minimal_uniform_exponent(const GroupActionSpec& action) {
  // T^m ∈ pL implies T^(m+1) ∈ pL, so the uniform exponent is the largest
  // individual one.
  int n = 1;
  for (const auto& t : action.t_operators()) {
    const auto d = locan_degree(t);
    if (!d) return std::nullopt;
    n = std::max(n, *d);
  }
  return n;
}

PolydiscFunction::PolydiscFunction(Prime p, std::size_t k, int precision)
    : p_(p), k_(k), precision_(precision) {}

PolydiscFunction PolydiscFunction::constant(const PadicScalar& c, std::size_t k) {
  PolydiscFunction f(c.prime(), k, c.relative_precision() > 0 ? c.relative_precision()
                                                               : kDefaultPrecision);
  f.add_term({std::vector<unsigned>(k, 0), std::vector<unsigned>(k, 0)}, c);
  return f;
}

PolydiscFunction PolydiscFunction::u(std::size_t i, std::size_t k, Prime p, int precision) {
  require(i < k, ErrorCode::kPreconditionViolation, "variable index out of range");
  PolydiscFunction f(p, k, precision);
  PolydiscMonomial m{std::vector<unsigned>(k, 0), std::vector<unsigned>(k, 0)};
  m.u[i] = 1;
  f.add_term(m, PadicScalar::one(p, precision));
  return f;
}

PolydiscFunction PolydiscFunction::s(std::size_t i, std::size_t k, Prime p, int precision) {
  require(i < k, ErrorCode::kPreconditionViolation, "variable index out of range");
  PolydiscFunction f(p, k, precision);
  PolydiscMonomial m{std::vector<unsigned>(k, 0), std::vector<unsigned>(k, 0)};
  m.s[i] = 1;
  f.add_term(m, PadicScalar::one(p, precision));
  return f;
}

void PolydiscFunction::add_term(const PolydiscMonomial& m, const PadicScalar& c) {
  require(m.u.size() == k_ && m.s.size() == k_, ErrorCode::kPreconditionViolation,
          "monomial has the wrong number of variables");
  require(c.prime() == p_, ErrorCode::kPrimeMismatch, "coefficient prime");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
  }
}

Valuation PolydiscFunction::gauss_norm() const {
  if (terms_.empty()) return Valuation::infinity(precision_);
  Valuation v = terms_.begin()->second.valuation();
  for (const auto& [m, c] : terms_) v = min(v, c.valuation());
  return v;
}

bool PolydiscFunction::is_integral() const { return gauss_norm().at_least(0); }

PolydiscFunction operator+(const PolydiscFunction& a, const PolydiscFunction& b) {
  require(a.p_ == b.p_ && a.k_ == b.k_, ErrorCode::kPrimeMismatch, "polydisc functions differ");
  PolydiscFunction out = a;
  out.precision_ = std::min(a.precision_, b.precision_);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

PolydiscFunction operator*(const PolydiscFunction& a, const PolydiscFunction& b) {
  require(a.p_ == b.p_ && a.k_ == b.k_, ErrorCode::kPrimeMismatch, "polydisc functions differ");
  PolydiscFunction out(a.p_, a.k_, std::min(a.precision_, b.precision_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      PolydiscMonomial m = ma;
      for (std::size_t i = 0; i < a.k_; ++i) {
        m.u[i] += mb.u[i];
        m.s[i] += mb.s[i];
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

BoundedOperator polydisc_eval(const PolydiscFunction& f, const GroupActionSpec& action, int n) {
  require(f.k() == action.rank(), ErrorCode::kPreconditionViolation,
          "function and action have different numbers of variables");
  require(f.prime() == action.space().prime(), ErrorCode::kPrimeMismatch, "function prime");
  require(f.is_integral(), ErrorCode::kPreconditionViolation, "function is not integral");
  require(n >= 1, ErrorCode::kExponentTooSmall, "exponent must be positive");

  const auto& ts = action.t_operators();
  std::vector<BoundedOperator> us;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const BoundedOperator tn = ts[i].power(static_cast<unsigned long>(n));
    require(certify_image(tn, 1), ErrorCode::kExponentTooSmall,
            "T_" + std::to_string(i + 1) + "^" + std::to_string(n) +
                " is not divisible by p on the lattice");
    us.push_back(tn.shifted(-1));
  }

  std::optional<BoundedOperator> acc;
  for (const auto& [m, c] : f.terms()) {
    std::optional<BoundedOperator> mono;
    auto times = [&mono](const BoundedOperator& x) { mono = mono ? compose(*mono, x) : x; };
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (m.u[i] > 0) times(us[i].power(m.u[i]));
      if (m.s[i] > 0) times(ts[i].power(m.s[i]));
    }
    const BoundedOperator term =
        (mono ? *mono : BoundedOperator::identity(action.space(), f.precision())) * c;
    acc = acc ? *acc + term : term;
  }
  BoundedOperator result = acc ? *acc : BoundedOperator::zero(action.space(), f.precision());
  require(result.absolute_precision() >= 1, ErrorCode::kPrecisionExhausted,
          "evaluation retains no digit modulo p");
  return result;
}

PowerFixReport power_fix_certificate(const BoundedOperator& g, int m) {
  require(op_norm(g).at_least(0), ErrorCode::kNormExceedsOne, "g does not stabilize the lattice");
  require(reduce(g, 1).is_invertible(), ErrorCode::kPreconditionViolation,
          "g is not invertible mod p");
  require(m >= 0, ErrorCode::kPreconditionViolation, "m must be nonnegative");
  const unsigned long q = prime_power(g.prime(), m).get_ui();
  const BoundedOperator t = g - BoundedOperator::identity(g.space(), g.working_precision());
  PowerFixReport rep;
  rep.certificate = certify_image(t.power(q), 1);
  rep.fixes_residue =
      reduce(g.power(q), 1) == ResidueMatrix::identity(g.prime(), 1, g.dimension());
  require(!rep.certificate || rep.fixes_residue, ErrorCode::kImplicationViolated,
          "(g-1)^(p^m) maps L into pL but g^(p^m) moves L/pL");
  return rep;
}

std::vector<mpz_class> EigenSystem::signature() const {
  std::vector<mpz_class> out;
  for (const auto& x : eigenvalues) out.push_back(x.residue(1));
  return out;
}

std::vector<EigenSystem> triangular_eigen_systems(const std::vector<BoundedOperator>& family) {
  check_family(family);
  const std::size_t d = family.front().dimension();
  for (const auto& t : family) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        require(t.at(i, j).is_zero(), ErrorCode::kPreconditionViolation,
                "family is not upper triangular");
      }
    }
  }
  std::vector<EigenSystem> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& t : family) out[j].eigenvalues.push_back(t.at(j, j));
  }
  return out;
}

std::vector<EigenSystem> simple_eigen_systems(const std::vector<BoundedOperator>& family) {
  check_family(family);
  const Prime p = family.front().prime();
  const std::size_t d = family.front().dimension();
  const PadicPoly f = characteristic_polynomial(family.front());
  const PadicPoly df = f.derivative();
  std::vector<EigenSystem> out;
  for (const auto& r : residue_roots(f)) {
    const auto dr = df.residue_coefficients();
    mpz_class dv = 0;
    for (auto it = dr.rbegin(); it != dr.rend(); ++it) dv = (dv * r + *it) % p;
    if (dv == 0) continue;  // repeated residue root
    const PadicScalar lambda = hensel_lift(f, r);
    const int m = static_cast<int>(std::min<std::int64_t>(
        lambda.absolute_precision(), family.front().absolute_precision()));
    ResidueOperator shifted = reduce(family.front(), m);
    for (std::size_t i = 0; i < d; ++i) {
      shifted.set(i, i, shifted.at(i, i) - lambda.residue(m));
    }
    const auto v = primitive_kernel_vector({shifted});
    require(v.has_value(), ErrorCode::kPrecisionExhausted, "no eigenvector at this precision");
    std::size_t j = 0;
    while ((*v)[j] % p == 0) ++j;
    const mpz_class mod = prime_power(p, m);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), (*v)[j].get_mpz_t(), mod.get_mpz_t());
    EigenSystem sys;
    for (const auto& t : family) {
      const auto tv = reduce(t, m).apply(*v);
      sys.eigenvalues.push_back(PadicScalar::from_integer_mod(tv[j] * inv % mod, p, m));
    }
    out.push_back(std::move(sys));
  }
  return out;
}

bool system_appears(const std::vector<BoundedOperator>& family, const EigenSystem& system, int m) {
  check_family(family);
  require(system.eigenvalues.size() == family.size(), ErrorCode::kPreconditionViolation,
          "eigen-system size differs from family size");
  std::vector<ResidueOperator> blocks;
  for (std::size_t i = 0; i < family.size(); ++i) {
    require(system.eigenvalues[i].is_integral(), ErrorCode::kPreconditionViolation,
            "eigenvalue is not integral");
    ResidueOperator b = reduce(family[i], m);
    const mpz_class lam = system.eigenvalues[i].residue(m);
    for (std::size_t j = 0; j < b.rows(); ++j) b.set(j, j, b.at(j, j) - lam);
    blocks.push_back(std::move(b));
  }
  return primitive_kernel_vector(blocks).has_value();
}

int localized_exponent(const std::vector<BoundedOperator>& family,
                       const std::vector<mpz_class>& signature) {
  check_family(family);
  require(signature.size() == family.size(), ErrorCode::kPreconditionViolation,
          "signature size differs from family size");
  const std::size_t d = family.front().dimension();
  std::vector<ResidueOperator> shifted;
  std::vector<ResidueOperator> nil_powers;
  for (std::size_t i = 0; i < family.size(); ++i) {
    ResidueOperator b = reduce(family[i], 1);
    for (std::size_t j = 0; j < d; ++j) b.set(j, j, b.at(j, j) - signature[i]);
    nil_powers.push_back(b.power(d));
    shifted.push_back(std::move(b));
  }
  // The joint generalized eigenspace mod p.
  const ZnModule space = kernel(stacked(nil_powers));
  require(!space.rows().empty(), ErrorCode::kPreconditionViolation,
          "residue signature does not occur in the family");
  int n = 1;
  for (const auto& b : shifted) {
    int k = 0;
    bool dead = false;
    while (!dead) {
      ++k;
      const ResidueOperator bk = b.power(static_cast<unsigned long>(k));
      dead = std::all_of(space.rows().begin(), space.rows().end(), [&](const HowellRow& r) {
        const auto y = bk.apply(r.vec);
        return std::all_of(y.begin(), y.end(), [](const mpz_class& x) { return x == 0; });
      });
    }
    n = std::max(n, k);
  }
  return n;
}

CongruenceReport congruence_check(const std::vector<BoundedOperator>& family,
                                  const EigenSystem& lambda, const EigenSystem& lambda_prime,
                                  const Rational& kappa) {
  check_family(family);
  require(lambda.eigenvalues.size() == family.size() &&
              lambda_prime.eigenvalues.size() == family.size(),
          ErrorCode::kPreconditionViolation, "eigen-system size differs from family size");
  require(lambda.signature() == lambda_prime.signature(), ErrorCode::kResidueMismatch,
          "eigen-systems differ modulo the maximal ideal; the congruence statement is vacuous");
  const int m = usable_precision(family, {&lambda, &lambda_prime});
  require(system_appears(family, lambda, m), ErrorCode::kPreconditionViolation,
          "first eigen-system does not appear in the lattice");
  require(system_appears(family, lambda_prime, m), ErrorCode::kPreconditionViolation,
          "second eigen-system does not appear in the lattice");

  CongruenceReport rep;
  rep.kappa = kappa;
  rep.passes = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Valuation v = (lambda.eigenvalues[i] - lambda_prime.eigenvalues[i]).valuation();
    rep.differences.push_back(v);
    rep.kappa_observed = i == 0 ? v : min(rep.kappa_observed, v);
    rep.passes = rep.passes && v.at_least(kappa);
  }
  return rep;
}

}  // namespace padicla
