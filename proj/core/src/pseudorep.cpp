#include "padicla/pseudorep.hpp"

#include <algorithm>

#include "padicla/error.hpp"
#include "padicla/residue.hpp"

namespace padicla {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table)
    : table_(std::move(table)) {
  const std::size_t g = table_.size();
  require(g >= 1, ErrorCode::kPreconditionViolation, "empty group table");
  for (std::size_t i = 0; i < g; ++i) {
    require(table_[i].size() == g, ErrorCode::kPreconditionViolation,
            "table row " + std::to_string(i) + " has the wrong length");
    for (std::size_t x : table_[i]) {
      require(x < g, ErrorCode::kPreconditionViolation,
              "table row " + std::to_string(i) + " leaves the group");
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < g && !e; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < g && ok; ++j) ok = table_[i][j] == j && table_[j][i] == j;
    if (ok) e = i;
  }
  require(e.has_value(), ErrorCode::kPreconditionViolation, "no identity element");
  identity_ = *e;
  inverse_.assign(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (table_[i][j] == identity_ && table_[j][i] == identity_) inverse_[i] = j;
    }
    require(inverse_[i] < g, ErrorCode::kPreconditionViolation,
            "element " + std::to_string(i) + " has no inverse");
  }
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t c = 0; c < g; ++c) {
        require(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                ErrorCode::kPreconditionViolation,
                "associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                    ", " + std::to_string(c) + ")");
      }
}

DualScalar::DualScalar(PadicScalar a, PadicScalar b) : a_(std::move(a)), b_(std::move(b)) {
  require(a_.prime() == b_.prime(), ErrorCode::kPrimeMismatch, "dual number parts");
}

DualScalar DualScalar::from_integer(const mpz_class& n, Prime p, int precision) {
  return {PadicScalar::from_integer(n, p, precision), PadicScalar::zero(p, precision)};
}

DualScalar DualScalar::epsilon(Prime p, int precision) {
  return {PadicScalar::zero(p, precision), PadicScalar::one(p, precision)};
}

Valuation DualScalar::valuation() const { return min(a_.valuation(), b_.valuation()); }

DualScalar DualScalar::inverse() const {
  // (a + bε)⁻¹ = a⁻¹ - b a⁻² ε.
  const PadicScalar ai = a_.inverse();
  return {ai, -(b_ * ai * ai)};
}

DualScalar operator+(const DualScalar& x, const DualScalar& y) {
  return {x.a_ + y.a_, x.b_ + y.b_};
}

DualScalar operator-(const DualScalar& x, const DualScalar& y) {
  return {x.a_ - y.a_, x.b_ - y.b_};
}

DualScalar operator*(const DualScalar& x, const DualScalar& y) {
  return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
}

std::string DualScalar::str() const { return "(" + a_.str() + ") + (" + b_.str() + ")*eps"; }

long ideal_generator_count(const std::vector<PadicScalar>& xs) {
  return std::any_of(xs.begin(), xs.end(), [](const PadicScalar& x) { return !x.is_zero(); }) ? 1
                                                                                                : 0;
}

long ideal_generator_count(const std::vector<DualScalar>& xs) {
  if (xs.empty()) return 0;
  const Prime p = xs.front().prime();
  std::int64_t m = 1 << 20;
  for (const auto& x : xs) {
    require(x.valuation().at_least(0), ErrorCode::kPreconditionViolation,
            "ideal generators must be integral");
    m = std::min({m, x.real().absolute_precision(), x.dual().absolute_precision()});
  }
  if (m < 1) return 0;
  const int n = static_cast<int>(m);
  // Coordinates (a, b) over Z/p^n. The maximal ideal is (p, ε), so by
  // Nakayama the generator count is the length of I / (pI + εI).
  std::vector<ResidueVector> ideal, smaller;
  for (const auto& x : xs) {
    const mpz_class a = x.real().residue(n), b = x.dual().residue(n);
    ideal.push_back({a, b});
    ideal.push_back({0, a});
    smaller.push_back({a * p, b * p});
    smaller.push_back({0, a});
  }
  const ZnModule big = ZnModule::span(p, n, 2, ideal);
  const ZnModule small = ZnModule::span(p, n, 2, smaller);
  return big.log_size() - small.log_size();
}

namespace {

int rel_prec(const PadicScalar& x) { return x.relative_precision(); }
int rel_prec(const DualScalar& x) {
  return std::max(x.real().relative_precision(), x.dual().relative_precision());
}

template <class R>
R constant(long n, const std::vector<R>& like) {
  int prec = 1;
  for (const auto& x : like) prec = std::max(prec, rel_prec(x));
  return R::from_integer(n, like.front().prime(), prec);
}

template <class R>
void check_shape(const TraceFunction<R>& t) {
  require(t.values.size() == t.group.order(), ErrorCode::kPreconditionViolation,
          "trace has " + std::to_string(t.values.size()) + " values for a group of order " +
              std::to_string(t.group.order()));
  require(t.sigma_star < t.group.order(), ErrorCode::kPreconditionViolation,
          "sigma* is not a group element");
}

}  // namespace

template <class R>
TraceValidation validate_trace(const TraceFunction<R>& t) {
  check_shape(t);
  const auto& g = t.group;
  const auto& v = t.values;
  const R two = constant<R>(2, v);
  TraceValidation rep;
  auto violation = [&rep](std::string axiom, std::size_t s, std::size_t u, std::string msg) {
    rep.valid = false;
    rep.axiom = std::move(axiom);
    rep.witness = std::make_pair(s, u);
    rep.message = std::move(msg);
    return rep;
  };

  if (!(v[g.identity()] - two).is_zero()) {
    return violation("dimension", g.identity(), g.identity(),
                     "T(1) = " + v[g.identity()].str() + ", expected 2");
  }
  const std::size_t n = g.order();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      if (!(v[g.mul(s, u)] - v[g.mul(u, s)]).is_zero()) {
        return violation("symmetry", s, u, "T(st) != T(ts)");
      }
    }
  const std::size_t star = t.sigma_star;
  if (g.mul(star, star) != g.identity()) {
    return violation("oddness", star, star, "sigma* is not an involution");
  }
  if (!v[star].is_zero()) return violation("oddness", star, star, "T(sigma*) != 0");
  for (std::size_t s = 0; s < n; ++s) {
    const R det2 = v[s] * v[s] - v[g.mul(s, s)];
    for (std::size_t u = 0; u < n; ++u) {
      const R lhs = two * v[s] * v[u] - two * v[g.mul(s, u)] - det2 * v[g.mul(g.inverse(s), u)];
      if (!lhs.is_zero()) {
        return violation("determinant", s, u, "determinant identity fails");
      }
    }
  }
  return rep;
}

template <class R>
SplitData<R> odd_split(const TraceFunction<R>& t) {
  check_shape(t);
  require(t.values.front().prime() != 2, ErrorCode::kEvenPrime,
          "the odd split divides by 2 and needs p != 2");
  const auto valid = validate_trace(t);
  require(valid.valid, ErrorCode::kPreconditionViolation,
          "trace fails the " + valid.axiom + " axiom: " + valid.message);
  const auto& g = t.group;
  const auto& v = t.values;
  const R half = constant<R>(2, v).inverse();
  SplitData<R> s;
  s.order = g.order();
  for (std::size_t e = 0; e < s.order; ++e) {
    s.a.push_back((v[g.mul(t.sigma_star, e)] + v[e]) * half);
    s.d.push_back(v[e] - s.a.back());
  }
  for (std::size_t e = 0; e < s.order; ++e)
    for (std::size_t f = 0; f < s.order; ++f) s.x.push_back(s.a[g.mul(e, f)] - s.a[e] * s.a[f]);
  return s;
}

template <class R>
ReducibilityReport<R> reducibility_ideal(const SplitData<R>& s) {
  ReducibilityReport<R> rep;
  for (std::size_t e = 0; e < s.order; ++e)
    for (std::size_t f = 0; f < s.order; ++f) {
      const R& x = s.at(e, f);
      if (x.is_zero()) continue;
      rep.generators.push_back({e, f, x});
      rep.min_valuation = rep.min_valuation ? min(*rep.min_valuation, x.valuation()) : x.valuation();
    }
  rep.reducible_at_precision = rep.generators.empty();
  rep.generator_count = ideal_generator_count(s.x);
  return rep;
}

template <class R>
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const SplitData<R>& s) {
  for (std::size_t e = 0; e < s.order; ++e)
    for (std::size_t f = 0; f < s.order; ++f) {
      if (s.at(e, f).is_unit()) return std::make_pair(e, f);
    }
  return std::nullopt;
}

template <class R>
Reconstruction<R> reconstruct(const TraceFunction<R>& t, const SplitData<R>& s, std::size_t sigma0,
                              std::size_t tau0) {
  require(s.order == t.group.order() && sigma0 < s.order && tau0 < s.order,
          ErrorCode::kPreconditionViolation, "pivot outside the group");
  require(s.at(sigma0, tau0).is_unit(), ErrorCode::kPivotNotInvertible,
          "x(" + std::to_string(sigma0) + ", " + std::to_string(tau0) +
              ") is not a unit; try find_pivot");
  const auto& g = t.group;
  const R c = s.at(sigma0, tau0).inverse();
  Reconstruction<R> out;
  out.sigma0 = sigma0;
  out.tau0 = tau0;
  for (std::size_t e = 0; e < s.order; ++e) {
    out.matrices.push_back({s.a[e], s.at(e, tau0) * c, s.at(sigma0, e), s.d[e]});
  }
  out.multiplicative = true;
  for (std::size_t e = 0; e < s.order && out.multiplicative; ++e)
    for (std::size_t f = 0; f < s.order && out.multiplicative; ++f) {
      const auto& m = out.matrices[e];
      const auto& n = out.matrices[f];
      const auto& mn = out.matrices[g.mul(e, f)];
      const Matrix2<R> prod = {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
                               m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
      for (int k = 0; k < 4; ++k) out.multiplicative = out.multiplicative && (prod[k] - mn[k]).is_zero();
    }
  const R two = constant<R>(2, t.values);
  out.trace_matches = true;
  out.determinant_matches = true;
  for (std::size_t e = 0; e < s.order; ++e) {
    const auto& m = out.matrices[e];
    out.trace_matches = out.trace_matches && (m[0] + m[3] - t.values[e]).is_zero();
    const R det2 = two * (m[0] * m[3] - m[1] * m[2]);
    out.determinant_matches =
        out.determinant_matches &&
        (det2 - (t.values[e] * t.values[e] - t.values[g.mul(e, e)])).is_zero();
  }
  return out;
}

PadicPoly hecke_charpoly(const PadicScalar& t_l, const PadicScalar& s_l, unsigned long l) {
  const Prime p = t_l.prime();
  require(s_l.prime() == p, ErrorCode::kPrimeMismatch, "T_l and S_l primes differ");
  require(l != p, ErrorCode::kLEqualsP, "l = p, so 1/l is not integral");
  require(is_prime(l), ErrorCode::kPreconditionViolation, "l is not prime");
  const int prec = std::max({1, t_l.relative_precision(), s_l.relative_precision()});
  const PadicScalar inv = PadicScalar::from_integer(l, p, prec).inverse();
  return PadicPoly(p, {inv * s_l, -(inv * t_l), PadicScalar::one(p, prec)}, prec);
}

#define PADICLA_INSTANTIATE(R)                                                                  \
  template TraceValidation validate_trace<R>(const TraceFunction<R>&);                          \
  template SplitData<R> odd_split<R>(const TraceFunction<R>&);                                  \
  template ReducibilityReport<R> reducibility_ideal<R>(const SplitData<R>&);                    \
  template std::optional<std::pair<std::size_t, std::size_t>> find_pivot<R>(const SplitData<R>&); \
  template Reconstruction<R> reconstruct<R>(const TraceFunction<R>&, const SplitData<R>&,        \
                                            std::size_t, std::size_t);

PADICLA_INSTANTIATE(PadicScalar)
PADICLA_INSTANTIATE(DualScalar)

#undef PADICLA_INSTANTIATE

}  // namespace padicla
