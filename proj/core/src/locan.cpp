#include "padicla/locan.hpp"

#include <algorithm>
#include <deque>

#include "padicla/error.hpp"

namespace padicla {

namespace {

void require_unit_ball(const BoundedOperator& t) {
  require(op_norm(t).at_least(0), ErrorCode::kNormExceedsOne,
          "operator norm exceeds 1 (some entry has negative valuation)");
}

std::int64_t image_exponent(const BoundedOperator& t) {
  const Valuation m = op_norm(t);
  return m.value();
}

ResidueOperator matrix_from_vector(Prime p, int n, std::size_t d, const ResidueVector& v) {
  return ResidueMatrix::from_entries(p, n, d, d, v);
}

}  // namespace

BoundedOperator poly_apply(const PadicPoly& f, const BoundedOperator& t) {
  require(f.prime() == t.prime(), ErrorCode::kPrimeMismatch, "polynomial and operator primes");
  const int precision = std::min(f.precision(), t.working_precision());
  const BoundedOperator id = BoundedOperator::identity(t.space(), precision);
  if (f.is_zero()) return BoundedOperator::zero(t.space(), precision);
  const auto& cs = f.coefficients();
  BoundedOperator acc = id * cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = compose(acc, t) + id * cs[i];
  return acc;
}

NilpotencyReport is_top_nilpotent(const BoundedOperator& t) {
  require_unit_ball(t);
  NilpotencyReport rep;
  rep.truncation_only = !t.is_exact();
  rep.index = reduce(t, 1).nilpotency_index();
  rep.top_nilpotent = rep.index.has_value();
  return rep;
}

std::optional<int> locan_degree(const BoundedOperator& t) {
  const int bound = static_cast<int>(t.dimension() * t.prime());
  BoundedOperator power = t;
  for (int n = 1; n <= bound; ++n) {
    if (certify_image(power, 1)) return n;
    power = compose(power, t);
  }
  return std::nullopt;
}

PadicPoly characteristic_polynomial(const BoundedOperator& t) {
  const std::size_t d = t.dimension();
  const Prime p = t.prime();
  const int precision = t.working_precision();
  const PadicScalar one = PadicScalar::one(p, precision);
  auto a = [&](std::size_t i, std::size_t j) -> const PadicScalar& { return t.at(i, j); };

  // Running sums start from their first term, never from a zero of bounded
  // precision, so high-valuation coefficients keep all their digits.
  auto dot = [](const std::vector<PadicScalar>& x, const std::vector<PadicScalar>& y) {
    PadicScalar acc = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
  };

  // Berkowitz: c holds det(X - A_k) for the leading k x k block, highest
  // degree first.
  std::vector<PadicScalar> c = {one, -a(0, 0)};
  for (std::size_t k = 1; k < d; ++k) {
    std::vector<PadicScalar> row(k, one), s(k, one);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = a(k, i);
      s[i] = a(i, k);
    }
    // First column of the Toeplitz factor: 1, -a_kk, -R S, -R A S, ...
    std::vector<PadicScalar> col = {one, -a(k, k)};
    for (std::size_t step = 0; step < k; ++step) {
      col.push_back(-dot(row, s));
      std::vector<PadicScalar> next = s;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<PadicScalar> ai(k, one);
        for (std::size_t j = 0; j < k; ++j) ai[j] = a(i, j);
        next[i] = dot(ai, s);
      }
      s = std::move(next);
    }
    std::vector<PadicScalar> out;
    for (std::size_t i = 0; i < k + 2; ++i) {
      PadicScalar acc = col[i] * c[0];
      for (std::size_t j = 1; j <= std::min(i, k); ++j) acc += col[i - j] * c[j];
      out.push_back(acc);
    }
    c = std::move(out);
  }
  std::reverse(c.begin(), c.end());
  return PadicPoly(p, std::move(c), precision);
}

LocAnCertificate charpoly_witness(const BoundedOperator& t) {
  require_unit_ball(t);
  LocAnCertificate cert;
  cert.witness_poly = characteristic_polynomial(t);
  cert.mode = WitnessMode::kCharpoly;
  cert.truncation_only = !t.is_exact();
  cert.verified_exponent = image_exponent(poly_apply(cert.witness_poly, t));
  return cert;
}

LocAnCertificate power_witness(const BoundedOperator& t) {
  const auto n = locan_degree(t);
  require(n.has_value(), ErrorCode::kPreconditionViolation,
          "no power of the operator maps the unit ball into p times itself");
  LocAnCertificate cert;
  cert.witness_poly = PadicPoly::monomial(static_cast<std::size_t>(*n), t.prime(),
                                          t.working_precision());
  cert.mode = WitnessMode::kPower;
  cert.truncation_only = !t.is_exact();
  cert.verified_exponent = image_exponent(t.power(static_cast<unsigned long>(*n)));
  return cert;
}

LocAnCertificate minimal_poly_witness(const BoundedOperator& t) {
  require_unit_ball(t);
  const auto g = residue_minimal_polynomial(reduce(t, 1));
  std::vector<PadicScalar> cs;
  for (const auto& x : g) cs.push_back(PadicScalar::from_integer(x, t.prime(), t.working_precision()));
  LocAnCertificate cert;
  cert.witness_poly = PadicPoly(t.prime(), std::move(cs), t.working_precision());
  cert.mode = WitnessMode::kMinimalPolyLift;
  cert.truncation_only = !t.is_exact();
  cert.verified_exponent = image_exponent(poly_apply(cert.witness_poly, t));
  return cert;
}

bool verify_certificate(const LocAnCertificate& cert, const BoundedOperator& t) {
  return cert.witness_poly.is_monic() && cert.witness_poly.is_integral() &&
         certify_image(poly_apply(cert.witness_poly, t), 1);
}

std::vector<mpz_class> residue_minimal_polynomial(const ResidueOperator& r) {
  const ResidueOperator m = r.reduced(1);
  const Prime p = m.prime();
  const std::size_t d = m.rows();
  const std::size_t len = d * d;
  // Rows (vec(M^i) | e_i); a Howell row vanishing on the matrix block is a
  // linear relation among the powers.
  std::vector<ResidueVector> gens;
  ResidueOperator power = ResidueMatrix::identity(p, 1, d);
  for (std::size_t k = 0; k <= d; ++k) {
    ResidueVector row(len + d + 1, 0);
    std::copy(power.entries().begin(), power.entries().end(), row.begin());
    row[len + k] = 1;
    gens.push_back(row);
    const auto rows = howell_form(p, 1, len + d + 1, gens);
    for (const auto& h : rows) {
      if (h.pivot_col < len) continue;
      // Relation among I..M^k; it involves M^k since lower powers were
      // independent, so normalize its top coefficient to 1.
      std::vector<mpz_class> rel(h.vec.begin() + static_cast<long>(len),
                                 h.vec.begin() + static_cast<long>(len + k + 1));
      mpz_class lead = rel.back();
      mpz_class inv;
      const mpz_class pp(p);
      mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), pp.get_mpz_t());
      for (auto& x : rel) x = (x * inv) % pp;
      return rel;
    }
    power = power * m;
  }
  fail(ErrorCode::kPreconditionViolation, "no minimal polynomial found (Cayley-Hamilton violated)");
}

ResidueOperator residue_poly_apply(const std::vector<mpz_class>& g, const ResidueOperator& r) {
  const ResidueOperator id = ResidueMatrix::identity(r.prime(), r.exponent(), r.rows());
  ResidueOperator acc(r.prime(), r.exponent(), r.rows(), r.cols());
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * r + id.scaled(*it);
  return acc;
}

NilpotentDecomposition nilpotent_decompose(const BoundedOperator& t, const PadicPoly& f) {
  require(f.is_monic() && f.is_integral(), ErrorCode::kPreconditionViolation,
          "witness polynomial must be monic with integral coefficients");
  require(certify_image(poly_apply(f, t), 1), ErrorCode::kPreconditionViolation,
          "f(T) does not map the unit ball into p times the unit ball");
  const auto residue = f.residue_coefficients();
  NilpotentDecomposition out;
  while (residue[static_cast<std::size_t>(out.k)] == 0) ++out.k;
  out.g.assign(residue.begin() + out.k, residue.end());

  const ResidueOperator r = reduce(t, 1);
  require(residue_poly_apply(out.g, r).is_invertible(), ErrorCode::kGNotInvertible,
          "g(T) is singular mod p, so T is not topologically nilpotent on this truncation");
  require(r.power(static_cast<unsigned long>(out.k)).is_zero(), ErrorCode::kImplicationViolated,
          "T^k is nonzero mod p although f(T) ≡ 0 and g(T) is invertible");
  return out;
}

AlgebraImage algebra_closure(Prime p, int n, std::size_t dimension,
                             const std::vector<ResidueOperator>& gens) {
  for (const auto& g : gens) {
    require(g.rows() == dimension && g.cols() == dimension && g.exponent() == n &&
                g.prime() == p,
            ErrorCode::kSpaceMismatch, "generator residues must share space and modulus");
  }
  ZnModule module(p, n, dimension * dimension);
  const ResidueOperator id = ResidueMatrix::identity(p, n, dimension);
  module.insert(id.entries());
  // Words that enlarged the span; right multiples of all of them stay inside
  // the final span, so the span is the generated unital subring.
  std::deque<ResidueOperator> queue = {id};
  while (!queue.empty()) {
    const ResidueOperator w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ResidueOperator x = w * g;
      if (module.insert(x.entries())) queue.push_back(std::move(x));
    }
  }
  AlgebraImage img;
  img.exponent = n;
  img.generators = gens;
  for (const auto& row : module.rows()) {
    img.closure_basis.push_back(matrix_from_vector(p, n, dimension, row.vec));
  }
  img.rank = module.rank();
  img.log_size = module.log_size();
  img.size_bound_log = static_cast<long>(n) * img.rank;
  return img;
}

AlgebraImage algebra_closure(const TruncatedSpace& space,
                             const std::vector<BoundedOperator>& gens, int n) {
  std::vector<ResidueOperator> residues;
  for (const auto& g : gens) {
    require(g.space() == space, ErrorCode::kSpaceMismatch, "generator space");
    residues.push_back(reduce(g, n));
  }
  return algebra_closure(space.prime(), n, space.dimension(), residues);
}

FiltrationCheck noela_filtration_check(const TruncatedSpace& space,
                                       const std::vector<BoundedOperator>& gens, int n) {
  const Prime p = space.prime();
  const std::size_t d = space.dimension();
  const std::size_t len = d * d;
  const AlgebraImage img = algebra_closure(space, gens, n);
  const auto& basis = img.closure_basis;

  // I_1 = {a in image : a ≡ 0 mod p}: lifts of the F_p-relations among the
  // reduced basis elements, together with p times the image.
  ResidueMatrix reductions(p, 1, len, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) reductions.set(i, j, basis[j].entries()[i]);
  }
  const ZnModule relations = kernel(reductions);
  std::vector<ResidueVector> kernel_gens;
  for (const auto& rel : relations.rows()) {
    ResidueOperator combo(p, n, d, d);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (rel.vec[j] != 0) combo = combo + basis[j].scaled(rel.vec[j]);
    }
    kernel_gens.push_back(combo.entries());
  }
  for (const auto& b : basis) kernel_gens.push_back(b.scaled(p).entries());
  const ZnModule ideal = ZnModule::span(p, n, len, kernel_gens);

  FiltrationCheck out;
  out.kernel_generators = ideal.rows().size();
  out.kernel_rank = ideal.rank();
  std::vector<ResidueOperator> elems;
  for (const auto& row : ideal.rows()) {
    const ResidueOperator e = matrix_from_vector(p, n, d, row.vec);
    require(e.reduced(1).is_zero(), ErrorCode::kCounterexampleFound,
            "kernel element does not vanish mod p");
    elems.push_back(e);
  }
  if (elems.empty()) return out;

  // Enumerate all ordered n-fold products of basis elements of I_1.
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    ResidueOperator prod = elems[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) prod = prod * elems[idx[k]];
    ++out.products_checked;
    if (!prod.is_zero()) {
      std::string which;
      for (auto i : idx) which += " " + std::to_string(i);
      fail(ErrorCode::kCounterexampleFound,
           "product of I_1 generators" + which + " does not vanish mod p^" + std::to_string(n));
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

}  // namespace padicla
