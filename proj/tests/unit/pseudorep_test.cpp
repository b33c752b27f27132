#include <gtest/gtest.h>

#include "padicla/error.hpp"
#include "padicla/fixtures.hpp"
#include "padicla/pseudorep.hpp"
#include "support.hpp"

namespace padicla {
namespace {

PadicScalar z(long n, Prime p, int prec = 10) { return PadicScalar::from_integer(n, p, prec); }

long oracle_trace(const IntMatrix2& m) { return m[0] + m[3]; }
long oracle_det(const IntMatrix2& m) { return m[0] * m[3] - m[1] * m[2]; }

std::size_t element_with_trace(const GroupTraceFixture& fx, long t, long order2) {
  // order2 = 1 picks an involution, 0 anything else.
  for (std::size_t e = 0; e < fx.matrices.size(); ++e) {
    const auto& g = fx.trace.group;
    const bool inv = g.mul(e, e) == g.identity();
    if (oracle_trace(fx.matrices[e]) == t && inv == (order2 == 1)) return e;
  }
  return fx.matrices.size();
}

void expect_fail(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(GroupTable, RejectsBadTables) {
  EXPECT_THROW(FiniteGroupTable({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(FiniteGroupTable({{0, 2}, {1, 0}}), Error);
  EXPECT_THROW(FiniteGroupTable({}), Error);
  const FiniteGroupTable c2({{0, 1}, {1, 0}});
  EXPECT_EQ(c2.identity(), 0u);
  EXPECT_EQ(c2.inverse(1), 1u);
}

TEST(ValidateTrace, S3Standard) {
  const auto fx = make_group_trace("s3-standard", 7, 10);
  ASSERT_EQ(fx.trace.group.order(), 6u);
  const auto r = validate_trace(fx.trace);
  EXPECT_TRUE(r.valid) << r.axiom << ": " << r.message;
  // Class values (2, 0, -1) from the oracle matrices.
  for (std::size_t e = 0; e < 6; ++e) {
    const auto& g = fx.trace.group;
    const long expected = e == g.identity() ? 2 : (g.mul(e, e) == g.identity() ? 0 : -1);
    EXPECT_EQ(oracle_trace(fx.matrices[e]), expected);
    EXPECT_EQ(fx.trace.values[e], z(expected, 7));
  }
}

TEST(ValidateTrace, CharacterSumAndTrivial) {
  const auto sum = make_group_trace("char-sum", 7, 10);
  EXPECT_TRUE(validate_trace(sum.trace).valid);

  const auto trivial = make_group_trace("char-sum-trivial", 7, 10);
  for (const auto& v : trivial.trace.values) EXPECT_EQ(v, z(2, 7));
  const auto r = validate_trace(trivial.trace);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.axiom, "oddness");
}

TEST(ValidateTrace, ReportsFirstViolatedAxiom) {
  auto fx = make_group_trace("s3-standard", 7, 10);
  auto bad = fx.trace;
  bad.values[bad.group.identity()] = z(3, 7);
  auto r = validate_trace(bad);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.axiom, "dimension");

  // Changing one 3-cycle breaks conjugation invariance.
  bad = fx.trace;
  const std::size_t c = element_with_trace(fx, -1, 0);
  bad.values[c] = z(5, 7);
  r = validate_trace(bad);
  EXPECT_EQ(r.axiom, "symmetry");
  ASSERT_TRUE(r.witness.has_value());
  const auto [s, t] = *r.witness;
  EXPECT_NE(bad.values[bad.group.mul(s, t)], bad.values[bad.group.mul(t, s)]);

  // A class function that is not a degree-2 trace.
  bad = fx.trace;
  for (std::size_t e = 0; e < 6; ++e) {
    if (oracle_trace(fx.matrices[e]) == -1) bad.values[e] = z(1, 7);
  }
  r = validate_trace(bad);
  EXPECT_EQ(r.axiom, "determinant");
}

TEST(OddSplit, S3ValuesAtSeven) {
  const auto fx = make_group_trace("s3-standard", 7, 10);
  const auto s = odd_split(fx.trace);
  const std::size_t c = element_with_trace(fx, -1, 0);
  const auto four = z(4, 7);
  // a(c) = d(c) = -1/2, x(c, c) = -3/4.
  EXPECT_TRUE((s.a[c] * z(2, 7) + z(1, 7)).is_zero());
  EXPECT_TRUE((s.d[c] * z(2, 7) + z(1, 7)).is_zero());
  EXPECT_TRUE((s.at(c, c) * four + z(3, 7)).is_zero());
  EXPECT_EQ(s.at(c, c), PadicScalar::from_rational(-3, 4, 7, 10));
  EXPECT_EQ(s.at(c, c).relative_precision(), 10);
  EXPECT_EQ(s.a[fx.trace.group.identity()], z(1, 7));
}

TEST(OddSplit, Errors) {
  expect_fail(ErrorCode::kEvenPrime, [] { odd_split(make_group_trace("char-sum", 2).trace); });
  auto fx = make_group_trace("s3-standard", 5);
  fx.trace.values[fx.trace.group.identity()] = z(3, 5);
  expect_fail(ErrorCode::kPreconditionViolation, [&] { odd_split(fx.trace); });
}

TEST(Reducibility, CharacterSumIsReducible) {
  const auto fx = make_group_trace("char-sum", 7, 10);
  const auto s = odd_split(fx.trace);
  for (std::size_t e = 0; e < s.order; ++e) {
    // a = chi1, d = chi2 read off the diagonal oracle matrices.
    EXPECT_EQ(s.a[e], z(fx.matrices[e][0], 7));
    EXPECT_EQ(s.d[e], z(fx.matrices[e][3], 7));
  }
  const auto r = reducibility_ideal(s);
  EXPECT_TRUE(r.reducible_at_precision);
  EXPECT_TRUE(r.generators.empty());
  EXPECT_EQ(r.generator_count, 0);
  EXPECT_FALSE(find_pivot(s).has_value());
  for (std::size_t a = 0; a < s.order; ++a)
    for (std::size_t b = 0; b < s.order; ++b)
      expect_fail(ErrorCode::kPivotNotInvertible, [&] { reconstruct(fx.trace, s, a, b); });
}

TEST(Reducibility, S3IsIrreducibleAwayFromOrder) {
  for (Prime p : {5u, 7u, 11u}) {
    const auto fx = make_group_trace("s3-standard", p);
    const auto r = reducibility_ideal(odd_split(fx.trace));
    EXPECT_FALSE(r.reducible_at_precision);
    EXPECT_EQ(*r.min_valuation, Valuation::finite(0));
    EXPECT_TRUE(r.principal());
  }
}

TEST(Reducibility, MixedReportWhenPDividesOrder) {
  // The S3 lattice at p = 3 is reducible mod 3 but not mod 9.
  const std::vector<IntMatrix2> gens = {{0, 1, 1, 0}, {0, -1, 1, -1}};
  const auto full = group_trace_from_matrices(3, gens, gens, 0, 10);
  const auto r = reducibility_ideal(odd_split(full.trace));
  EXPECT_FALSE(r.reducible_at_precision);
  EXPECT_EQ(*r.min_valuation, Valuation::finite(1));
  for (const auto& g : r.generators) EXPECT_TRUE(g.value.valuation().at_least(1));

  const auto mod3 = group_trace_from_matrices(3, gens, gens, 0, 1);
  const auto r1 = reducibility_ideal(odd_split(mod3.trace));
  EXPECT_TRUE(r1.reducible_at_precision);
}

void expect_reconstructs(const GroupTraceFixture& fx) {
  const auto s = odd_split(fx.trace);
  const auto pivot = find_pivot(s);
  ASSERT_TRUE(pivot.has_value());
  const auto rec = reconstruct(fx.trace, s, pivot->first, pivot->second);
  EXPECT_TRUE(rec.verified());
  const Prime p = fx.trace.values.front().prime();
  const int prec = fx.trace.values.front().relative_precision();
  for (std::size_t e = 0; e < s.order; ++e) {
    const auto& m = rec.matrices[e];
    // Characteristic polynomial against the oracle: trace and determinant.
    EXPECT_TRUE((m[0] + m[3]).congruent(z(oracle_trace(fx.matrices[e]), p, prec)));
    EXPECT_TRUE((m[0] * m[3] - m[1] * m[2]).congruent(z(oracle_det(fx.matrices[e]), p, prec)));
    // Involution consistency of the split.
    EXPECT_EQ(s.a[e] + s.d[e], fx.trace.values[e]);
  }
  const auto& id = rec.matrices[fx.trace.group.identity()];
  EXPECT_EQ(id[0], z(1, p, prec));
  EXPECT_TRUE(id[1].is_zero() && id[2].is_zero());
  EXPECT_EQ(id[3], z(1, p, prec));
}

TEST(Reconstruct, S3AtSevenWithCyclePivot) {
  const auto fx = make_group_trace("s3-standard", 7, 10);
  const auto s = odd_split(fx.trace);
  const std::size_t c = element_with_trace(fx, -1, 0);
  const auto rec = reconstruct(fx.trace, s, c, c);
  EXPECT_TRUE(rec.multiplicative);
  EXPECT_TRUE(rec.trace_matches);
  EXPECT_TRUE(rec.determinant_matches);
  for (std::size_t e = 0; e < s.order; ++e) {
    EXPECT_EQ(rec.matrices[e][0] + rec.matrices[e][3], fx.trace.values[e]);
  }
  expect_reconstructs(fx);
}

TEST(Reconstruct, PivotSearchIsLexicographic) {
  const auto fx = make_group_trace("dihedral", 5);
  const auto s = odd_split(fx.trace);
  const auto pivot = find_pivot(s);
  ASSERT_TRUE(pivot.has_value());
  for (std::size_t a = 0; a < s.order; ++a)
    for (std::size_t b = 0; b < s.order; ++b) {
      if (std::make_pair(a, b) < *pivot) EXPECT_FALSE(s.at(a, b).is_unit());
    }
  EXPECT_TRUE(s.at(pivot->first, pivot->second).is_unit());
  expect_reconstructs(fx);
}

// Conjugates integral generators by a random unimodular matrix.
std::vector<IntMatrix2> conjugate(const std::vector<IntMatrix2>& gens, Rng& rng) {
  IntMatrix2 p = {1, 0, 0, 1}, q = {1, 0, 0, 1};
  auto mul = [](const IntMatrix2& a, const IntMatrix2& b) -> IntMatrix2 {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
  };
  for (int step = 0; step < 3; ++step) {
    const long k = static_cast<long>(rng.range(-2, 2));
    const bool upper = rng.coin();
    const IntMatrix2 e = upper ? IntMatrix2{1, k, 0, 1} : IntMatrix2{1, 0, k, 1};
    const IntMatrix2 f = upper ? IntMatrix2{1, -k, 0, 1} : IntMatrix2{1, 0, -k, 1};
    p = mul(p, e);
    q = mul(f, q);
  }
  std::vector<IntMatrix2> out;
  for (const auto& g : gens) out.push_back(mul(mul(p, g), q));
  return out;
}

TEST(PseudorepProperty, IntegralFixturesValidateAndReconstruct) {
  const std::vector<std::vector<IntMatrix2>> families = {
      {{0, 1, 1, 0}, {0, -1, 1, -1}},   // S3
      {{1, 0, 0, -1}, {0, -1, 1, 0}},   // dihedral of order 8
      {{0, 1, 1, 0}, {1, -1, 1, 0}},    // dihedral of order 12
      {{0, 1, 1, 0}, {-1, 0, 0, -1}},   // monomial
  };
  const std::vector<Prime> primes = {5, 7, 11, 13};
  Rng rng(48);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& family = families[rng.below(families.size())];
    const Prime p = primes[rng.below(primes.size())];
    const auto gens = conjugate(family, rng);
    const auto fx = group_trace_from_matrices(p, gens, gens, 0, 12);
    const auto v = validate_trace(fx.trace);
    ASSERT_TRUE(v.valid) << v.axiom;
    const auto s = odd_split(fx.trace);
    const auto r = reducibility_ideal(s);
    // The monomial family is abelian, hence a sum of characters.
    if (&family == &families[3]) {
      EXPECT_TRUE(r.reducible_at_precision);
    } else {
      EXPECT_FALSE(r.reducible_at_precision);
      expect_reconstructs(fx);
    }
  }
}

DualScalar dz(long a, long b, Prime p) {
  return {PadicScalar::from_integer(a, p, 8), PadicScalar::from_integer(b, p, 8)};
}

TEST(DualScalar, Arithmetic) {
  const Prime p = 5;
  const auto e = DualScalar::epsilon(p, 8);
  EXPECT_TRUE((e * e).is_zero());
  const auto x = dz(3, 7, p);
  EXPECT_TRUE((x * x.inverse()).congruent(dz(1, 0, p)));
  EXPECT_EQ(dz(5, 1, p).valuation(), Valuation::finite(0));
  EXPECT_EQ(dz(25, 5, p).valuation(), Valuation::finite(1));
  EXPECT_FALSE(dz(5, 1, p).is_unit());
  EXPECT_THROW(e.inverse(), Error);
}

TEST(DualScalar, IdealGeneratorCounts) {
  const Prime p = 3;
  EXPECT_EQ(ideal_generator_count(std::vector<DualScalar>{}), 0);
  EXPECT_EQ(ideal_generator_count({dz(0, 0, p)}), 0);
  EXPECT_EQ(ideal_generator_count({dz(2, 5, p)}), 1);
  EXPECT_EQ(ideal_generator_count({dz(3, 0, p), dz(0, 1, p)}), 2);  // (p, ε)
  EXPECT_EQ(ideal_generator_count({dz(3, 1, p), dz(9, 3, p)}), 1);
  EXPECT_EQ(ideal_generator_count({dz(3, 0, p), dz(0, 3, p)}), 1);  // pε lies in (p)
  EXPECT_EQ(ideal_generator_count({dz(9, 0, p), dz(0, 1, p), dz(3, 1, p)}), 2);
  EXPECT_EQ(ideal_generator_count({z(0, p), z(6, p)}), 1);
}

TEST(DualScalar, LiftedTraceMatchesBaseRing) {
  const auto fx = make_group_trace("s3-standard", 7, 10);
  TraceFunction<DualScalar> lifted{fx.trace.group, {}, fx.trace.sigma_star};
  for (const auto& v : fx.trace.values) lifted.values.push_back({v, PadicScalar::zero(7, 10)});
  EXPECT_TRUE(validate_trace(lifted).valid);
  const auto s = odd_split(lifted);
  const auto r = reducibility_ideal(s);
  EXPECT_EQ(r.generator_count, 1);
  const auto pivot = find_pivot(s);
  ASSERT_TRUE(pivot.has_value());
  EXPECT_TRUE(reconstruct(lifted, s, pivot->first, pivot->second).verified());
}

TEST(DualScalar, NonPrincipalReducibilityIdeal) {
  // x values generating (p, ε): no single element generates the ideal.
  SplitData<DualScalar> s;
  s.order = 2;
  s.a = {dz(1, 0, 5), dz(1, 0, 5)};
  s.d = s.a;
  s.x = {dz(0, 0, 5), dz(5, 0, 5), dz(0, 1, 5), dz(5, 2, 5)};
  const auto r = reducibility_ideal(s);
  EXPECT_FALSE(r.reducible_at_precision);
  EXPECT_EQ(r.generator_count, 2);
  EXPECT_FALSE(r.principal());
  EXPECT_FALSE(find_pivot(s).has_value());
}

TEST(HeckeCharpoly, Examples) {
  const auto f = hecke_charpoly(z(3, 5), z(2, 5), 2);
  EXPECT_TRUE(f.is_monic());
  EXPECT_EQ(f.degree(), 2);
  EXPECT_TRUE(f.coeff(0).congruent(z(1, 5)));
  EXPECT_TRUE((f.coeff(1) * z(2, 5) + z(3, 5)).is_zero());

  const auto g = hecke_charpoly(PadicScalar::zero(7, 10), z(3, 7), 3);
  EXPECT_TRUE(testing::congruent(g, PadicPoly::from_integers({1, 0, 1}, 7, 10)));

  const auto h = hecke_charpoly(z(1, 7), z(1, 7), 3);
  mpz_class inv3, mod = 1;
  for (int i = 0; i < 10; ++i) mod *= 7;
  mpz_invert(inv3.get_mpz_t(), mpz_class(3).get_mpz_t(), mod.get_mpz_t());
  EXPECT_EQ(h.coeff(0).residue(10), inv3);
  EXPECT_EQ(h.coeff(1).residue(10), (mod - inv3) % mod);

  expect_fail(ErrorCode::kLEqualsP, [] { hecke_charpoly(z(1, 5), z(1, 5), 5); });
  expect_fail(ErrorCode::kPreconditionViolation, [] { hecke_charpoly(z(1, 5), z(1, 5), 4); });
}

}  // namespace
}  // namespace padicla
