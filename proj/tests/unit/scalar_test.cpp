#include <gtest/gtest.h>

#include "padicla/error.hpp"
#include "padicla/poly.hpp"
#include "padicla/scalar.hpp"
#include "support.hpp"

namespace padicla {
namespace {

using testing::random_scalar;

PadicScalar Z(long n, Prime p, int prec = kDefaultPrecision) {
  return PadicScalar::from_integer(n, p, prec);
}

TEST(Valuation, ReadsOffPowerOfP) {
  EXPECT_EQ(Z(50, 5).valuation(), Valuation::finite(2));
  EXPECT_EQ(Z(1, 3).valuation(), Valuation::finite(0));
  const Valuation z = PadicScalar::zero(2, 8).valuation();
  EXPECT_TRUE(z.is_infinite());
  EXPECT_EQ(z.precision(), 8);
}

TEST(Arith, SumGainsValuation) {
  const auto s = Z(50, 5) + Z(75, 5);
  EXPECT_EQ(s.valuation(), Valuation::finite(3));
  EXPECT_EQ(s.unit(), 1);
  // 50 and 75 carry absolute precision 22; the sum keeps it.
  EXPECT_EQ(s.absolute_precision(), 22);
}

TEST(Arith, ProductAddsValuations) {
  const auto m = Z(3, 3) * Z(6, 3);
  EXPECT_EQ(m.valuation(), Valuation::finite(2));
  EXPECT_EQ(m.unit(), 2);
}

TEST(Arith, InverseMatchesBruteForce) {
  const auto inv = Z(2, 7, 3).inverse();
  long oracle = -1;
  for (long u = 0; u < 343; ++u) {
    if ((2 * u) % 343 == 1) oracle = u;
  }
  EXPECT_EQ(oracle, 172);
  EXPECT_EQ(inv.unit(), oracle);
  EXPECT_EQ(inv.relative_precision(), 3);
}

TEST(Arith, InverseOfZeroThrows) {
  try {
    (void)PadicScalar::zero(5, 4).inverse();
    FAIL() << "expected division-by-zero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(Arith, DivisionByPIsLossless) {
  const auto x = Z(12, 2, 10);
  const auto h = x.shifted(-1);
  EXPECT_EQ(h.valuation(), Valuation::finite(1));
  EXPECT_EQ(h.relative_precision(), 10);
  EXPECT_EQ(h.shifted(1), x);
}

TEST(Arith, CancellationLosesOnlyWhatItMust) {
  // 1 + O(3^5) minus 1 + O(3^20) leaves only O(3^5).
  const auto a = PadicScalar::from_integer_mod(1, 3, 5);
  const auto d = a - Z(1, 3);
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.absolute_precision(), 5);
}

TEST(Arith, CanonicalFormIsStructural) {
  EXPECT_EQ(PadicScalar::from_rational(1, 2, 7, 5), Z(2, 7, 5).inverse());
  EXPECT_EQ(Z(10, 5) - Z(5, 5), Z(5, 5));
}

TEST(Arith, FromPartsRejectsNonCanonical) {
  EXPECT_THROW(PadicScalar::from_parts(5, 3, 0, 10), Error);
  EXPECT_THROW(PadicScalar::from_parts(5, 3, 0, 125), Error);
  EXPECT_NO_THROW(PadicScalar::from_parts(5, 3, 0, 124));
}

TEST(Residue, NeedsEnoughPrecision) {
  const auto x = PadicScalar::from_integer_mod(7, 2, 2);
  EXPECT_EQ(x.residue(2), 3);
  EXPECT_THROW((void)x.residue(3), Error);
  EXPECT_THROW((void)Z(1, 2).shifted(-1).residue(1), Error);
}

TEST(Properties, UltrametricAndValuationAdditive) {
  Rng rng(11);
  for (Prime p : {2UL, 3UL, 5UL, 7UL}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = random_scalar(rng, p, 8);
      const auto y = random_scalar(rng, p, 8);
      const auto z = random_scalar(rng, p, 8);
      const auto s = x + y;
      const Valuation vs = s.valuation();
      const Valuation lo = min(x.valuation(), y.valuation());
      EXPECT_TRUE(vs.at_least(lo.value()) || vs.is_infinite());
      if (!x.is_zero() && !y.is_zero() && x.valuation() != y.valuation() && !s.is_zero()) {
        EXPECT_EQ(vs, lo);
      }
      if (!x.is_zero() && !y.is_zero()) {
        EXPECT_EQ((x * y).valuation().value(), x.valuation().value() + y.valuation().value());
      }
      EXPECT_TRUE(((x * y) * z).congruent(x * (y * z)));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + y, y + x);
    }
  }
}

TEST(Properties, EncodingRoundTrip) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_scalar(rng, 3, 6);
    if (x.is_zero()) continue;
    const auto back = PadicScalar::from_parts(3, x.relative_precision(),
                                              x.valuation().value(), x.unit());
    EXPECT_EQ(back, x);
  }
}

TEST(Poly, EvalExamples) {
  const auto f = PadicPoly::from_integers({-3, 0, 1}, 3);
  const auto v = poly_eval(f, PadicScalar::zero(3, 20));
  EXPECT_EQ(v.valuation(), Valuation::finite(1));
  EXPECT_TRUE(v.congruent(Z(-3, 3)));

  const auto g = PadicPoly::from_integers({-1, 0, 1}, 2);
  EXPECT_TRUE(g.eval(Z(1, 2)).is_zero());

  const auto h = PadicPoly::from_integers({1, 1, 1}, 5);
  const auto w = h.eval(Z(5, 5));
  EXPECT_EQ(w.valuation(), Valuation::finite(0));
  EXPECT_EQ(w, Z(31, 5));
}

TEST(Poly, EvalThrowsWhenNothingSurvives) {
  const auto f = PadicPoly::from_integers({-1, 1}, 2, 3);
  EXPECT_THROW((void)poly_eval(f, PadicScalar::from_integer_mod(1, 2, 0)), Error);
}

TEST(Poly, GaussNorm) {
  // F(X+2) - F(X) for F = X^2.
  const auto f = PadicPoly::from_integers({4, 4}, 2);
  EXPECT_EQ(gauss_norm(f), Valuation::finite(2));
  EXPECT_EQ(gauss_norm(PadicPoly::from_integers({0, 1}, 2)), Valuation::finite(0));
  EXPECT_TRUE(gauss_norm(PadicPoly(2)).is_infinite());
}

TEST(Poly, EvalIsRingHomomorphism) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p = trial % 2 ? 3 : 5;
    std::vector<long> a(rng.range(1, 5)), b(rng.range(1, 5));
    for (auto& c : a) c = rng.range(-50, 50);
    for (auto& c : b) c = rng.range(-50, 50);
    const auto f = PadicPoly::from_integers(a, p, 10);
    const auto g = PadicPoly::from_integers(b, p, 10);
    const auto x = PadicScalar::from_integer(rng.range(-20, 20), p, 10);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_TRUE((f + g).eval(x).congruent(f.eval(x) + g.eval(x)));
    EXPECT_TRUE((f * g).eval(x).congruent(f.eval(x) * g.eval(x)));
  }
}

TEST(Poly, HenselLiftsSimpleRoot) {
  // X^2 - 2 has the simple roots 3, 4 mod 7.
  const auto f = PadicPoly::from_integers({-2, 0, 1}, 7, 12);
  const auto roots = residue_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) {
    const auto x = hensel_lift(f, r);
    EXPECT_TRUE(f.eval(x).is_zero());
    EXPECT_EQ(x.residue(1), r);
  }
  EXPECT_THROW((void)hensel_lift(PadicPoly::from_integers({0, 0, 1}, 7), 0), Error);
}

}  // namespace
}  // namespace padicla
