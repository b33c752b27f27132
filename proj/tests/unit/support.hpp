#pragma once

#include <gmpxx.h>

#include <ostream>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/poly.hpp"
#include "padicla/random.hpp"
#include "padicla/scalar.hpp"

namespace padicla {

inline void PrintTo(const PadicScalar& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const PadicPoly& f, std::ostream* os) { *os << f.str(); }

}  // namespace padicla

namespace padicla::testing {

inline bool congruent(const PadicPoly& f, const PadicPoly& g) {
  const int n = std::max(f.degree(), g.degree());
  for (int i = 0; i <= n; ++i) {
    if (!f.coeff(i).congruent(g.coeff(i))) return false;
  }
  return true;
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

inline IntMatrix int_identity(std::size_t d) {
  IntMatrix m(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t d = a.size();
  IntMatrix c(d, std::vector<mpz_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline bool all_divisible(const IntMatrix& a, const mpz_class& m) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x % m != 0) return false;
  return true;
}

inline BoundedOperator to_operator(const TruncatedSpace& space, const IntMatrix& m,
                                   int precision = kDefaultPrecision) {
  std::vector<PadicScalar> entries;
  for (const auto& row : m)
    for (const auto& x : row) entries.push_back(PadicScalar::from_integer(x, space.prime(), precision));
  return BoundedOperator(space, std::move(entries), Exactness::kApproximate);
}

// Random integer matrix with entries in [lo, hi].
inline IntMatrix random_int_matrix(Rng& rng, std::size_t d, long lo, long hi) {
  IntMatrix m(d, std::vector<mpz_class>(d));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(rng.range(lo, hi));
  return m;
}

// Random integer matrix whose reduction mod p is strictly upper triangular.
inline IntMatrix random_nilpotent_residue(Rng& rng, Prime p, std::size_t d) {
  IntMatrix m(d, std::vector<mpz_class>(d));
  const long q = static_cast<long>(p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      m[i][j] = j > i ? rng.range(-2 * q, 2 * q) : q * rng.range(-3, 3);
    }
  return m;
}

inline PadicScalar random_scalar(Rng& rng, Prime p, int precision, int max_val = 4) {
  if (rng.below(8) == 0) return PadicScalar::zero(p, rng.range(0, precision));
  const mpz_class mod = prime_power(p, precision);
  mpz_class u = rng.below(mod);
  if (u % p == 0) u += 1;
  return PadicScalar::from_parts(p, precision, rng.range(-max_val, max_val), u % mod);
}

}  // namespace padicla::testing
