#include "padicla/residue.hpp"

#include <algorithm>

#include "padicla/error.hpp"

namespace padicla {

namespace {

void reduce_in_place(mpz_class& x, const mpz_class& mod) {
  x %= mod;
  if (x < 0) x += mod;
}

}  // namespace

int residue_valuation(const mpz_class& x, Prime p, int n) {
  if (x == 0) return n;
  mpz_class u = x;
  mpz_class pp(p);
  return static_cast<int>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t()));
}

ResidueMatrix::ResidueMatrix(Prime p, int n, std::size_t rows, std::size_t cols)
    : p_(p), n_(n), mod_(prime_power(p, n)), rows_(rows), cols_(cols),
      a_(rows * cols, 0) {
  require(n >= 1, ErrorCode::kPreconditionViolation, "modulus exponent must be >= 1");
}

ResidueMatrix ResidueMatrix::identity(Prime p, int n, std::size_t d) {
  ResidueMatrix m(p, n, d, d);
  for (std::size_t i = 0; i < d; ++i) m.a_[i * d + i] = 1;
  return m;
}

ResidueMatrix ResidueMatrix::from_entries(Prime p, int n, std::size_t rows,
                                          std::size_t cols, ResidueVector entries) {
  require(entries.size() == rows * cols, ErrorCode::kPreconditionViolation,
          "entry count does not match shape");
  ResidueMatrix m(p, n, rows, cols);
  m.a_ = std::move(entries);
  for (auto& x : m.a_) reduce_in_place(x, m.mod_);
  return m;
}

void ResidueMatrix::set(std::size_t i, std::size_t j, const mpz_class& x) {
  auto& e = a_[i * cols_ + j];
  e = x;
  reduce_in_place(e, mod_);
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  require(a.cols_ == b.rows_ && a.p_ == b.p_ && a.n_ == b.n_,
          ErrorCode::kSpaceMismatch, "residue matrix shapes or moduli differ");
  ResidueMatrix c(a.p_, a.n_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.a_[i * c.cols_ + j] += x * b.at(k, j);
    }
  }
  for (auto& x : c.a_) reduce_in_place(x, c.mod_);
  return c;
}

ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.n_ == b.n_,
          ErrorCode::kSpaceMismatch, "residue matrix shapes or moduli differ");
  ResidueMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) {
    c.a_[i] += b.a_[i];
    reduce_in_place(c.a_[i], c.mod_);
  }
  return c;
}

ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b) {
  return a + b.scaled(-1);
}

ResidueMatrix ResidueMatrix::scaled(const mpz_class& c) const {
  ResidueMatrix m = *this;
  for (auto& x : m.a_) {
    x *= c;
    reduce_in_place(x, mod_);
  }
  return m;
}

ResidueVector ResidueMatrix::apply(const ResidueVector& x) const {
  require(x.size() == cols_, ErrorCode::kSpaceMismatch, "vector length");
  ResidueVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    reduce_in_place(y[i], mod_);
  }
  return y;
}

ResidueMatrix ResidueMatrix::power(unsigned long k) const {
  require(rows_ == cols_, ErrorCode::kSpaceMismatch, "power of a non-square matrix");
  ResidueMatrix result = identity(p_, n_, rows_);
  ResidueMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool ResidueMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

std::optional<int> ResidueMatrix::nilpotency_index() const {
  require(rows_ == cols_, ErrorCode::kSpaceMismatch, "nilpotency of a non-square matrix");
  // Over Z/p^n the index is at most n * d.
  const int bound = n_ * static_cast<int>(rows_);
  ResidueMatrix m = *this;
  for (int k = 1; k <= std::max(bound, 1); ++k) {
    if (m.is_zero()) return k;
    m = m * *this;
  }
  return std::nullopt;
}

bool ResidueMatrix::is_invertible() const {
  require(rows_ == cols_, ErrorCode::kSpaceMismatch, "invertibility of a non-square matrix");
  const ResidueMatrix r = reduced(1);
  std::vector<ResidueVector> rows;
  for (std::size_t i = 0; i < rows_; ++i) {
    rows.emplace_back(r.a_.begin() + static_cast<long>(i * cols_),
                      r.a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  return howell_form(p_, 1, cols_, std::move(rows)).size() == rows_;
}

ResidueMatrix ResidueMatrix::reduced(int m) const {
  require(m >= 1 && m <= n_, ErrorCode::kPreconditionViolation, "cannot raise residue precision");
  ResidueMatrix r(p_, m, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    r.a_[i] = a_[i];
    reduce_in_place(r.a_[i], r.mod_);
  }
  return r;
}

std::vector<HowellRow> howell_form(Prime p, int n, std::size_t length,
                                   std::vector<ResidueVector> generators) {
  const mpz_class mod = prime_power(p, n);
  for (auto& g : generators) {
    require(g.size() == length, ErrorCode::kSpaceMismatch, "module element length");
    for (auto& x : g) reduce_in_place(x, mod);
  }
  std::erase_if(generators, [](const ResidueVector& g) {
    return std::all_of(g.begin(), g.end(), [](const mpz_class& x) { return x == 0; });
  });

  std::vector<HowellRow> result;
  for (std::size_t col = 0; col < length && !generators.empty(); ++col) {
    std::size_t best = generators.size();
    int best_val = n;
    for (std::size_t r = 0; r < generators.size(); ++r) {
      const int v = residue_valuation(generators[r][col], p, n);
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == generators.size()) continue;

    ResidueVector pivot = std::move(generators[best]);
    generators.erase(generators.begin() + static_cast<long>(best));

    // Scale so the pivot entry is exactly p^e.
    const mpz_class pe = prime_power(p, best_val);
    mpz_class unit = pivot[col] / pe;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (auto& x : pivot) {
      x *= inv;
      reduce_in_place(x, mod);
    }

    for (auto& g : generators) {
      if (g[col] == 0) continue;
      const mpz_class factor = g[col] / pe;  // exact: val(g[col]) >= e
      for (std::size_t j = col; j < length; ++j) {
        g[j] -= factor * pivot[j];
        reduce_in_place(g[j], mod);
      }
    }
    // The annihilator multiple p^(n-e) * pivot vanishes at col but may
    // survive further right; keeping it is what makes the basis Howell.
    if (best_val > 0) {
      ResidueVector ann = pivot;
      const mpz_class scale = prime_power(p, n - best_val);
      bool nonzero = false;
      for (auto& x : ann) {
        x *= scale;
        reduce_in_place(x, mod);
        nonzero = nonzero || x != 0;
      }
      if (nonzero) generators.push_back(std::move(ann));
    }
    std::erase_if(generators, [](const ResidueVector& g) {
      return std::all_of(g.begin(), g.end(), [](const mpz_class& x) { return x == 0; });
    });
    result.push_back({std::move(pivot), col, best_val});
  }
  return result;
}

ZnModule::ZnModule(Prime p, int n, std::size_t length)
    : p_(p), n_(n), mod_(prime_power(p, n)), len_(length) {}

ZnModule ZnModule::span(Prime p, int n, std::size_t length,
                        const std::vector<ResidueVector>& generators) {
  ZnModule m(p, n, length);
  m.rebuild(generators);
  return m;
}

void ZnModule::rebuild(std::vector<ResidueVector> generators) {
  rows_ = howell_form(p_, n_, len_, std::move(generators));
}

bool ZnModule::contains(const ResidueVector& v) const {
  require(v.size() == len_, ErrorCode::kSpaceMismatch, "module element length");
  ResidueVector w = v;
  for (auto& x : w) reduce_in_place(x, mod_);
  std::size_t next_col = 0;
  for (const auto& row : rows_) {
    for (; next_col < row.pivot_col; ++next_col) {
      if (w[next_col] != 0) return false;
    }
    const mpz_class& x = w[row.pivot_col];
    if (x != 0) {
      if (residue_valuation(x, p_, n_) < row.pivot_valuation) return false;
      const mpz_class factor = x / prime_power(p_, row.pivot_valuation);
      for (std::size_t j = row.pivot_col; j < len_; ++j) {
        w[j] -= factor * row.vec[j];
        reduce_in_place(w[j], mod_);
      }
    }
    next_col = row.pivot_col + 1;
  }
  for (; next_col < len_; ++next_col) {
    if (w[next_col] != 0) return false;
  }
  return true;
}

bool ZnModule::insert(const ResidueVector& v) {
  if (contains(v)) return false;
  std::vector<ResidueVector> gens;
  gens.reserve(rows_.size() + 1);
  for (const auto& r : rows_) gens.push_back(r.vec);
  gens.push_back(v);
  rebuild(std::move(gens));
  return true;
}

long ZnModule::log_size() const {
  long s = 0;
  for (const auto& r : rows_) s += n_ - r.pivot_valuation;
  return s;
}

long ZnModule::rank() const {
  std::vector<ResidueVector> scaled;
  scaled.reserve(rows_.size());
  for (const auto& r : rows_) {
    ResidueVector w = r.vec;
    for (auto& x : w) {
      x *= p_;
      reduce_in_place(x, mod_);
    }
    scaled.push_back(std::move(w));
  }
  const ZnModule pm = span(p_, n_, len_, scaled);
  return log_size() - pm.log_size();
}

bool ZnModule::is_free_summand() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const HowellRow& r) { return r.pivot_valuation == 0; });
}

std::vector<mpz_class> ZnModule::coordinates(const ResidueVector& v) const {
  require(is_free_summand(), ErrorCode::kPreconditionViolation,
          "coordinates need unit pivots");
  require(contains(v), ErrorCode::kPreconditionViolation, "vector is not in the module");
  ResidueVector w = v;
  for (auto& x : w) reduce_in_place(x, mod_);
  std::vector<mpz_class> c;
  c.reserve(rows_.size());
  for (const auto& row : rows_) {
    const mpz_class factor = w[row.pivot_col];
    c.push_back(factor);
    if (factor == 0) continue;
    for (std::size_t j = row.pivot_col; j < len_; ++j) {
      w[j] -= factor * row.vec[j];
      reduce_in_place(w[j], mod_);
    }
  }
  return c;
}

ZnModule kernel(const ResidueMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<ResidueVector> gens;
  gens.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    ResidueVector g(r + c, 0);
    for (std::size_t i = 0; i < r; ++i) g[i] = a.at(i, j);
    g[r + j] = 1;
    gens.push_back(std::move(g));
  }
  const auto rows = howell_form(a.prime(), a.exponent(), r + c, std::move(gens));
  std::vector<ResidueVector> kernel_gens;
  for (const auto& row : rows) {
    if (row.pivot_col < r) continue;
    kernel_gens.emplace_back(row.vec.begin() + static_cast<long>(r), row.vec.end());
  }
  return ZnModule::span(a.prime(), a.exponent(), c, kernel_gens);
}

}  // namespace padicla
