#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "padicla/scalar.hpp"

namespace padicla {

using ResidueVector = std::vector<mpz_class>;

// Matrix over Z/p^n with entries kept in [0, p^n).
class ResidueMatrix {
 public:
  ResidueMatrix(Prime p, int n, std::size_t rows, std::size_t cols);

  static ResidueMatrix identity(Prime p, int n, std::size_t d);

  Prime prime() const { return p_; }
  int exponent() const { return n_; }
  const mpz_class& modulus() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const mpz_class& x);

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  friend ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b);
  friend ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b);
  ResidueMatrix scaled(const mpz_class& c) const;
  ResidueVector apply(const ResidueVector& x) const;

  ResidueMatrix power(unsigned long k) const;
  bool is_zero() const;
  // Least k >= 1 with M^k = 0, if M is nilpotent.
  std::optional<int> nilpotency_index() const;
  // Invertibility over Z/p^n, decided on the residue field.
  bool is_invertible() const;
  // Entrywise reduction to Z/p^m for m <= n.
  ResidueMatrix reduced(int m) const;

  // Row-major flattening, used to treat matrices as module elements.
  const ResidueVector& entries() const { return a_; }
  static ResidueMatrix from_entries(Prime p, int n, std::size_t rows, std::size_t cols,
                                    ResidueVector entries);

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  Prime p_;
  int n_;
  mpz_class mod_;
  std::size_t rows_;
  std::size_t cols_;
  ResidueVector a_;
};

// Residue of a bounded operator modulo p^n.
using ResidueOperator = ResidueMatrix;

// A row of a Howell basis: the pivot entry is exactly p^pivot_valuation.
struct HowellRow {
  ResidueVector vec;
  std::size_t pivot_col;
  int pivot_valuation;
};

// Submodule of (Z/p^n)^m kept in Howell form: echelon rows with distinct
// pivot columns such that every element vanishing on the first c columns is a
// combination of the rows pivoting at or after c. This makes the module size
// the product of p^(n - e_i) and membership a single reduction pass.
class ZnModule {
 public:
  ZnModule(Prime p, int n, std::size_t length);

  static ZnModule span(Prime p, int n, std::size_t length,
                       const std::vector<ResidueVector>& generators);

  Prime prime() const { return p_; }
  int exponent() const { return n_; }
  std::size_t length() const { return len_; }
  const std::vector<HowellRow>& rows() const { return rows_; }

  bool contains(const ResidueVector& v) const;
  // Adds v; returns true iff the module grew.
  bool insert(const ResidueVector& v);

  // log_p of the number of elements.
  long log_size() const;
  // Minimal number of generators, i.e. dim over F_p of M/pM.
  long rank() const;

  // Coordinates of v with respect to the rows; valid when every pivot is a
  // unit (the module is a free direct summand) and v is a member.
  std::vector<mpz_class> coordinates(const ResidueVector& v) const;
  bool is_free_summand() const;

 private:
  void rebuild(std::vector<ResidueVector> generators);

  Prime p_;
  int n_;
  mpz_class mod_;
  std::size_t len_;
  std::vector<HowellRow> rows_;
};

// Howell basis of the module generated by `generators`.
std::vector<HowellRow> howell_form(Prime p, int n, std::size_t length,
                                   std::vector<ResidueVector> generators);

// Generators (in Howell form) of {x : A x = 0} over Z/p^n.
ZnModule kernel(const ResidueMatrix& a);

// p-adic valuation of a nonzero residue (n for zero).
int residue_valuation(const mpz_class& x, Prime p, int n);

}  // namespace padicla
