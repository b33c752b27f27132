#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/mahler.hpp"
#include "padicla/pseudorep.hpp"

namespace padicla {

// F(X) -> F(X+1) on polynomials of degree <= d; entry (i, j) = C(j, i).
BoundedOperator make_translation(Prime p, std::size_t degree,
                                 int precision = kDefaultPrecision);

// P (S + pR) P^-1 with S strictly upper triangular and P unit lower
// triangular, all drawn from `seed`; the residue is nilpotent of index <= d.
BoundedOperator make_random_nilres(Prime p, std::size_t d, std::uint64_t seed,
                                   int precision = kDefaultPrecision);

// I + make_random_nilres: a lattice automorphism with unipotent residue.
BoundedOperator make_random_unipotent(Prime p, std::size_t d, std::uint64_t seed,
                                      int precision = kDefaultPrecision);

// 2x2 integer matrix, row major.
using IntMatrix2 = std::array<long, 4>;

struct GroupTraceFixture {
  TraceFunction<PadicScalar> trace;
  // Oracle matrix for every group element, in element order.
  std::vector<IntMatrix2> matrices;
  // Element index of each generator.
  std::vector<std::size_t> generator_elements;
};

// Closes `faithful` under multiplication (breadth first from the identity,
// generators in order) to get the group table, and takes traces of the
// images under `traced`, which must define a homomorphism on the same words.
// σ* is the element of generator `sigma_star_generator`.
GroupTraceFixture group_trace_from_matrices(Prime p, const std::vector<IntMatrix2>& faithful,
                                            const std::vector<IntMatrix2>& traced,
                                            std::size_t sigma_star_generator,
                                            int precision = kDefaultPrecision);

// kind: "s3-standard" (p >= 5), "char-sum" (Klein group, σ* acting as
// diag(1, -1)), "char-sum-trivial" (same group, both characters trivial),
// "dihedral" (order 8, p odd). Throws kUnsupportedPrime or
// kPreconditionViolation for an unknown kind.
GroupTraceFixture make_group_trace(const std::string& kind, Prime p,
                                   int precision = kDefaultPrecision);

// Seeded translation-plus-convolution model on Z/p^j with n = 1 and
// coefficients mod p^3.
ToyAdmissible make_toy_admissible(Prime p, int j, std::uint64_t seed);

}  // namespace padicla
