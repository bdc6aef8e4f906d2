#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/numeric.hpp"

namespace ellsurf {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMat identity(std::size_t n);
  bool operator==(const IntMat&) const = default;
};

struct RatMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  explicit RatMat(const IntMat& m);

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Vector helpers (ClassVector is an alias of IntVec, so these serve both).
IntVec vec_add(const IntVec& u, const IntVec& v);
IntVec vec_sub(const IntVec& u, const IntVec& v);
IntVec vec_scale(const Int& s, const IntVec& u);
IntVec vec_neg(const IntVec& u);
bool vec_is_zero(const IntVec& u);
Int vec_content(const IntVec& u);  // gcd of entries, 0 for the zero vector
std::string vec_str(const IntVec& u);  // "a,b,c"

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntVec mat_vec(const IntMat& A, const IntVec& v);
IntMat mat_transpose(const IntMat& A);

// Fraction-free determinant (Bareiss).  Requires a square matrix.
Int det_bareiss(const IntMat& m);

struct Signature {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

// Signature of a symmetric integer matrix via exact rational congruence
// diagonalization.
Signature signature_symmetric(const IntMat& m);

// Inverse of an integer matrix with determinant +-1.  Throws input_error if
// the matrix is not invertible over the integers.
IntMat inverse_unimodular(const IntMat& m);

// Exact solve M h = b for positive definite rational M (small systems).
RatVec solve_posdef(const RatMat& M, const RatVec& b);

// Column reduction of an integer functional: returns unimodular U with
// u^T U = (g, 0, ..., 0), g = gcd(u) > 0.  Columns 1..n-1 of U form a basis
// of the kernel lattice of u, column 0 scaled by a/g is a particular solution
// of u^T x = a.  Requires u != 0.
struct RowReduction {
  Int g;
  IntMat U;
};
RowReduction unimodular_row_reduce(const IntVec& u);

// LDL^T data for a positive definite rational matrix:
//   Q(t) = sum_i d[i] * (t_i + sum_{j>i} mu(i,j) t_j)^2.
// Throws math_domain_error if the matrix is not positive definite.
struct Ldl {
  RatVec d;
  RatMat mu;
};
Ldl ldl_posdef(const RatMat& M);

}  // namespace ellsurf
