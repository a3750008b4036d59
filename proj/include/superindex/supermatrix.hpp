// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_SUPERMATRIX_HPP
#define SUPERINDEX_SUPERMATRIX_HPP

#include <random>
#include <vector>

#include "superindex/algebra.hpp"

namespace superindex {

// Square even supermatrix [[A, B], [C, D]] whose entries live in a Grassmann
// algebra, stored as SuperPolynomials in odd generators only and multiplied
// with symbol_product. A and D have even entries, B and C odd ones.
class SuperMatrix {
 public:
  SuperMatrix(int even_dim, int odd_dim);
  static SuperMatrix identity(int even_dim, int odd_dim);
  static SuperMatrix from_integers(int even_dim, int odd_dim, const std::vector<std::vector<int>>& m);

  int even_dim() const { return e_; }
  int odd_dim() const { return o_; }
  int size() const { return e_ + o_; }
  SuperPolynomial& at(int r, int c) { return entries_.at(r * size() + c); }
  const SuperPolynomial& at(int r, int c) const { return entries_.at(r * size() + c); }

  // True when A, D entries are even and B, C entries odd.
  bool is_even() const;

  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

  // [[A^T, C^T], [-B^T, D^T]].
  SuperMatrix supertranspose() const;

 private:
  int e_, o_;
  std::vector<SuperPolynomial> entries_;
};

// Inverse of an even Grassmann element with non-zero body; geometric series in the nilpotent part.
SuperPolynomial invert_even(const SuperPolynomial& x);

// Determinant of a square matrix with pairwise commuting (even) entries.
SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& m);

// det(A - B D^{-1} C) / det(D). Throws std::domain_error if det(D) has zero body.
SuperPolynomial berezinian(const SuperMatrix& m);

SuperMatrix inverse(const SuperMatrix& m);

// Bilinear form diag(J, hQ) on (p_1..p_n, q_1..q_n | theta_1..theta_{a+b}).
SuperMatrix super_symplectic_form(const AlgebraContext& ctx);

// Random even element c + sum c_ij e_i e_j, odd element sum c_i e_i over
// `generators` Grassmann generators, coefficients in {-3..3}.
SuperPolynomial random_grassmann_even(std::mt19937_64& rng, int generators, bool with_body = true);
SuperPolynomial random_grassmann_odd(std::mt19937_64& rng, int generators);

SuperMatrix random_invertible_supermatrix(std::mt19937_64& rng, int even_dim, int odd_dim, int generators);

// Cayley transform (1 - X)^{-1}(1 + X) of a random X in the orthosymplectic
// Lie superalgebra of super_symplectic_form(ctx).
SuperMatrix random_super_symplectic(const AlgebraContext& ctx, std::mt19937_64& rng, int generators);

}  // namespace superindex

#endif
