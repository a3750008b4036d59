// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/supermatrix.hpp"

#include <stdexcept>

namespace superindex {

SuperMatrix::SuperMatrix(int even_dim, int odd_dim)
    : e_(even_dim), o_(odd_dim), entries_(static_cast<std::size_t>((even_dim + odd_dim) * (even_dim + odd_dim))) {}

SuperMatrix SuperMatrix::identity(int even_dim, int odd_dim) {
  SuperMatrix m(even_dim, odd_dim);
  for (int i = 0; i < m.size(); ++i) m.at(i, i) = SuperPolynomial::constant(Rational(1));
  return m;
}

SuperMatrix SuperMatrix::from_integers(int even_dim, int odd_dim, const std::vector<std::vector<int>>& v) {
  SuperMatrix m(even_dim, odd_dim);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m.at(i, j) = SuperPolynomial::constant(Rational(v.at(i).at(j)));
  return m;
}

bool SuperMatrix::is_even() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      const auto p = at(i, j).parity();
      const int want = (i < e_) != (j < e_) ? 1 : 0;
      if (!p || (!at(i, j).is_zero() && *p != want)) return false;
    }
  return true;
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  if (x.e_ != y.e_ || x.o_ != y.o_) throw std::invalid_argument("supermatrix shape mismatch");
  SuperMatrix r(x.e_, x.o_);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      for (int k = 0; k < x.size(); ++k) r.at(i, j) += symbol_product(x.at(i, k), y.at(k, j));
  return r;
}

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix r = x;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += y.entries_.at(i);
  return r;
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix r = x;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= y.entries_.at(i);
  return r;
}

SuperMatrix SuperMatrix::supertranspose() const {
  SuperMatrix r(e_, o_);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      // entry (j, i) moves to (i, j); the lower-left block of the result is -B^T
      const bool negate = i >= e_ && j < e_;
      r.at(i, j) = negate ? -at(j, i) : at(j, i);
    }
  return r;
}

SuperPolynomial invert_even(const SuperPolynomial& x) {
  const Rational body = x.coefficient(SuperMonomial{});
  if (body == 0) throw std::domain_error("Grassmann element with zero body is not invertible");
  SuperPolynomial nil = x - SuperPolynomial::constant(body);
  nil *= Rational(-1) / body;
  SuperPolynomial sum = SuperPolynomial::constant(Rational(1));
  SuperPolynomial power = sum;
  for (;;) {
    power = symbol_product(power, nil);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * (Rational(1) / body);
}

SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return SuperPolynomial::constant(Rational(1));
  if (k == 1) return m[0][0];
  SuperPolynomial det;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<SuperPolynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<SuperPolynomial> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    SuperPolynomial t = symbol_product(m[0][col], determinant(minor));
    if (col % 2) det -= t; else det += t;
  }
  return det;
}

namespace {

using Block = std::vector<std::vector<SuperPolynomial>>;

Block block(const SuperMatrix& m, int r0, int rn, int c0, int cn) {
  Block b(rn, std::vector<SuperPolynomial>(cn));
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < cn; ++j) b[i][j] = m.at(r0 + i, c0 + j);
  return b;
}

Block multiply(const Block& x, const Block& y) {
  const std::size_t rows = x.size(), inner = y.size(), cols = y.empty() ? 0 : y[0].size();
  Block r(rows, std::vector<SuperPolynomial>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) r[i][j] += symbol_product(x[i][k], y[k][j]);
  return r;
}

Block subtract(Block x, const Block& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) x[i][j] -= y[i][j];
  return x;
}

Block negate(Block x) {
  for (auto& row : x)
    for (auto& v : row) v = -v;
  return x;
}

// Inverse of a block with commuting entries: adjugate over determinant.
Block invert_commuting(const Block& m) {
  const std::size_t k = m.size();
  const SuperPolynomial inv_det = invert_even(determinant(m));
  Block r(k, std::vector<SuperPolynomial>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Block minor;
      for (std::size_t a = 0; a < k; ++a) {
        if (a == j) continue;
        std::vector<SuperPolynomial> row;
        for (std::size_t b = 0; b < k; ++b)
          if (b != i) row.push_back(m[a][b]);
        minor.push_back(std::move(row));
      }
      SuperPolynomial cof = symbol_product(determinant(minor), inv_det);
      r[i][j] = (i + j) % 2 ? -cof : cof;
    }
  return r;
}

}  // namespace

SuperPolynomial berezinian(const SuperMatrix& m) {
  const int e = m.even_dim(), o = m.odd_dim();
  const Block A = block(m, 0, e, 0, e), B = block(m, 0, e, e, o), C = block(m, e, o, 0, e), D = block(m, e, o, e, o);
  const SuperPolynomial det_d = determinant(D);
  if (det_d.coefficient(SuperMonomial{}) == 0) throw std::domain_error("berezinian: D block is singular");
  const Block schur = subtract(A, multiply(multiply(B, invert_commuting(D)), C));
  return symbol_product(determinant(schur), invert_even(det_d));
}

SuperMatrix inverse(const SuperMatrix& m) {
  const int e = m.even_dim(), o = m.odd_dim();
  const Block A = block(m, 0, e, 0, e), B = block(m, 0, e, e, o), C = block(m, e, o, 0, e), D = block(m, e, o, e, o);
  const Block Ainv = invert_commuting(A), Dinv = invert_commuting(D);
  const Block S = invert_commuting(subtract(A, multiply(multiply(B, Dinv), C)));  // (A - B D^-1 C)^-1
  const Block T = invert_commuting(subtract(D, multiply(multiply(C, Ainv), B)));  // (D - C A^-1 B)^-1
  const Block upper_right = negate(multiply(multiply(Ainv, B), T));
  const Block lower_left = negate(multiply(multiply(Dinv, C), S));
  SuperMatrix r(e, o);
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) r.at(i, j) = S[i][j];
    for (int j = 0; j < o; ++j) r.at(i, e + j) = upper_right[i][j];
  }
  for (int i = 0; i < o; ++i) {
    for (int j = 0; j < e; ++j) r.at(e + i, j) = lower_left[i][j];
    for (int j = 0; j < o; ++j) r.at(e + i, e + j) = T[i][j];
  }
  return r;
}

SuperMatrix super_symplectic_form(const AlgebraContext& ctx) {
  const int n = ctx.n(), e = ctx.num_even(), o = ctx.num_odd();
  SuperMatrix h(e, o);
  for (int i = 0; i < n; ++i) {
    h.at(i, n + i) = SuperPolynomial::constant(Rational(1));
    h.at(n + i, i) = SuperPolynomial::constant(Rational(-1));
  }
  for (int i = 0; i < o; ++i)
    for (int j = 0; j < o; ++j)
      if (ctx.h(i, j)) h.at(e + i, e + j) = SuperPolynomial::constant(Rational(ctx.h(i, j)));
  return h;
}

namespace {

Rational small_coefficient(std::mt19937_64& rng) { return Rational(std::uniform_int_distribution<int>(-3, 3)(rng)); }

}  // namespace

SuperPolynomial random_grassmann_even(std::mt19937_64& rng, int generators, bool with_body) {
  SuperPolynomial x;
  if (with_body) x = SuperPolynomial::constant(small_coefficient(rng));
  for (int i = 0; i < generators; ++i)
    for (int j = i + 1; j < generators; ++j) {
      SuperMonomial m;
      m.odd = (1u << i) | (1u << j);
      x.add_term(m, small_coefficient(rng));
    }
  return x;
}

SuperPolynomial random_grassmann_odd(std::mt19937_64& rng, int generators) {
  SuperPolynomial x;
  for (int i = 0; i < generators; ++i) x += SuperPolynomial::odd_variable(i) * small_coefficient(rng);
  return x;
}

SuperMatrix random_invertible_supermatrix(std::mt19937_64& rng, int even_dim, int odd_dim, int generators) {
  for (;;) {
    SuperMatrix m(even_dim, odd_dim);
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        m.at(i, j) = (i < even_dim) == (j < even_dim) ? random_grassmann_even(rng, generators)
                                                      : random_grassmann_odd(rng, generators);
    const Block A = block(m, 0, even_dim, 0, even_dim), D = block(m, even_dim, odd_dim, even_dim, odd_dim);
    if (determinant(A).coefficient(SuperMonomial{}) != 0 && determinant(D).coefficient(SuperMonomial{}) != 0)
      return m;
  }
}

SuperMatrix random_super_symplectic(const AlgebraContext& ctx, std::mt19937_64& rng, int generators) {
  const int n = ctx.n(), e = ctx.num_even(), o = ctx.num_odd();
  auto J = [&](int i, int j) { return (i < n && j == n + i) ? 1 : (i >= n && j == i - n) ? -1 : 0; };
  for (;;) {
    SuperMatrix S(e, o), K(e, o), C(e, o);
    for (int i = 0; i < e; ++i)
      for (int j = i; j < e; ++j) S.at(i, j) = S.at(j, i) = random_grassmann_even(rng, generators);
    for (int i = 0; i < o; ++i)
      for (int j = i + 1; j < o; ++j) {
        K.at(e + i, e + j) = random_grassmann_even(rng, generators);
        K.at(e + j, e + i) = -K.at(e + i, e + j);
      }
    for (int i = 0; i < o; ++i)
      for (int j = 0; j < e; ++j) C.at(e + i, j) = random_grassmann_odd(rng, generators);
    // A = J S, D = hQ K, B = J C^T hQ satisfy X^st H + H X = 0.
    SuperMatrix X(e, o);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        for (int k = 0; k < e; ++k)
          if (J(i, k)) X.at(i, j) += S.at(k, j) * Rational(J(i, k));
    for (int i = 0; i < o; ++i)
      for (int j = 0; j < o; ++j)
        for (int k = 0; k < o; ++k)
          if (ctx.h(i, k)) X.at(e + i, e + j) += K.at(e + k, e + j) * Rational(ctx.h(i, k));
    for (int i = 0; i < o; ++i)
      for (int j = 0; j < e; ++j) X.at(e + i, j) = C.at(e + i, j);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < o; ++j)
        for (int k = 0; k < e; ++k)
          for (int l = 0; l < o; ++l)
            if (J(i, k) && ctx.h(l, j)) X.at(i, e + j) += C.at(e + l, k) * Rational(J(i, k) * ctx.h(l, j));
    const SuperMatrix one = SuperMatrix::identity(e, o);
    const SuperMatrix minus = one - X;
    const Block A = block(minus, 0, e, 0, e), D = block(minus, e, o, e, o);
    if (determinant(A).coefficient(SuperMonomial{}) == 0 || determinant(D).coefficient(SuperMonomial{}) == 0) continue;
    return inverse(minus) * (one + X);
  }
}

}  // namespace superindex
