// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_GENERA_HPP
#define SUPERINDEX_GENERA_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superindex/algebra.hpp"
#include "superindex/polynomial.hpp"

namespace superindex {

inline constexpr int kMaxSeriesOrder = 30;

// Multivariate power series truncated at total degree `order`.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<std::string> variables, int order);

  static TruncatedSeries constant(std::vector<std::string> variables, int order, const Rational& c);
  static TruncatedSeries variable(std::vector<std::string> variables, int order, std::size_t index);
  // sum_k coeffs[k] * (scale * x_index)^k
  static TruncatedSeries univariate(std::vector<std::string> variables, int order, std::size_t index,
                                    const std::vector<Rational>& coeffs, const Rational& scale = Rational(1));

  const std::vector<std::string>& variables() const { return vars_; }
  int order() const { return order_; }
  const Polynomial& polynomial() const { return poly_; }
  Rational coefficient(const Polynomial::Exponents& e) const { return poly_.coefficient(e); }
  Rational constant_term() const { return poly_.constant_term(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.poly_ == b.poly_;
  }

  TruncatedSeries inverse() const;  // needs a non-zero constant term
  TruncatedSeries log() const;      // needs constant term 1
  TruncatedSeries exp() const;      // needs constant term 0
  TruncatedSeries homogeneous_part(int degree) const;

  // "1 - 1/24 t^2 + 7/5760 t^4"
  std::string to_string() const;
  // One line per term, "[e1,e2,...] : p/q", lexicographic in the exponent vector.
  std::string golden() const;

 private:
  void truncate();
  std::vector<std::string> vars_;
  int order_;
  Polynomial poly_;
};

// Taylor coefficients up to `order` of a named one-variable series:
// Ahat (t/2)/sinh(t/2), Bhat cosh(s/2) sinh(s)/s, Chat cos(r/2) sin(r)/r,
// L t/tanh(t), exp, cosh, sinh, sin, cos.
std::vector<Rational> series_coefficients(std::string_view name, int order);

// Named series in the given variables. BChat takes two variables (s, r) and is
// Bhat(s) Chat(r); every other name takes one.
TruncatedSeries series(std::string_view name, const std::vector<std::string>& variables, int order);

using Cochain = std::function<Polynomial(std::span<const SuperPolynomial>)>;

// b^Lie(a_1..a_k)(a_0) = sum_{s in S_k} sign(s) b(a_0, a_s(1), .., a_s(k)); arguments are a_0..a_k.
Cochain lie_antisymmetrize(Cochain b, int k);

// Homogeneous quadratic plus constant part (hbar counts as a constant).
SuperPolynomial quadratic_projection(const SuperPolynomial& f);

// C(v, w) = [pr v, pr w] - pr([v, w]).
SuperPolynomial curvature(const AlgebraContext& ctx, const SuperPolynomial& v, const SuperPolynomial& w);

// Symmetric multilinear function of m elements of the quadratic-plus-constant part.
struct InvariantPolynomial {
  int degree;
  std::function<Polynomial(std::span<const SuperPolynomial>)> evaluate;
};

// Constant-term functional (the gl_1 part), degree 1.
InvariantPolynomial center_functional();
// Product of m copies of the constant-term functional.
InvariantPolynomial center_power(int m);

// chi(P)(v_1 ^ .. ^ v_2m) = 1/m! sum over sigma in S_2m/(S_2)^m of sign(sigma) P(C(v_s1, v_s2), ..).
// Arguments must be even.
Polynomial chi(const AlgebraContext& ctx, const InvariantPolynomial& p, std::span<const SuperPolynomial> args);

// Formal curvature symbols for a type (2n|a,b): roots R_i, hyperbolic S_r, definite K_s and Omega.
struct CurvatureData {
  int n = 0, a = 0, b = 0;
  int zhat() const { return (b - a) / 2; }
  std::vector<std::string> symbols() const;  // R1.., S1.., K1.., Omega, hbar
};

// Degree-n part (each symbol of cohomological degree 2) of
// (-1)^{n+a+zhat} hbar^n prod Ahat(R_i) prod Bhat(S_r) prod Chat(K_s) exp(-Omega/hbar),
// as a polynomial in CurvatureData::symbols().
Polynomial rhs_index(const CurvatureData& data);

// hbar^n [L(M) Ahat(-TM) exp(-Omega/hbar)]_n for roots R_1..R_n, built from the
// L series at R/2 and sinh(R)/R; variables R1..Rn, Omega, hbar.
Polynomial l_genus_pattern(int n);

}  // namespace superindex

#endif
