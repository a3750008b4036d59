// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_ALGEBRA_HPP
#define SUPERINDEX_ALGEBRA_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superindex/polynomial.hpp"
#include "superindex/rational.hpp"

namespace superindex {

inline constexpr int kMaxPairs = 4;
inline constexpr int kMaxOdd = 24;

enum class OddRole { Zeta, Eta, Xi, Mu, Upsilon };

struct OddName {
  OddRole role;
  int index;  // 1-based within its role
};

// Type (2n|a,b). Odd variables are ordered zeta_1, eta_1, ..., zeta_a, eta_a,
// xi_1, mu_1, ..., xi_zhat, mu_zhat, then upsilon when b - a is odd.
class AlgebraContext {
 public:
  AlgebraContext() : AlgebraContext(0, 0, 0) {}
  AlgebraContext(int n, int a, int b);

  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int zhat() const { return (b_ - a_) / 2; }
  bool has_upsilon() const { return (b_ - a_) % 2 != 0; }
  int num_even() const { return 2 * n_; }
  int num_odd() const { return a_ + b_; }

  int h(int i, int j) const { return hq_[i][j]; }
  const std::vector<std::vector<int>>& hq() const { return hq_; }
  const std::vector<OddName>& odd_names() const { return odd_names_; }
  std::uint32_t orientation_mask() const { return num_odd() == 0 ? 0u : (num_odd() == 32 ? ~0u : (1u << num_odd()) - 1u); }

  // 0-based indices into the variable lists; role indices are 1-based.
  int p(int i) const;
  int q(int i) const;
  int zeta(int r) const;
  int eta(int r) const;
  int xi(int s) const;
  int mu(int s) const;
  int upsilon() const;

  std::string odd_role_label(int theta_index) const;  // "zeta1", "xi2", "upsilon"

 private:
  int n_, a_, b_;
  std::vector<std::vector<int>> hq_;
  std::vector<OddName> odd_names_;
};

inline AlgebraContext make_context(int n, int a, int b) { return AlgebraContext(n, a, b); }

struct SuperMonomial {
  std::array<std::uint8_t, 2 * kMaxPairs> even{};  // p_1..p_n, q_1..q_n
  std::uint32_t odd = 0;                           // ascending theta order
  std::uint16_t hbar = 0;

  auto operator<=>(const SuperMonomial&) const = default;
  int parity() const;
  int even_degree() const;
  int degree() const;  // even degree plus odd count, hbar not counted
};

// Sign of theta_A * theta_B brought to ascending order; 0 when A and B overlap.
int odd_product_sign(std::uint32_t a, std::uint32_t b);
// Sign of the left derivative d/dtheta_i acting on theta_mask (i must be present).
int odd_derivative_sign(std::uint32_t mask, int i);

class SuperPolynomial {
 public:
  using TermMap = std::map<SuperMonomial, Rational>;

  SuperPolynomial() = default;
  static SuperPolynomial constant(const Rational& c);
  static SuperPolynomial term(const SuperMonomial& m, const Rational& c);
  static SuperPolynomial even_variable(int index);
  static SuperPolynomial odd_variable(int index);
  static SuperPolynomial hbar();
  static SuperPolynomial orientation(const AlgebraContext& ctx);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SuperMonomial& m, const Rational& c);
  Rational coefficient(const SuperMonomial& m) const;
  // Parity of a homogeneous element; zero counts as even; nullopt if mixed.
  std::optional<int> parity() const;
  int degree() const;  // max SuperMonomial::degree, -1 for zero

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const Rational& c);
  friend SuperPolynomial operator+(SuperPolynomial x, const SuperPolynomial& y) { return x += y; }
  friend SuperPolynomial operator-(SuperPolynomial x, const SuperPolynomial& y) { return x -= y; }
  friend SuperPolynomial operator*(SuperPolynomial x, const Rational& c) { return x *= c; }
  friend SuperPolynomial operator*(const Rational& c, SuperPolynomial x) { return x *= c; }
  SuperPolynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

 private:
  TermMap terms_;
};

// Supercommutative (symbol) product: theta_i theta_j = -theta_j theta_i.
SuperPolynomial symbol_product(const SuperPolynomial& f, const SuperPolynomial& g);

// f * g = sum_k (hbar/2)^k / k! m(P^k (f (x) g)) with
// P = sum_l (d_p_l (x) d_q_l - d_q_l (x) d_p_l) - sum_ij h_ij d_theta_i (x) d_theta_j.
SuperPolynomial star(const AlgebraContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g);

struct Variable {
  enum class Kind { Even, Odd } kind;
  int index;  // 0-based
};
Variable parse_variable(const AlgebraContext& ctx, std::string_view name);

SuperPolynomial partial(const AlgebraContext& ctx, Variable var, const SuperPolynomial& f);

// [f,g] = f*g - (-1)^{|f||g|} g*f; throws for inhomogeneous arguments.
SuperPolynomial super_bracket(const AlgebraContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g);

// Coefficient of the top odd monomial theta_1...theta_{a+b}.
SuperPolynomial berezin(const AlgebraContext& ctx, const SuperPolynomial& f);

// Drops every term containing an even variable.
SuperPolynomial at_zero_even(const SuperPolynomial& f);

enum class ProductKind { Symbol, Star };

// Multiplies the chain, sets p = q = 0 and takes the Berezin integral.
// The result is a polynomial in hbar (one variable).
Polynomial upsilon(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain,
                   ProductKind kind = ProductKind::Symbol);

enum class CartanKind { Symplectic, Hyperbolic, Definite, Center };

// q_i p_i, eta_i zeta_i, -xi_j mu_j, or 1.
SuperPolynomial phi_embed(const AlgebraContext& ctx, CartanKind kind, int index = 1);

// Homogeneous quadratic monomials spanning the image of sp_2n + so_{a,b}.
std::vector<SuperPolynomial> quadratic_generators(const AlgebraContext& ctx);

// Linear change of generators: x_k -> sum_l even[k][l] x_l, theta_i -> sum_j odd[i][j] theta_j.
struct LinearChange {
  std::vector<std::vector<Rational>> even;
  std::vector<std::vector<Rational>> odd;
};
SuperPolynomial apply_linear_change(const AlgebraContext& ctx, const LinearChange& g, const SuperPolynomial& f);

// Canonical text: terms in SuperMonomial order, e.g. "p1*q1 + 1/2 hbar", "th1*th3".
std::string format(const AlgebraContext& ctx, const SuperPolynomial& f);
// Parses sums of products of rationals, p1.., q1.., th1.., hbar and Theta.
// Juxtaposition by '*' is the symbol product.
SuperPolynomial parse_super_polynomial(const AlgebraContext& ctx, std::string_view text);

}  // namespace superindex

#endif
