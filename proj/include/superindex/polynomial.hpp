// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_POLYNOMIAL_HPP
#define SUPERINDEX_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superindex/rational.hpp"

namespace superindex {

// Sparse commutative polynomial over the rationals in a fixed number of
// variables. Terms are kept in a std::map so iteration order is canonical.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t num_vars = 0) : nvars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(Exponents e, const Rational& c);

  std::size_t num_vars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  // Antiderivative in one variable, zero constant of integration.
  Polynomial antiderivative(std::size_t var) const;
  Polynomial derivative(std::size_t var) const;
  // Replace variable `var` by the polynomial `value` (same variable count).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Polynomial evaluate(std::size_t var, const Rational& value) const;
  // Sum of terms whose degree in the selected variables equals `degree`.
  Polynomial homogeneous_part(int degree, const std::vector<bool>& counted) const;
  // Same polynomial with variables appended or reindexed: new index of old var i is map[i].
  Polynomial remap(std::size_t new_num_vars, const std::vector<std::size_t>& map) const;

  // Terms in ascending total degree, then descending lexicographic exponent,
  // e.g. "1 - 1/24 t^2 + 7/5760 t^4".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace superindex

#endif
