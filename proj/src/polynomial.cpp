// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superindex {

namespace {

int degree_of(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("polynomial variable index");
  Exponents e(num_vars, 0);
  e[index] = 1;
  Polynomial p(num_vars);
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial r(a.nvars_);
  Polynomial::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::antiderivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e_in, c] : terms_) {
    auto e = e_in;
    e[var] = static_cast<std::uint16_t>(e[var] + 1);
    r.add_term(e, c / e[var]);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e_in, c] : terms_) {
    auto e = e_in;
    if (e[var] == 0) continue;
    Rational f = c * e[var];
    e[var] = static_cast<std::uint16_t>(e[var] - 1);
    r.add_term(e, f);
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  if (value.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  std::vector<Polynomial> powers{constant(nvars_, Rational(1))};
  Polynomial r(nvars_);
  for (const auto& [e_in, c] : terms_) {
    auto e = e_in;
    const unsigned k = e[var];
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    e[var] = 0;
    r += monomial(e, c) * powers[k];
  }
  return r;
}

Polynomial Polynomial::evaluate(std::size_t var, const Rational& value) const {
  Polynomial r(nvars_);
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [e_in, c] : terms_) {
    auto e = e_in;
    const unsigned k = e[var];
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    e[var] = 0;
    r.add_term(e, c * powers[k]);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree, const std::vector<bool>& counted) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (counted[i]) d += e[i];
    if (d == degree) r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::remap(std::size_t new_num_vars, const std::vector<std::size_t>& map) const {
  Polynomial r(new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_num_vars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f[map[i]] = static_cast<std::uint16_t>(f[map[i]] + e[i]);
    r.add_term(f, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const int dx = degree_of(x->first), dy = degree_of(y->first);
    if (dx != dy) return dx < dy;
    return x->first > y->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names.at(i);
      if (t->first[i] > 1) mono += '^' + std::to_string(t->first[i]);
    }
    const Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += superindex::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += superindex::to_string(mag) + " " + mono;
  }
  return out;
}

}  // namespace superindex
