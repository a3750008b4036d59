// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/genera.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superindex {

TruncatedSeries::TruncatedSeries(std::vector<std::string> variables, int order)
    : vars_(std::move(variables)), order_(order), poly_(vars_.size()) {
  if (order < 0 || order > kMaxSeriesOrder) throw std::invalid_argument("series order out of range");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> variables, int order, const Rational& c) {
  TruncatedSeries s(std::move(variables), order);
  s.poly_ = Polynomial::constant(s.vars_.size(), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> variables, int order, std::size_t index) {
  TruncatedSeries s(std::move(variables), order);
  s.poly_ = Polynomial::variable(s.vars_.size(), index);
  s.truncate();
  return s;
}

TruncatedSeries TruncatedSeries::univariate(std::vector<std::string> variables, int order, std::size_t index,
                                            const std::vector<Rational>& coeffs, const Rational& scale) {
  TruncatedSeries s(std::move(variables), order);
  if (index >= s.vars_.size()) throw std::out_of_range("series variable index");
  Rational power(1);
  for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k) {
    Polynomial::Exponents e(s.vars_.size(), 0);
    e[index] = static_cast<std::uint16_t>(k);
    s.poly_.add_term(e, coeffs[k] * power);
    power *= scale;
  }
  return s;
}

void TruncatedSeries::truncate() {
  Polynomial kept(vars_.size());
  for (const auto& [e, c] : poly_.terms()) {
    int d = 0;
    for (auto x : e) d += x;
    if (d <= order_) kept.add_term(e, c);
  }
  poly_ = std::move(kept);
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.variables() != b.variables() || a.order() != b.order())
    throw std::invalid_argument("series with different variables or order");
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(*this, o);
  poly_ += o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(*this, o);
  poly_ -= o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check_compatible(*this, o);
  Polynomial r(vars_.size());
  Polynomial::Exponents e(vars_.size());
  for (const auto& [ea, ca] : poly_.terms()) {
    const int da = std::accumulate(ea.begin(), ea.end(), 0);
    for (const auto& [eb, cb] : o.poly_.terms()) {
      if (da + std::accumulate(eb.begin(), eb.end(), 0) > order_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  poly_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Rational c0 = constant_term();
  if (c0 == 0) throw std::domain_error("series inverse needs a non-zero constant term");
  // 1/(c0 + N) = (1/c0) sum_k (-N/c0)^k, N nilpotent modulo the truncation
  TruncatedSeries nil = *this - constant(vars_, order_, c0);
  nil *= Rational(-1) / c0;
  TruncatedSeries sum = constant(vars_, order_, Rational(1)), power = sum;
  for (int k = 1; k <= order_; ++k) {
    power *= nil;
    sum += power;
  }
  return sum * (Rational(1) / c0);
}

TruncatedSeries TruncatedSeries::log() const {
  if (constant_term() != 1) throw std::domain_error("series log needs constant term 1");
  const TruncatedSeries nil = *this - constant(vars_, order_, Rational(1));
  TruncatedSeries sum(vars_, order_), power = constant(vars_, order_, Rational(1));
  for (int k = 1; k <= order_; ++k) {
    power *= nil;
    sum += power * ratio(k % 2 ? 1 : -1, k);
  }
  return sum;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (constant_term() != 0) throw std::domain_error("series exp needs constant term 0");
  TruncatedSeries sum = constant(vars_, order_, Rational(1)), power = sum;
  for (int k = 1; k <= order_; ++k) {
    power *= *this;
    power *= Rational(1) / k;
    sum += power;
  }
  return sum;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int degree) const {
  TruncatedSeries s(vars_, order_);
  s.poly_ = poly_.homogeneous_part(degree, std::vector<bool>(vars_.size(), true));
  return s;
}

std::string TruncatedSeries::to_string() const { return poly_.to_string(vars_); }

std::string TruncatedSeries::golden() const {
  std::ostringstream out;
  for (const auto& [e, c] : poly_.terms()) {
    out << '[';
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
    out << "] : " << superindex::to_string(c) << '\n';
  }
  return out.str();
}

namespace {

using Coeffs = std::vector<Rational>;

Coeffs multiply(const Coeffs& a, const Coeffs& b, int order) {
  Coeffs r(order + 1, Rational(0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Coeffs invert(const Coeffs& a, int order) {
  Coeffs r(order + 1, Rational(0));
  r[0] = Rational(1) / a[0];
  for (int k = 1; k <= order; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i) s += a[i] * r[k - i];
    r[k] = -s / a[0];
  }
  return r;
}

Coeffs scale(Coeffs a, const Rational& f) {
  Rational p(1);
  for (auto& c : a) {
    c *= p;
    p *= f;
  }
  return a;
}

// sum_k sign^k x^{parity + 2k}/(parity + 2k + shift)!
Coeffs taylor(int order, int parity, int sign, int shift) {
  Coeffs r(order + 1, Rational(0));
  for (int k = parity, i = 0; k <= order; k += 2, ++i)
    r[k] = Rational(sign < 0 && i % 2 ? -1 : 1) / factorial(k + shift);
  return r;
}

}  // namespace

std::vector<Rational> series_coefficients(std::string_view name, int order) {
  if (order < 0 || order > kMaxSeriesOrder) throw std::invalid_argument("series order out of range");
  const Rational half(1, 2);
  const Coeffs sinhc = taylor(order, 0, 1, 1), sinc = taylor(order, 0, -1, 1);
  if (name == "exp") {
    Coeffs r(order + 1);
    for (int k = 0; k <= order; ++k) r[k] = Rational(1) / factorial(k);
    return r;
  }
  if (name == "sinh") return taylor(order, 1, 1, 0);
  if (name == "cosh") return taylor(order, 0, 1, 0);
  if (name == "sin") return taylor(order, 1, -1, 0);
  if (name == "cos") return taylor(order, 0, -1, 0);
  if (name == "Ahat") return invert(scale(sinhc, half), order);
  if (name == "Bhat") return multiply(scale(taylor(order, 0, 1, 0), half), sinhc, order);
  if (name == "Chat") return multiply(scale(taylor(order, 0, -1, 0), half), sinc, order);
  if (name == "L") return multiply(taylor(order, 0, 1, 0), invert(sinhc, order), order);
  throw std::invalid_argument("unknown series: " + std::string(name));
}

TruncatedSeries series(std::string_view name, const std::vector<std::string>& variables, int order) {
  if (name == "BChat") {
    if (variables.size() != 2) throw std::invalid_argument("BChat takes two variables");
    return TruncatedSeries::univariate(variables, order, 0, series_coefficients("Bhat", order)) *
           TruncatedSeries::univariate(variables, order, 1, series_coefficients("Chat", order));
  }
  if (variables.size() != 1) throw std::invalid_argument("series takes one variable");
  return TruncatedSeries::univariate(variables, order, 0, series_coefficients(name, order));
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

}  // namespace

Cochain lie_antisymmetrize(Cochain b, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("lie_antisymmetrize supports k <= 4");
  return [b = std::move(b), k](std::span<const SuperPolynomial> args) {
    if (static_cast<int>(args.size()) != k + 1) throw std::invalid_argument("cochain arity mismatch");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    Polynomial total(1);
    do {
      std::vector<SuperPolynomial> permuted{args[0]};
      for (int i : perm) permuted.push_back(args[i]);
      const Polynomial v = b(permuted);
      if (total.num_vars() != v.num_vars()) total = Polynomial(v.num_vars());
      total += v * Rational(permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  };
}

SuperPolynomial quadratic_projection(const SuperPolynomial& f) {
  SuperPolynomial r;
  for (const auto& [m, c] : f.terms())
    if (m.degree() == 0 || m.degree() == 2) r.add_term(m, c);
  return r;
}

SuperPolynomial curvature(const AlgebraContext& ctx, const SuperPolynomial& v, const SuperPolynomial& w) {
  return super_bracket(ctx, quadratic_projection(v), quadratic_projection(w)) -
         quadratic_projection(super_bracket(ctx, v, w));
}

namespace {

Polynomial constant_part(const SuperPolynomial& f) {
  Polynomial r(1);
  for (const auto& [m, c] : f.terms())
    if (m.degree() == 0) r.add_term(Polynomial::Exponents{m.hbar}, c);
  return r;
}

}  // namespace

InvariantPolynomial center_functional() { return center_power(1); }

InvariantPolynomial center_power(int m) {
  return {m, [m](std::span<const SuperPolynomial> args) {
            if (static_cast<int>(args.size()) != m) throw std::invalid_argument("invariant polynomial arity");
            Polynomial r = Polynomial::constant(1, Rational(1));
            for (const auto& a : args) r = r * constant_part(a);
            return r;
          }};
}

Polynomial chi(const AlgebraContext& ctx, const InvariantPolynomial& p, std::span<const SuperPolynomial> args) {
  const int m = p.degree;
  if (static_cast<int>(args.size()) != 2 * m) throw std::invalid_argument("chi needs 2m arguments");
  for (const auto& a : args)
    if (a.parity() != 0) throw std::invalid_argument("chi needs even arguments");
  Polynomial total(1);
  std::vector<int> sequence;
  std::vector<bool> used(args.size(), false);
  auto recurse = [&](auto&& self) -> void {
    std::size_t s = 0;
    while (s < args.size() && used[s]) ++s;
    if (s == args.size()) {
      std::vector<SuperPolynomial> curv;
      for (std::size_t i = 0; i < sequence.size(); i += 2) curv.push_back(curvature(ctx, args[sequence[i]], args[sequence[i + 1]]));
      total += p.evaluate(curv) * Rational(permutation_sign(sequence));
      return;
    }
    used[s] = true;
    for (std::size_t t = s + 1; t < args.size(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      sequence.push_back(static_cast<int>(s));
      sequence.push_back(static_cast<int>(t));
      self(self);
      sequence.resize(sequence.size() - 2);
      used[t] = false;
    }
    used[s] = false;
  };
  recurse(recurse);
  return total * (Rational(1) / factorial(m));
}

std::vector<std::string> CurvatureData::symbols() const {
  std::vector<std::string> s;
  for (int i = 1; i <= n; ++i) s.push_back("R" + std::to_string(i));
  for (int i = 1; i <= a; ++i) s.push_back("S" + std::to_string(i));
  for (int i = 1; i <= zhat(); ++i) s.push_back("K" + std::to_string(i));
  s.push_back("Omega");
  s.push_back("hbar");
  return s;
}

namespace {

// [hbar^n F exp(-Omega/hbar)]_n where F is a series in every symbol except
// hbar (Omega last); returns a polynomial in symbols + hbar.
Polynomial insert_hbar(const TruncatedSeries& f_times_exp, int n) {
  const std::size_t nv = f_times_exp.variables().size();  // symbols incl. Omega, without hbar
  Polynomial r(nv + 1);
  const TruncatedSeries part = f_times_exp.homogeneous_part(n);
  for (const auto& [e, c] : part.polynomial().terms()) {
    Polynomial::Exponents f(e);
    f.push_back(static_cast<std::uint16_t>(n - e[nv - 1]));
    r.add_term(f, c);
  }
  return r;
}

TruncatedSeries exp_minus_omega(const std::vector<std::string>& vars, int n) {
  return TruncatedSeries::univariate(vars, n, vars.size() - 1, series_coefficients("exp", n), Rational(-1));
}

}  // namespace

Polynomial rhs_index(const CurvatureData& data) {
  if (data.n < 0 || data.a < 0 || data.a > data.b) throw std::invalid_argument("curvature data type");
  std::vector<std::string> vars = data.symbols();
  vars.pop_back();  // hbar enters through insert_hbar
  const int n = data.n;
  TruncatedSeries prod = TruncatedSeries::constant(vars, n, Rational(1));
  std::size_t idx = 0;
  for (int i = 0; i < data.n; ++i, ++idx)
    prod *= TruncatedSeries::univariate(vars, n, idx, series_coefficients("Ahat", n));
  for (int i = 0; i < data.a; ++i, ++idx)
    prod *= TruncatedSeries::univariate(vars, n, idx, series_coefficients("Bhat", n));
  for (int i = 0; i < data.zhat(); ++i, ++idx)
    prod *= TruncatedSeries::univariate(vars, n, idx, series_coefficients("Chat", n));
  prod *= exp_minus_omega(vars, n);
  const int sign = (data.n + data.a + data.zhat()) % 2 ? -1 : 1;
  return insert_hbar(prod, n) * Rational(sign);
}

Polynomial l_genus_pattern(int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("R" + std::to_string(i));
  vars.push_back("Omega");
  TruncatedSeries prod = TruncatedSeries::constant(vars, n, Rational(1));
  const Coeffs sinhc = taylor(n, 0, 1, 1);
  for (int i = 0; i < n; ++i) {
    prod *= TruncatedSeries::univariate(vars, n, i, series_coefficients("L", n), Rational(1, 2));
    prod *= TruncatedSeries::univariate(vars, n, i, sinhc);
  }
  prod *= exp_minus_omega(vars, n);
  return insert_hbar(prod, n);
}

}  // namespace superindex
