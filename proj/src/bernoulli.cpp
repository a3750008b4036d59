// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace superindex {

Rational bernoulli_number(unsigned j) {
  // sum_{i=0}^{m} C(m+1, i) B_i = 0
  static std::mutex lock;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard guard(lock);
  while (cache.size() <= j) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational s(0);
    for (unsigned i = 0; i < m; ++i) s += binomial(m + 1, i) * cache[i];
    cache.push_back(-s / (m + 1));
  }
  return cache[j];
}

Polynomial bernoulli_poly(unsigned m) {
  Polynomial p(1);
  for (unsigned k = 0; k <= m; ++k) p.add_term({static_cast<std::uint16_t>(m - k)}, binomial(m, k) * bernoulli_number(k));
  return p;
}

Rational integrate_order_region(const Polynomial& p, std::span<const std::size_t> ordering) {
  Polynomial cur = p;
  for (std::size_t t = 0; t < ordering.size(); ++t) {
    const std::size_t x = ordering[t];
    const Polynomial anti = cur.antiderivative(x);
    const Polynomial lower = anti.evaluate(x, Rational(0));
    if (t + 1 < ordering.size())
      cur = anti.substitute(x, Polynomial::variable(p.num_vars(), ordering[t + 1])) - lower;
    else
      cur = anti.evaluate(x, Rational(1)) - lower;
  }
  if (cur.total_degree() > 0) throw std::invalid_argument("integrand has variables outside the ordering");
  return cur.constant_term();
}

Rational integrate_psi_cube(const PsiProduct& pp, int k, BasePoint v0) {
  const std::size_t nv = static_cast<std::size_t>(k) + 1;
  for (const auto& f : pp.factors) {
    const int lo = v0 == BasePoint::PinnedAtZero ? 0 : 1;
    if (f.i == f.j || f.i < lo || f.j < lo || f.i > k || f.j > k) throw std::invalid_argument("psi factor index");
  }
  Polynomial extra = pp.extra.num_vars() == 0 ? Polynomial::constant(nv, pp.extra.is_zero() ? Rational(1) : pp.extra.constant_term())
                                              : pp.extra;
  if (extra.num_vars() != nv) throw std::invalid_argument("extra polynomial has wrong variable count");
  if (v0 == BasePoint::PinnedAtZero) extra = extra.evaluate(0, Rational(0));

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::vector<int> rank(nv, -1);  // v_0 sits below every v_j when pinned
  Rational total(0);
  do {
    for (int t = 0; t < k; ++t) rank[order[t]] = t;
    Polynomial integrand = extra;
    for (const auto& f : pp.factors) {
      Polynomial lin = Polynomial::variable(nv, f.i) * Rational(2) - Polynomial::variable(nv, f.j) * Rational(2);
      lin += Polynomial::constant(nv, Rational(rank[f.i] < rank[f.j] ? 1 : -1));
      integrand = integrand * lin.pow(f.power);
    }
    if (v0 == BasePoint::PinnedAtZero) integrand = integrand.evaluate(0, Rational(0));
    total += integrate_order_region(integrand, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

Rational integrate_psi_simplex(const PsiProduct& pp, int k) {
  const std::size_t nv = static_cast<std::size_t>(k) + 1;
  Polynomial integrand = pp.extra.num_vars() == 0
                             ? Polynomial::constant(nv, pp.extra.is_zero() ? Rational(1) : pp.extra.constant_term())
                             : pp.extra;
  if (integrand.num_vars() != nv) throw std::invalid_argument("extra polynomial has wrong variable count");
  for (const auto& f : pp.factors) {
    if (f.i == f.j || f.i < 0 || f.j < 0 || f.i > k || f.j > k) throw std::invalid_argument("psi factor index");
    Polynomial lin = Polynomial::variable(nv, f.i) * Rational(2) - Polynomial::variable(nv, f.j) * Rational(2);
    lin += Polynomial::constant(nv, Rational(f.i < f.j ? 1 : -1));
    integrand = integrand * lin.pow(f.power);
  }
  integrand = integrand.evaluate(0, Rational(0));
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{1});
  return integrate_order_region(integrand, order);
}

Rational I_closed(unsigned j) {
  if (j == 0) throw std::invalid_argument("I_closed needs j >= 1");
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 2, j);
  const Rational minus_two_pow = (j % 2) ? Rational(-pw) : Rational(pw);
  return -minus_two_pow * bernoulli_number(j) / factorial(j);
}

Rational Itilde_closed(unsigned j) { return I_closed(j + 1); }

PsiProduct psi_cycle(int j) {
  PsiProduct pp;
  for (int i = 1; i <= j; ++i) pp.factors.push_back({i, i == j ? 1 : i + 1});
  return pp;
}

PsiProduct psi_open_chain(int j) {
  PsiProduct pp;
  for (int i = 1; i < j; ++i) pp.factors.push_back({i, i + 1});
  return pp;
}

PsiProduct psi_rooted_cycle(int j) {
  PsiProduct pp;
  for (int i = 0; i <= j; ++i) pp.factors.push_back({i, i == j ? 0 : i + 1});
  return pp;
}

PsiProduct psi_rooted_chain(int j) {
  PsiProduct pp;
  for (int i = 0; i < j; ++i) pp.factors.push_back({i, i + 1});
  return pp;
}

Polynomial bernoulli_convolution(unsigned n, unsigned m) {
  // variables: 0 = u, 1 = v; split u < v (argument v - u) and u > v (argument v - u + 1)
  const Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1);
  const Polynomial bn = bernoulli_poly(n).remap(2, {0});
  const Polynomial bm = bernoulli_poly(m).remap(2, {0});
  const Polynomial below = bn * bm.substitute(0, v - u);
  const Polynomial above = bn * bm.substitute(0, v - u + Polynomial::constant(2, Rational(1)));
  const Polynomial a1 = below.antiderivative(0), a2 = above.antiderivative(0);
  const Polynomial r = (a1.substitute(0, v) - a1.evaluate(0, Rational(0))) + (a2.evaluate(0, Rational(1)) - a2.substitute(0, v));
  return r.evaluate(0, Rational(0)).remap(1, {0, 0});
}

Polynomial bernoulli_window_integral(unsigned n) {
  const Polynomial anti = bernoulli_poly(n).antiderivative(0);
  const Polynomial x = Polynomial::variable(1, 0);
  return anti.substitute(0, x + Polynomial::constant(1, Rational(1))) - anti;
}

}  // namespace superindex
