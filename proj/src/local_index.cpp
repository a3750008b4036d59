// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/local_index.hpp"

#include <functional>
#include <stdexcept>

#include "superindex/bernoulli.hpp"
#include "superindex/genera.hpp"
#include "superindex/hochschild.hpp"

namespace superindex {

void SuperType::validate() const {
  if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("type entries must be non-negative");
  if (a > b) throw std::invalid_argument("type needs a <= b");
  if (a + b > 24) throw std::invalid_argument("type needs a + b <= 24");
}

namespace {

// Index layout shared by every polynomial in this file.
struct Layout {
  int n, a, z;
  std::size_t gamma(int i) const { return static_cast<std::size_t>(i); }
  std::size_t lambda(int r) const { return static_cast<std::size_t>(n + r); }
  std::size_t kappa(int s) const { return static_cast<std::size_t>(n + a + s); }
  std::size_t x2() const { return static_cast<std::size_t>(n + a + z); }
  std::size_t hbar() const { return x2() + 1; }
  std::size_t size() const { return hbar() + 1; }
};

Layout layout(const SuperType& t) { return {t.n, t.a, t.zhat()}; }

Polynomial var(const Layout& L, std::size_t i) { return Polynomial::variable(L.size(), i); }

Rational power_of_two(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1) / Rational(p) : Rational(p);
}

}  // namespace

std::vector<std::string> index_variables(const SuperType& t) {
  std::vector<std::string> out;
  for (int i = 1; i <= t.n; ++i) out.push_back("g" + std::to_string(i));
  for (int r = 1; r <= t.a; ++r) out.push_back("l" + std::to_string(r));
  for (int s = 1; s <= t.zhat(); ++s) out.push_back("k" + std::to_string(s));
  out.push_back("x2");
  out.push_back("hbar");
  return out;
}

SuperPolynomial cartan_embedding(const AlgebraContext& ctx, const CartanElement& x) {
  SuperPolynomial out = SuperPolynomial::constant(x.x2);
  for (std::size_t i = 0; i < x.gamma.size(); ++i)
    out += phi_embed(ctx, CartanKind::Symplectic, static_cast<int>(i) + 1) * x.gamma[i];
  for (std::size_t r = 0; r < x.lambda.size(); ++r)
    out += phi_embed(ctx, CartanKind::Hyperbolic, static_cast<int>(r) + 1) * x.lambda[r];
  for (std::size_t s = 0; s < x.kappa.size(); ++s)
    out += phi_embed(ctx, CartanKind::Definite, static_cast<int>(s) + 1) * x.kappa[s];
  return out;
}

Polynomial evaluate_at(const SuperType& t, const Polynomial& p, const CartanElement& x) {
  const Layout L = layout(t);
  if (static_cast<int>(x.gamma.size()) != t.n || static_cast<int>(x.lambda.size()) != t.a ||
      static_cast<int>(x.kappa.size()) != L.z)
    throw std::invalid_argument("Cartan element does not match the type");
  Polynomial out(1);
  for (const auto& [e, c] : p.terms()) {
    Rational v = c;
    auto mul = [&](const Rational& base, std::uint16_t k) {
      for (std::uint16_t i = 0; i < k; ++i) v *= base;
    };
    for (int i = 0; i < t.n; ++i) mul(x.gamma[i], e[L.gamma(i)]);
    for (int r = 0; r < t.a; ++r) mul(x.lambda[r], e[L.lambda(r)]);
    for (int s = 0; s < L.z; ++s) mul(x.kappa[s], e[L.kappa(s)]);
    mul(x.x2, e[L.x2()]);
    out.add_term(Polynomial::Exponents{e[L.hbar()]}, v);
  }
  return out;
}

Polynomial pn_direct(const SuperType& t, BasePointReading reading) {
  t.validate();
  if (t.n > kMaxPairs) throw std::invalid_argument("pn_direct supports n <= 4");
  const AlgebraContext ctx(t.n, t.a, t.b);
  const Layout L = layout(t);

  struct Basis {
    SuperPolynomial element;
    std::size_t variable;
  };
  std::vector<Basis> basis;
  for (int i = 0; i < t.n; ++i) basis.push_back({phi_embed(ctx, CartanKind::Symplectic, i + 1), L.gamma(i)});
  for (int r = 0; r < t.a; ++r) basis.push_back({phi_embed(ctx, CartanKind::Hyperbolic, r + 1), L.lambda(r)});
  for (int s = 0; s < L.z; ++s) basis.push_back({phi_embed(ctx, CartanKind::Definite, s + 1), L.kappa(s)});
  basis.push_back({phi_embed(ctx, CartanKind::Center), L.x2()});

  const Region region = reading == BasePointReading::Pinned ? Region::CubePinned : Region::CubeFree;
  Polynomial out(L.size());
  // Every ordering of a multiset contributes equally, so X^{(x) n}/n! collapses to
  // sum over multisets of prod c_b^{m_b}/m_b! times one ordered chain.
  std::vector<int> mult(basis.size(), 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t b, int left) {
    if (b + 1 == basis.size()) {
      mult[b] = left;
      std::vector<SuperPolynomial> slots{SuperPolynomial::orientation(ctx)};
      Polynomial::Exponents e(L.size(), 0);
      Rational weight(1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (int k = 0; k < mult[i]; ++k) slots.push_back(basis[i].element);
        e[basis[i].variable] = static_cast<std::uint16_t>(mult[i]);
        weight /= factorial(static_cast<unsigned>(mult[i]));
      }
      const Polynomial v = upsilon_integrated(ctx, omega_apply(ctx, TensorChain::from_slots(slots)), region);
      for (const auto& [h, c] : v.terms()) {
        auto ee = e;
        ee[L.hbar()] = h[0];
        out.add_term(ee, weight * c);
      }
      return;
    }
    for (int m = 0; m <= left; ++m) {
      mult[b] = m;
      visit(b + 1, left - m);
    }
  };
  visit(0, t.n);
  return out;
}

int IndexGraph::n1() const {
  int s = 0;
  for (const auto& [j, l] : cycles) s += j * l;
  return s;
}

int IndexGraph::n2() const {
  int s = 0;
  for (const auto& u : units) s += u.petal + 1;
  return s;
}

Integer IndexGraph::automorphisms() const {
  Integer out = factorial(static_cast<unsigned>(x2_vertices)).get_num();
  for (const auto& [j, l] : cycles) {
    out *= factorial(static_cast<unsigned>(l)).get_num();
    for (int k = 0; k < l; ++k) out *= 2 * j;
  }
  for (std::size_t u = 0; u < units.size(); ++u) out *= 2;
  return out;
}

std::vector<IndexGraph> enumerate_index_graphs(const SuperType& t) {
  t.validate();
  const int z = t.zhat();
  std::vector<IndexGraph> out;

  // Cycle multisets with total size m, lengths taken from [min_len, m].
  std::function<void(int, int, std::map<int, int>&, std::vector<std::map<int, int>>&)> cycles =
      [&](int m, int min_len, std::map<int, int>& cur, std::vector<std::map<int, int>>& acc) {
        if (m == 0) {
          acc.push_back(cur);
          return;
        }
        for (int j = min_len; j <= m; ++j) {
          ++cur[j];
          cycles(m - j, j, cur, acc);
          if (--cur[j] == 0) cur.erase(j);
        }
      };

  // Labels 0..a-1 hyperbolic, a..a+z-1 definite; each label carries at most one unit.
  std::function<void(int, int, std::vector<FlowerUnit>&, std::vector<std::vector<FlowerUnit>>&)> units =
      [&](int label, int m, std::vector<FlowerUnit>& cur, std::vector<std::vector<FlowerUnit>>& acc) {
        if (m == 0) {
          acc.push_back(cur);
          return;
        }
        if (label == t.a + z) return;
        units(label + 1, m, cur, acc);
        const bool hyperbolic = label < t.a;
        const FlowerUnit::Kind kind = hyperbolic ? FlowerUnit::Kind::Hyperbolic : FlowerUnit::Kind::Definite;
        const int index = hyperbolic ? label + 1 : label - t.a + 1;
        for (int j = 1; j + 1 <= m; j += 2) {
          cur.push_back({kind, index, j});
          units(label + 1, m - j - 1, cur, acc);
          cur.pop_back();
        }
      };

  for (int n3 = 0; n3 <= t.n; ++n3)
    for (int n2 = 0; n2 + n3 <= t.n; n2 += 2) {
      const int n1 = t.n - n2 - n3;
      std::vector<std::map<int, int>> cycle_sets;
      std::map<int, int> cur;
      cycles(n1, 2, cur, cycle_sets);
      std::vector<std::vector<FlowerUnit>> unit_sets;
      std::vector<FlowerUnit> ucur;
      units(0, n2, ucur, unit_sets);
      for (const auto& cs : cycle_sets)
        for (const auto& us : unit_sets) out.push_back({cs, us, n3});
    }
  return out;
}

Polynomial graph_weight(const SuperType& t, const IndexGraph& g) {
  const Layout L = layout(t);
  const Polynomial h = var(L, L.hbar());
  Polynomial out = Polynomial::constant(L.size(), Rational(1));
  for (const auto& [j, l] : g.cycles) {
    const Rational ij = I_closed(static_cast<unsigned>(j));
    if (ij == 0) return Polynomial(L.size());
    const Rational scale = power_of_two(1 - j);
    Polynomial inner(L.size());
    for (int i = 0; i < t.n; ++i) inner += var(L, L.gamma(i)).pow(j) * scale;
    for (int r = 0; r < t.a; ++r) inner -= var(L, L.lambda(r)).pow(j) * scale;
    const Rational sign = (j / 2) % 2 ? Rational(-1) : Rational(1);
    for (int s = 0; s < L.z; ++s) inner -= var(L, L.kappa(s)).pow(j) * (sign * scale);
    const Polynomial cycle = h.pow(j) * inner * ij;
    out = out * cycle.pow(l);
  }
  for (const auto& u : g.units) {
    const Rational w = I_closed(static_cast<unsigned>(u.petal + 1)) * power_of_two(-u.petal);
    if (u.kind == FlowerUnit::Kind::Hyperbolic) {
      out = out * (h.pow(u.petal + 1) * var(L, L.lambda(u.index - 1)).pow(u.petal + 1) * (-w));
    } else {
      const Rational sign = ((u.petal + 1) / 2) % 2 ? Rational(-1) : Rational(1);
      out = out * (h.pow(u.petal + 1) * var(L, L.kappa(u.index - 1)).pow(u.petal + 1) * (-sign * w));
    }
  }
  return out * var(L, L.x2()).pow(g.x2_vertices);
}

Polynomial pn_graphsum(const SuperType& t) {
  t.validate();
  if (t.n > 6) throw std::invalid_argument("pn_graphsum supports n <= 6");
  Polynomial out(layout(t).size());
  for (const auto& g : enumerate_index_graphs(t))
    out += graph_weight(t, g) * (Rational(1) / Rational(g.automorphisms()));
  return out;
}

TruncatedSeries y2_flower_series(const SuperType& t, int order) {
  t.validate();
  const int z = t.zhat();
  std::vector<std::string> names;
  for (int s = 1; s <= z; ++s) names.push_back("k" + std::to_string(s));
  if (z == 0) return TruncatedSeries::constant(names, order, Rational(1));
  // A lone unit is one graph class with two automorphisms; reuse graph_weight for its value.
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  const Layout L = layout(t);
  for (int j = 1; j + 1 <= order; j += 2) {
    IndexGraph g;
    g.units.push_back({FlowerUnit::Kind::Definite, 1, j});
    Polynomial::Exponents e(L.size(), 0);
    e[L.kappa(0)] = static_cast<std::uint16_t>(j + 1);
    e[L.hbar()] = static_cast<std::uint16_t>(j + 1);
    coeffs[j + 1] = graph_weight(t, g).coefficient(e) / Rational(g.automorphisms());
  }
  TruncatedSeries out = TruncatedSeries::constant(names, order, Rational(1));
  for (int s = 0; s < z; ++s) out *= TruncatedSeries::univariate(names, order, static_cast<std::size_t>(s), coeffs);
  return out;
}

Polynomial average(const SuperType& t, const Polynomial& p) {
  const Layout L = layout(t);
  Polynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    bool even = true;
    for (int r = 0; r < t.a; ++r) even = even && e[L.lambda(r)] % 2 == 0;
    if (even) out.add_term(e, c);
  }
  return out;
}

namespace {

enum class LambdaFactor { Sinh, ExpMinusOne, None };

// Degree-n part of a product of one-variable factors in (gamma, lambda, kappa, x2),
// then hbar^{degree outside x2}.
Polynomial product_form(const SuperType& t, LambdaFactor lf, bool with_sin, bool sign) {
  t.validate();
  const Layout L = layout(t);
  const int order = t.n;
  auto names = index_variables(t);
  names.pop_back();
  auto shifted = [&](std::string_view name) {
    const auto c = series_coefficients(name, order + 1);
    return std::vector<Rational>(c.begin() + 1, c.end());
  };
  auto uni = [&](std::size_t idx, const std::vector<Rational>& c, const Rational& scale = Rational(1)) {
    return TruncatedSeries::univariate(names, order, idx, c, scale);
  };
  TruncatedSeries s = TruncatedSeries::constant(names, order, Rational(1));
  const auto ahat = series_coefficients("Ahat", order);
  const auto cosh = series_coefficients("cosh", order);
  const auto cos = series_coefficients("cos", order);
  for (int i = 0; i < t.n; ++i) s *= uni(L.gamma(i), ahat);
  for (int r = 0; r < t.a; ++r) {
    s *= uni(L.lambda(r), cosh, ratio(1, 2));
    if (lf == LambdaFactor::Sinh) s *= uni(L.lambda(r), shifted("sinh"));
    if (lf == LambdaFactor::ExpMinusOne) s *= uni(L.lambda(r), shifted("exp"));
  }
  for (int k = 0; k < L.z; ++k) {
    s *= uni(L.kappa(k), cos, ratio(1, 2));
    if (with_sin) s *= uni(L.kappa(k), shifted("sin"));
  }
  s *= uni(L.x2(), series_coefficients("exp", order));
  if (sign && (t.a + L.z) % 2) s *= Rational(-1);

  Polynomial out(L.size());
  const TruncatedSeries part = s.homogeneous_part(t.n);
  for (const auto& [e, c] : part.polynomial().terms()) {
    Polynomial::Exponents ee(e.begin(), e.end());
    ee.push_back(static_cast<std::uint16_t>(t.n - e[L.x2()]));
    out.add_term(ee, c);
  }
  return out;
}

}  // namespace

Polynomial closed_form(const SuperType& t) { return product_form(t, LambdaFactor::Sinh, true, true); }

Polynomial closed_form_before_average(const SuperType& t) {
  return product_form(t, LambdaFactor::ExpMinusOne, true, true);
}

Polynomial ahat_cosh_cos_form(const SuperType& t) { return product_form(t, LambdaFactor::None, false, false); }

}  // namespace superindex
