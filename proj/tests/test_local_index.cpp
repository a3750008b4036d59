#include "doctest.h"
#include "superindex/local_index.hpp"

using namespace superindex;

namespace {

Polynomial at_zero(const SuperType& t, const Polynomial& p) {
  CartanElement zero{std::vector<Rational>(t.n), std::vector<Rational>(t.a), std::vector<Rational>(t.zhat()), Rational(0)};
  return evaluate_at(t, p, zero);
}

bool even_in(const Polynomial& p, std::size_t var) {
  for (const auto& [e, c] : p.terms())
    if (e[var] % 2) return false;
  return true;
}

}  // namespace

TEST_CASE("index variables") {
  const SuperType t{2, 1, 4};
  CHECK(index_variables(t) == std::vector<std::string>{"g1", "g2", "l1", "k1", "x2", "hbar"});
  CHECK_THROWS_AS((SuperType{1, 2, 1}).validate(), std::invalid_argument);
}

TEST_CASE("degree zero") {
  CHECK(pn_direct({0, 0, 0}).to_string({"x2", "hbar"}) == "1");
  CHECK(pn_direct({0, 1, 1}).to_string({"x2", "hbar"}) == "1");
  CHECK(pn_graphsum({0, 1, 1}).to_string({"x2", "hbar"}) == "1");
  CHECK(closed_form({0, 1, 1}).to_string({"x2", "hbar"}) == "-1");
  CHECK(closed_form({0, 0, 0}).to_string({"x2", "hbar"}) == "1");
}

TEST_CASE("closed form examples") {
  const SuperType t{1, 1, 1};
  CHECK(closed_form(t).to_string(index_variables(t)) == "-x2");
  const SuperType e{2, 0, 0};
  CHECK(closed_form(e).to_string(index_variables(e)) == "1/2 x2^2 - 1/24 g1^2*hbar^2 - 1/24 g2^2*hbar^2");
}

TEST_CASE("direct values") {
  const SuperType t{2, 1, 1};
  CHECK(pn_direct(t).to_string(index_variables(t)) == "1/2 x2^2 - 1/24 g1^2*hbar^2 - 1/24 g2^2*hbar^2 + 1/8 l1^2*hbar^2");
  const SuperType u{2, 0, 2};
  CHECK(pn_direct(u).to_string(index_variables(u)) == "1/2 x2^2 - 1/24 g1^2*hbar^2 - 1/24 g2^2*hbar^2 - 1/8 k1^2*hbar^2");
}

TEST_CASE("direct and graph sum agree") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 2}}) {
      const SuperType t{n, a, b};
      CAPTURE(n);
      CAPTURE(a);
      CAPTURE(b);
      const Polynomial d = pn_direct(t);
      CHECK(d == pn_graphsum(t));
      CHECK(d == pn_direct(t, BasePointReading::Integrated));
    }
  CHECK(pn_direct({4, 1, 1}) == pn_graphsum({4, 1, 1}));
  CHECK_THROWS_AS(pn_direct({5, 0, 0}), std::invalid_argument);
}

TEST_CASE("graph sum is the Ahat cosh cos product") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {0, 3}, {2, 4}}) {
      const SuperType t{n, a, b};
      CHECK(pn_graphsum(t) == ahat_cosh_cos_form(t));
    }
  CHECK_THROWS_AS(pn_graphsum({7, 0, 0}), std::invalid_argument);
}

TEST_CASE("closed form on even types") {
  for (int n = 0; n <= 6; ++n) CHECK(pn_graphsum({n, 0, 0}) == closed_form({n, 0, 0}));
}

TEST_CASE("graph enumeration") {
  // n = 2, one hyperbolic label: {2-cycle}, {unit j=1}, {x2, x2}
  const auto graphs = enumerate_index_graphs({2, 1, 1});
  CHECK(graphs.size() == 3);
  IndexGraph g;
  g.cycles = {{2, 2}, {4, 1}};
  g.units.push_back({FlowerUnit::Kind::Hyperbolic, 1, 1});
  g.x2_vertices = 3;
  CHECK(g.n1() == 8);
  CHECK(g.n2() == 2);
  CHECK(g.automorphisms() == Integer(6 * 2 * 16 * 8 * 2));
}

TEST_CASE("vanishing and evenness") {
  for (int n = 1; n <= 3; ++n) {
    const SuperType t{n, 1, 3};
    const Polynomial d = pn_direct(t);
    CHECK(at_zero(t, d).is_zero());
    CHECK(average(t, d) == d);
    const Polynomial c = closed_form(t);
    for (int i = 0; i < n; ++i) CHECK(even_in(c, static_cast<std::size_t>(i)));
    CHECK(even_in(c, static_cast<std::size_t>(n + 1)));
  }
}

TEST_CASE("average drops odd lambda powers") {
  const SuperType t{2, 2, 2};
  const Polynomial pre = closed_form_before_average(t);
  CHECK(!(average(t, pre) == pre));
  CHECK(average(t, pre) == closed_form(t));
}

TEST_CASE("evaluation at a Cartan element") {
  const SuperType t{1, 1, 3};
  const CartanElement x{{Rational(2)}, {Rational(3)}, {Rational(5)}, Rational(7)};
  CHECK(evaluate_at(t, ahat_cosh_cos_form(t), x).to_string({"hbar"}) == "7");
  const SuperType u{2, 1, 3};
  const CartanElement y{{Rational(1), Rational(2)}, {Rational(3)}, {Rational(4)}, Rational(0)};
  CHECK(evaluate_at(u, pn_direct(u), y) == Polynomial::monomial({2}, ratio(-5, 24) + ratio(9, 8) - Rational(2)));
  const auto ctx = make_context(2, 1, 3);
  CHECK(cartan_embedding(ctx, y) == phi_embed(ctx, CartanKind::Symplectic, 1) + phi_embed(ctx, CartanKind::Symplectic, 2) * Rational(2) +
                                        phi_embed(ctx, CartanKind::Hyperbolic, 1) * Rational(3) +
                                        phi_embed(ctx, CartanKind::Definite, 1) * Rational(4));
}

TEST_CASE("definite flower units") {
  // Units alone give (k/2) cot(k/2) per definite label.
  const SuperType t{0, 0, 4};
  const auto flowers = y2_flower_series(t, 6);
  const std::vector<std::string> v{"k1", "k2"};
  auto cos_half = TruncatedSeries::univariate(v, 6, 0, series_coefficients("cos", 6), ratio(1, 2));
  auto sin_c = series_coefficients("sin", 7);
  auto sin_ratio = TruncatedSeries::univariate(v, 6, 0, std::vector<Rational>(sin_c.begin() + 1, sin_c.end()), ratio(1, 2));
  auto cos_half2 = TruncatedSeries::univariate(v, 6, 1, series_coefficients("cos", 6), ratio(1, 2));
  auto sin_ratio2 = TruncatedSeries::univariate(v, 6, 1, std::vector<Rational>(sin_c.begin() + 1, sin_c.end()), ratio(1, 2));
  CHECK(flowers == cos_half * sin_ratio.inverse() * cos_half2 * sin_ratio2.inverse());
}

TEST_CASE("average examples") {
  const SuperType t{0, 2, 2};
  const auto names = index_variables(t);  // l1, l2, x2, hbar
  const Polynomial l1 = Polynomial::variable(names.size(), 0), l2 = Polynomial::variable(names.size(), 1);
  CHECK(average(t, l1).is_zero());
  CHECK(average(t, l1 * l1 + l1 * l2) == l1 * l1);
  const Polynomial p = l1 * l1 * l2 * l2 + l1 * l2 + l2;
  CHECK(average(t, average(t, p)) == average(t, p));
}
