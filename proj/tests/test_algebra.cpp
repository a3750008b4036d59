#include <random>

#include "doctest.h"
#include "superindex/algebra.hpp"
#include "superindex/supermatrix.hpp"
#include "test_support.hpp"

using namespace superindex;

namespace {

SuperPolynomial P(const AlgebraContext& ctx, const char* text) { return parse_super_polynomial(ctx, text); }

}  // namespace

TEST_CASE("context layout") {
  const auto c = make_context(1, 1, 2);
  CHECK(c.num_odd() == 3);
  CHECK(c.hq() == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  CHECK(c.odd_role_label(0) == "zeta1");
  CHECK(c.odd_role_label(1) == "eta1");
  CHECK(c.odd_role_label(2) == "upsilon");

  const auto d = make_context(1, 1, 1);
  CHECK(d.hq() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK_FALSE(d.has_upsilon());

  const auto e = make_context(2, 1, 1);
  CHECK(e.num_even() == 4);
  CHECK(e.zhat() == 0);

  const auto f = make_context(0, 0, 4);
  CHECK(f.zhat() == 2);
  CHECK(f.hq()[3][3] == -1);
  CHECK(f.odd_role_label(2) == "xi2");

  CHECK_THROWS_AS(make_context(1, 2, 1), std::invalid_argument);
  CHECK(make_context(0, 0, 0).orientation_mask() == 0);
}

TEST_CASE("star product values") {
  const auto c = make_context(1, 0, 2);
  CHECK(star(c, P(c, "p1"), P(c, "q1")) == P(c, "p1*q1 + 1/2*hbar"));
  CHECK(star(c, P(c, "th1"), P(c, "th1")) == P(c, "-1/2*hbar"));
  const auto f = P(c, "p1^2*q1 + 3*th1*th2 - hbar*q1");
  CHECK(star(c, P(c, "1"), f) == f);
  CHECK(star(c, f, P(c, "1")) == f);
}

TEST_CASE("format and parse round trip") {
  const auto c = make_context(2, 1, 2);
  const auto f = P(c, "1/2*hbar*p1*q2 - th1*th3 + 7");
  CHECK(format(c, f) == "7 - th1*th3 + 1/2 hbar*p1*q2");
  CHECK(parse_super_polynomial(c, "7 - th1*th3 + 1/2 hbar*p1*q2") == f);
  CHECK(format(c, P(c, "th3*th1")) == "-th1*th3");
  CHECK(format(c, SuperPolynomial()) == "0");
  CHECK_THROWS_AS(P(c, "th4"), std::invalid_argument);
  CHECK_THROWS_AS(P(c, "p1 +"), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
  const auto c = make_context(2, 1, 1);
  const auto zeta = Variable{Variable::Kind::Odd, c.zeta(1)};
  const auto eta = Variable{Variable::Kind::Odd, c.eta(1)};
  CHECK(partial(c, zeta, P(c, "th1*th2")) == P(c, "th2"));
  CHECK(partial(c, eta, P(c, "th1*th2")) == P(c, "-th1"));
  CHECK(partial(c, parse_variable(c, "p1"), P(c, "p1^2*q2")) == P(c, "2*p1*q2"));
  CHECK_THROWS(parse_variable(c, "th3"));

  std::mt19937_64 rng(5);
  const auto c4 = make_context(1, 1, 3);
  for (int t = 0; t < 10; ++t) {
    const auto f = test::random_element(c4, rng, 4);
    for (int i = 0; i < c4.num_odd(); ++i) {
      const Variable vi{Variable::Kind::Odd, i};
      CHECK(partial(c4, vi, partial(c4, vi, f)).is_zero());
      for (int j = 0; j < c4.num_odd(); ++j) {
        const Variable vj{Variable::Kind::Odd, j};
        CHECK(partial(c4, vi, partial(c4, vj, f)) == -partial(c4, vj, partial(c4, vi, f)));
      }
    }
  }
}

TEST_CASE("brackets and relations") {
  const auto c = make_context(2, 1, 3);
  CHECK(super_bracket(c, P(c, "th2"), P(c, "th1")) == P(c, "hbar"));
  CHECK(super_bracket(c, P(c, "p1"), P(c, "q1")) == P(c, "hbar"));
  CHECK(super_bracket(c, P(c, "p1"), P(c, "q2")).is_zero());
  CHECK(super_bracket(c, P(c, "p1"), P(c, "p2")).is_zero());
  CHECK(super_bracket(c, P(c, "q1"), P(c, "q2")).is_zero());
  const auto f = P(c, "p1*q1 + th1*th2");
  CHECK(super_bracket(c, f, f).is_zero());
  CHECK_THROWS_AS(super_bracket(c, P(c, "th1 + p1"), f), std::invalid_argument);
  for (int i = 0; i < c.num_odd(); ++i)
    for (int j = 0; j < c.num_odd(); ++j) {
      const auto ti = SuperPolynomial::odd_variable(i), tj = SuperPolynomial::odd_variable(j);
      CHECK(star(c, ti, tj) + star(c, tj, ti) == SuperPolynomial::hbar() * Rational(c.h(i, j)));
    }
}

TEST_CASE("clifford relation v*v = hbar Q(v)") {
  const auto c = make_context(0, 2, 3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> cv(c.num_odd());
    SuperPolynomial v;
    for (int i = 0; i < c.num_odd(); ++i) {
      cv[i] = coef(rng);
      v += SuperPolynomial::odd_variable(i) * Rational(cv[i]);
    }
    int q = 0;
    for (int i = 0; i < c.num_odd(); ++i)
      for (int j = 0; j < c.num_odd(); ++j) q += cv[i] * c.h(i, j) * cv[j];
    CHECK(star(c, v, v) == SuperPolynomial::hbar() * ratio(q, 2));
  }
}

TEST_CASE("associativity and graded jacobi") {
  std::mt19937_64 rng(3);
  for (auto [n, a, b] : {std::tuple{1, 1, 1}, std::tuple{1, 0, 2}, std::tuple{2, 1, 2}}) {
    const auto c = make_context(n, a, b);
    for (int t = 0; t < 15; ++t) {
      const auto f = test::random_element(c, rng, 3), g = test::random_element(c, rng, 3),
                 h = test::random_element(c, rng, 3);
      CHECK(star(c, star(c, f, g), h) == star(c, f, star(c, g, h)));
      const auto x = test::random_homogeneous(c, rng, 3), y = test::random_homogeneous(c, rng, 3),
                 z = test::random_homogeneous(c, rng, 3);
      const int px = *x.parity(), py = *y.parity(), pz = *z.parity();
      auto sgn = [](int e) { return Rational(e % 2 ? -1 : 1); };
      const auto j1 = super_bracket(c, x, super_bracket(c, y, z)) * sgn(px * pz);
      const auto j2 = super_bracket(c, y, super_bracket(c, z, x)) * sgn(py * px);
      const auto j3 = super_bracket(c, z, super_bracket(c, x, y)) * sgn(pz * py);
      CHECK((j1 + j2 + j3).is_zero());
      CHECK(super_bracket(c, x, y) == -super_bracket(c, y, x) * sgn(px * py));
    }
  }
}

TEST_CASE("berezin and upsilon") {
  const auto c = make_context(1, 1, 1);
  const auto theta = SuperPolynomial::orientation(c);
  CHECK(berezin(c, theta) == P(c, "1"));
  CHECK(berezin(c, P(c, "1")).is_zero());
  CHECK(berezin(c, P(c, "p1*th1*th2 + th1")) == P(c, "p1"));
  const std::vector<SuperPolynomial> ch1{theta, P(c, "1"), P(c, "1")};
  CHECK(upsilon(c, ch1) == Polynomial::constant(1, Rational(1)));
  const std::vector<SuperPolynomial> ch2{theta, P(c, "q1*p1")};
  CHECK(upsilon(c, ch2).is_zero());
  CHECK(upsilon(c, ch2, ProductKind::Star).is_zero());
  const std::vector<SuperPolynomial> ch3{P(c, "1")};
  CHECK(upsilon(c, ch3).is_zero());
  const auto t = make_context(0, 0, 0);
  const std::vector<SuperPolynomial> ch4{P(t, "3")};
  CHECK(upsilon(t, ch4) == Polynomial::constant(1, Rational(3)));
}

TEST_CASE("phi embedding matches the Cartan matrices") {
  const auto c = make_context(1, 2, 7);  // zeta1 eta1 zeta2 eta2 xi1 mu1 xi2 mu2 upsilon
  CHECK(phi_embed(c, CartanKind::Hyperbolic, 1) == P(c, "th2*th1"));
  CHECK(phi_embed(c, CartanKind::Definite, 1) == P(c, "-th5*th6"));
  CHECK(phi_embed(c, CartanKind::Symplectic, 1) == P(c, "q1*p1"));
  CHECK(phi_embed(c, CartanKind::Center) == P(c, "1"));
  CHECK_THROWS_AS(phi_embed(c, CartanKind::Definite, 3), std::out_of_range);

  // v -> (1/hbar)[Phi(U), v] in the block basis (zetas, etas, xis, mus, upsilon).
  auto action = [&](const SuperPolynomial& u, int theta) {
    return super_bracket(c, u, SuperPolynomial::odd_variable(theta)) * Rational(1);
  };
  const auto h = SuperPolynomial::hbar();
  auto times_hbar = [&](const SuperPolynomial& f) { return symbol_product(h, f); };
  for (int r = 1; r <= 2; ++r) {
    const auto u = phi_embed(c, CartanKind::Hyperbolic, r);
    // -E_{r,r} + E_{a+r,a+r}: zeta_r -> -zeta_r, eta_r -> eta_r, others fixed at 0
    CHECK(action(u, c.zeta(r)) == times_hbar(-SuperPolynomial::odd_variable(c.zeta(r))));
    CHECK(action(u, c.eta(r)) == times_hbar(SuperPolynomial::odd_variable(c.eta(r))));
    CHECK(action(u, c.xi(1)).is_zero());
  }
  for (int s = 1; s <= 2; ++s) {
    const auto u = phi_embed(c, CartanKind::Definite, s);
    // E_{2a+s, 2a+zhat+s}: mu_s -> xi_s, everything else in the image spanned by xi_s only
    CHECK(action(u, c.mu(s)) == times_hbar(SuperPolynomial::odd_variable(c.xi(s))));
    CHECK(action(u, c.xi(s)) == times_hbar(-SuperPolynomial::odd_variable(c.mu(s))));
    CHECK(action(u, c.upsilon()).is_zero());
  }
}

TEST_CASE("linear change by a symplectic shear commutes with star") {
  const auto c = make_context(1, 1, 1);
  LinearChange g;
  g.even = {{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};  // p -> p + 2q
  g.odd = {{Rational(3), Rational(0)}, {Rational(0), ratio(1, 3)}};
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto f = test::random_element(c, rng, 3), h = test::random_element(c, rng, 3);
    CHECK(apply_linear_change(c, g, star(c, f, h)) == star(c, apply_linear_change(c, g, f), apply_linear_change(c, g, h)));
  }
}

TEST_CASE("berezinian") {
  CHECK(berezinian(SuperMatrix::identity(2, 2)) == SuperPolynomial::constant(Rational(1)));
  auto m = SuperMatrix::from_integers(2, 1, {{2, 1, 0}, {1, 3, 0}, {0, 0, 4}});
  CHECK(berezinian(m) == SuperPolynomial::constant(ratio(5, 4)));
  auto sing = SuperMatrix::from_integers(1, 1, {{1, 0}, {0, 0}});
  CHECK_THROWS_AS(berezinian(sing), std::domain_error);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    const auto x = random_invertible_supermatrix(rng, 2, 2, 4), y = random_invertible_supermatrix(rng, 2, 2, 4);
    CHECK(x.is_even());
    CHECK(berezinian(x * y) == symbol_product(berezinian(x), berezinian(y)));
    CHECK(x * inverse(x) == SuperMatrix::identity(2, 2));
    CHECK((x * y).supertranspose() == y.supertranspose() * x.supertranspose());
  }
  for (auto [n, a, b] : {std::tuple{1, 1, 1}, std::tuple{1, 0, 2}, std::tuple{2, 1, 2}}) {
    const auto c = make_context(n, a, b);
    const auto form = super_symplectic_form(c);
    for (int t = 0; t < 3; ++t) {
      const auto mm = random_super_symplectic(c, rng, 4);
      CHECK(mm.supertranspose() * form * mm == form);
      CHECK(berezinian(mm) == SuperPolynomial::constant(Rational(1)));
    }
  }
}
