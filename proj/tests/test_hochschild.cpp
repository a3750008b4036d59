#include <random>

#include "doctest.h"
#include "superindex/hochschild.hpp"
#include "test_support.hpp"

using namespace superindex;

namespace {

SuperPolynomial P(const AlgebraContext& ctx, const char* text) { return parse_super_polynomial(ctx, text); }

TensorChain T(const std::vector<SuperPolynomial>& slots) { return TensorChain::from_slots(slots); }

Polynomial hbar_const(const Rational& c) { return Polynomial::constant(1, c); }

std::vector<SuperPolynomial> random_chain(const AlgebraContext& ctx, std::mt19937_64& rng, int len, int degree) {
  std::vector<SuperPolynomial> chain;
  for (int s = 0; s < len; ++s) chain.push_back(random_trace_slot(ctx, rng, degree, 4));
  return chain;
}

}  // namespace

TEST_CASE("alpha_ij") {
  const auto c = make_context(1, 1, 1);
  const auto one = P(c, "1");
  CHECK(alpha_ij(c, 1, 2, T({one, P(c, "p1"), P(c, "q1")})) == T({one, one, one}) * ratio(1, 2));
  CHECK(alpha_ij(c, 2, 1, T({one, P(c, "p1"), P(c, "q1")})) == T({one, one, one}) * ratio(-1, 2));
  CHECK(alpha_ij(c, 1, 2, T({one, P(c, "th1"), P(c, "th2")})).is_zero());
  CHECK(alpha_ij(c, 1, 2, T({one, P(c, "q1"), P(c, "q1")})).is_zero());
  CHECK_THROWS_AS(alpha_ij(c, 1, 3, T({one, one, one})), std::out_of_range);
}

TEST_CASE("g_ij on the orientation") {
  const auto c = make_context(0, 1, 1);
  const auto theta = SuperPolynomial::orientation(c);
  const auto y = phi_embed(c, CartanKind::Hyperbolic, 1);
  const auto chain = T({theta, y});
  CHECK(g_ij(c, 1, 1, chain).is_zero());
  CHECK(g_ij(c, 0, 0, chain).is_zero());
  // Two applications reach 1 (x) 1; the sign comes from the Koszul rule on the second one.
  const auto one = P(c, "1");
  CHECK(g_ij(c, 0, 1, g_ij(c, 0, 1, chain)) == T({one, one}) * ratio(-1, 2));
  // Ordered operators anticommute under relabelling.
  const auto mixed = T({P(c, "th1"), P(c, "th2")});
  CHECK(g_ij(c, 1, 0, mixed) == g_ij(c, 0, 1, mixed) * Rational(-1));
}

TEST_CASE("omega_apply") {
  const auto c = make_context(1, 1, 1);
  const auto one = P(c, "1");
  const auto consts = T({one, P(c, "3")});
  CHECK(omega_apply(c, consts) == consts);
  const auto quad = T({P(c, "p1"), P(c, "q1")});
  CHECK_THROWS_AS(omega_apply(c, quad, 0), std::logic_error);
  const auto w = omega_apply(c, T({SuperPolynomial::orientation(c), P(c, "th2*th1")}));
  int max_order = 0;
  for (const auto& [key, coef] : w.terms()) max_order = std::max<int>(max_order, key.psi[0]);
  CHECK(max_order == 2);
}

TEST_CASE("pi_2n") {
  const auto c = make_context(1, 0, 0);
  const auto one = P(c, "1");
  const auto x = T({one, P(c, "p1"), P(c, "q1")});
  CHECK(pi_2n(c, x) == alpha_ij(c, 1, 2, x));
  CHECK(pi_2n(c, x) == T({one, one, one}) * ratio(1, 2));
  const auto y = T({P(c, "p1 + q1")});
  CHECK(pi_2n(c, y) == y);
  const auto c2 = make_context(2, 0, 0);
  // five slots: matchings {12,34} - {13,24} + {14,23}
  const std::vector<SuperPolynomial> s{P(c2, "1"), P(c2, "p1"), P(c2, "p2"), P(c2, "q1"), P(c2, "q2")};
  const auto one2 = P(c2, "1");
  CHECK(pi_2n(c2, T(s)) == T({one2, one2, one2, one2, one2}) * ratio(-1, 4));
}

TEST_CASE("tau at n = 0 and n = 1") {
  for (auto [a, b] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{0, 3}, std::pair{2, 2}}) {
    const auto c = make_context(0, a, b);
    const std::vector<SuperPolynomial> ch{SuperPolynomial::orientation(c)};
    CHECK(tau(c, ch) == hbar_const(1));
  }
  const auto c = make_context(0, 1, 1);
  const std::vector<SuperPolynomial> ze{P(c, "th1*th2")};
  CHECK(tau(c, ze) == hbar_const(1));
  for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 1}}) {
    const auto c1 = make_context(1, a, b);
    const std::vector<SuperPolynomial> ones(3, P(c1, "1"));
    CHECK(tau(c1, ones).is_zero());
  }
  const auto e = make_context(1, 0, 0);
  const std::vector<SuperPolynomial> pq{P(e, "1"), P(e, "p1"), P(e, "q1")};
  // pi contributes 1/2, the simplex 0 < v1 < v2 < 1 has volume 1/2
  CHECK(tau(e, pq) == hbar_const(ratio(1, 4)));
  CHECK_THROWS_AS(tau(e, std::vector<SuperPolynomial>{P(e, "1"), P(e, "1")}), std::invalid_argument);
}

TEST_CASE("hochschild boundary") {
  const auto c = make_context(0, 1, 1);
  const auto x = P(c, "th1"), y = P(c, "th2");
  const std::vector<SuperPolynomial> xy{x, y};
  const auto d = hochschild_boundary(c, xy);
  REQUIRE(d.size() == 2);
  CHECK(to_tensor(d) == T({super_bracket(c, x, y)}));
  CHECK(tau_of_boundary(c, xy).is_zero());
  CHECK_THROWS_AS(hochschild_boundary(c, std::vector<SuperPolynomial>{P(c, "th1 + 1"), y}), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (auto [n, a, b] : {std::tuple{1, 0, 0}, std::tuple{1, 1, 1}, std::tuple{0, 0, 3}}) {
    const auto ctx = make_context(n, a, b);
    for (int len = 3; len <= 5; ++len)
      for (int t = 0; t < 3; ++t) {
        std::vector<SuperPolynomial> chain;
        for (int s = 0; s < len; ++s)
          chain.push_back(random_homogeneous_polynomial(ctx, rng, 2, 2, std::uniform_int_distribution<int>(0, 1)(rng)));
        ChainSum dd;
        for (const auto& [c1, face] : hochschild_boundary(ctx, chain))
          for (const auto& [c2, homog] : split_homogeneous(face))
            for (const auto& [c3, f2] : hochschild_boundary(ctx, homog)) dd.emplace_back(c1 * c2 * c3, f2);
        CHECK(to_tensor(dd).is_zero());
      }
  }
}

TEST_CASE("supertrace property at n = 0 on Clifford bases") {
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}, std::pair{0, 4}, std::pair{2, 2}, std::pair{1, 3}}) {
    const auto c = make_context(0, a, b);
    const int dim = 1 << c.num_odd();
    int failures = 0;
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y) {
        SuperMonomial mx, my;
        mx.odd = x;
        my.odd = y;
        const std::vector<SuperPolynomial> ch{SuperPolynomial::term(mx, 1), SuperPolynomial::term(my, 1)};
        failures += !tau_of_boundary(c, ch).is_zero();
      }
    CHECK(failures == 0);
  }
}

TEST_CASE("cocycle property at n = 1 on random chains") {
  std::mt19937_64 rng(7);
  for (auto [n, a, b] : {std::tuple{1, 0, 0}, std::tuple{1, 1, 1}, std::tuple{1, 0, 2}}) {
    const auto c = make_context(n, a, b);
    for (int t = 0; t < 4; ++t) {
      const auto chain = random_chain(c, rng, 4, 2);
      CHECK(tau_of_boundary(c, chain).is_zero());
    }
  }
}

TEST_CASE("parity selection") {
  std::mt19937_64 rng(8);
  const auto c = make_context(1, 1, 2);
  for (int t = 0; t < 6; ++t) {
    std::vector<SuperPolynomial> chain;
    int total = 0;
    for (int s = 0; s < 3; ++s) {
      const int p = std::uniform_int_distribution<int>(0, 1)(rng);
      total += p;
      chain.push_back(random_homogeneous_polynomial(c, rng, 3, 3, p));
    }
    if (total % 2 != c.num_odd() % 2) CHECK(tau(c, chain).is_zero());
  }
}

TEST_CASE("tau is invariant under linear symplectic and orthogonal changes") {
  std::mt19937_64 rng(12);
  {
    const auto c = make_context(1, 1, 1);
    LinearChange g;
    g.even = {{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    g.odd = {{Rational(3), Rational(0)}, {Rational(0), ratio(1, 3)}};
    for (int t = 0; t < 4; ++t) {
      auto chain = random_chain(c, rng, 3, 2);
      std::vector<SuperPolynomial> moved;
      for (const auto& s : chain) moved.push_back(apply_linear_change(c, g, s));
      CHECK(tau(c, moved) == tau(c, chain));
    }
  }
  {
    const auto c = make_context(1, 0, 2);
    LinearChange g;
    g.even = {{Rational(1), Rational(0)}, {Rational(-1), Rational(1)}};
    g.odd = {{ratio(3, 5), ratio(4, 5)}, {ratio(-4, 5), ratio(3, 5)}};
    for (int t = 0; t < 4; ++t) {
      auto chain = random_chain(c, rng, 3, 2);
      std::vector<SuperPolynomial> moved;
      for (const auto& s : chain) moved.push_back(apply_linear_change(c, g, s));
      CHECK(tau(c, moved) == tau(c, chain));
    }
  }
}

TEST_CASE("relative condition") {
  std::mt19937_64 rng(4);
  for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 1}}) {
    const auto c = make_context(1, a, b);
    std::vector<std::vector<SuperPolynomial>> chains;
    for (int t = 0; t < 2; ++t) chains.push_back(random_chain(c, rng, 2, 2));
    const auto gens = quadratic_generators(c);
    const auto report = check_relative(c, chains, gens);
    CHECK(report.evaluations == static_cast<int>(chains.size() * gens.size()));
    CHECK(report.nonzero_rho_insertions == 0);
  }
}

TEST_CASE("HH_0 of Clifford algebras") {
  for (int a = 0; a <= 2; ++a)
    for (int b = a; a + b <= 4; ++b) CHECK(hh0_dimension(a, b) == 1);
  CHECK_THROWS(hh0_dimension(1, 4));
}
