#include "doctest.h"
#include "superindex/bernoulli.hpp"

using namespace superindex;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == ratio(-1, 2));
  CHECK(bernoulli_number(2) == ratio(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == ratio(-1, 30));
  CHECK(bernoulli_number(12) == ratio(-691, 2730));
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(1).to_string({"v"}) == "-1/2 + v");
  CHECK(bernoulli_poly(2).to_string({"v"}) == "1/6 - v + v^2");
  for (unsigned m = 0; m <= 8; ++m) CHECK(bernoulli_poly(m).evaluate(0, Rational(0)).constant_term() == bernoulli_number(m));
}

TEST_CASE("order region integrals") {
  const Polynomial v0 = Polynomial::variable(2, 0), v1 = Polynomial::variable(2, 1);
  const std::size_t ord[] = {0, 1};
  CHECK(integrate_order_region(Polynomial::constant(2, Rational(1)), ord) == ratio(1, 2));
  CHECK(integrate_order_region(v0, ord) == ratio(1, 6));
  CHECK(integrate_order_region(v1, ord) == ratio(1, 3));
}

TEST_CASE("psi integrals") {
  PsiProduct square{{{1, 2, 2}}, Polynomial(0)};
  CHECK(integrate_psi_cube(square, 2) == ratio(1, 3));
  PsiProduct single{{{1, 2, 1}}, Polynomial(0)};
  CHECK(integrate_psi_cube(single, 2) == 0);
  CHECK(integrate_psi_simplex(PsiProduct{{{0, 1, 1}}, Polynomial(0)}, 1) == 0);
  CHECK(integrate_psi_simplex(PsiProduct{{}, Polynomial(0)}, 2) == ratio(1, 2));
}

TEST_CASE("cycle integrals match the Bernoulli closed form") {
  CHECK(I_closed(2) == ratio(-1, 3));
  CHECK(I_closed(4) == ratio(1, 45));
  for (int j = 2; j <= 6; ++j) CHECK(integrate_psi_cube(psi_cycle(j), j) == I_closed(static_cast<unsigned>(j)));
}

TEST_CASE("pinned cycles keep the torus value") {
  for (int j = 1; j <= 5; ++j) {
    CHECK(integrate_psi_cube(psi_rooted_cycle(j), j, BasePoint::PinnedAtZero) == Itilde_closed(static_cast<unsigned>(j)));
    CHECK(Itilde_closed(static_cast<unsigned>(j)) == I_closed(static_cast<unsigned>(j) + 1));
  }
  CHECK(Itilde_closed(1) == ratio(-1, 3));
}

TEST_CASE("open chains integrate to zero") {
  for (int j = 2; j <= 5; ++j) CHECK(integrate_psi_cube(psi_open_chain(j), j) == 0);
  for (int j = 1; j <= 4; ++j) CHECK(integrate_psi_cube(psi_rooted_chain(j), j, BasePoint::PinnedAtZero) == 0);
}

TEST_CASE("convolution identity") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      const Rational c = -factorial(n) * factorial(m) / factorial(n + m);
      CHECK(bernoulli_convolution(n, m) == bernoulli_poly(n + m) * c);
    }
  // With B_0 = 1 the left side is the mean of B_m, which is 0.
  CHECK(bernoulli_convolution(0, 2).is_zero());
}

TEST_CASE("window integral") {
  const Polynomial x = Polynomial::variable(1, 0);
  for (unsigned n = 0; n <= 5; ++n) CHECK(bernoulli_window_integral(n) == x.pow(n));
}
