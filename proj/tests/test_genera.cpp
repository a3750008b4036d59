#include "doctest.h"
#include "superindex/bernoulli.hpp"
#include "superindex/genera.hpp"

using namespace superindex;

namespace {

TruncatedSeries one_var(std::string_view name, int order) { return series(name, {"t"}, order); }

}  // namespace

TEST_CASE("named series") {
  CHECK(one_var("Ahat", 4).to_string() == "1 - 1/24 t^2 + 7/5760 t^4");
  CHECK(one_var("L", 4).to_string() == "1 + 1/3 t^2 - 1/45 t^4");
  CHECK(one_var("exp", 3).constant_term() == 1);
  CHECK(one_var("cosh", 4).to_string() == "1 + 1/2 t^2 + 1/24 t^4");
  CHECK(one_var("sin", 5).to_string() == "t - 1/6 t^3 + 1/120 t^5");
  CHECK(one_var("Bhat", 2).to_string() == "1 + 7/24 t^2");
  CHECK(one_var("Chat", 2).to_string() == "1 - 7/24 t^2");
  CHECK_THROWS_AS(one_var("Zeta", 2), std::invalid_argument);
  CHECK_THROWS_AS(one_var("exp", kMaxSeriesOrder + 1), std::invalid_argument);
}

TEST_CASE("two-variable BChat") {
  const auto s = series("BChat", {"s", "r"}, 2);
  CHECK(s.to_string() == "1 + 7/24 s^2 - 7/24 r^2");
  CHECK_THROWS_AS(series("BChat", {"s"}, 2), std::invalid_argument);
}

TEST_CASE("ring operations") {
  const std::vector<std::string> v{"x", "y"};
  const auto x = TruncatedSeries::variable(v, 6, 0), y = TruncatedSeries::variable(v, 6, 1);
  const auto one = TruncatedSeries::constant(v, 6, Rational(1));
  const auto f = one + x + y * x * Rational(3);
  CHECK(f * f.inverse() == one);
  CHECK((x + y).exp().log() == x + y);
  CHECK(((x * y).exp() * (x * Rational(-1) * y).exp()) == one);
  CHECK((x * x * x * x * x * x * x).polynomial().is_zero());
  CHECK_THROWS(x.inverse());
}

TEST_CASE("golden format") {
  CHECK(one_var("Ahat", 2).golden() == "[0] : 1\n[2] : -1/24\n");
}

TEST_CASE("log identities") {
  const int order = 8;
  const std::vector<std::string> v{"x"};
  std::vector<Rational> cycles(order + 1), signed_cycles(order + 1);
  for (int j = 2; j <= order; ++j) {
    const Rational w = I_closed(static_cast<unsigned>(j)) / Rational(j * (1 << j));
    cycles[j] = w;
    if (j % 2 == 0) signed_cycles[j] = (j / 2) % 2 ? w : -w;
  }
  CHECK(TruncatedSeries::univariate(v, order, 0, cycles) == series("Ahat", v, order).log());
  auto sin_half = series_coefficients("sin", order + 1);
  std::vector<Rational> sinc(sin_half.begin() + 1, sin_half.end());
  const auto sin_ratio = TruncatedSeries::univariate(v, order, 0, sinc, ratio(1, 2));
  CHECK(TruncatedSeries::univariate(v, order, 0, signed_cycles) == sin_ratio.log());
}

TEST_CASE("L genus identity") {
  const int order = 8;
  // (t/2)/sinh(t/2) cosh(t/2) sinh(t)/t = L(t/2) sinh(t)/t
  const std::vector<std::string> v{"t"};
  auto shifted = [&](std::string_view name) {
    auto c = series_coefficients(name, order + 1);
    return TruncatedSeries::univariate(v, order, 0, std::vector<Rational>(c.begin() + 1, c.end()));
  };
  const auto lhs = one_var("Ahat", order) * TruncatedSeries::univariate(v, order, 0, series_coefficients("cosh", order), ratio(1, 2)) *
                   shifted("sinh");
  const auto rhs = TruncatedSeries::univariate(v, order, 0, series_coefficients("L", order), ratio(1, 2)) * shifted("sinh");
  CHECK(lhs == rhs);
  CHECK(one_var("Ahat", order) * one_var("Bhat", order) == rhs);
}

TEST_CASE("multiplicativity over roots") {
  const std::vector<std::string> v{"a", "b", "c"};
  TruncatedSeries prod = TruncatedSeries::constant(v, 6, Rational(1));
  for (std::size_t i = 0; i < 3; ++i) prod *= TruncatedSeries::univariate(v, 6, i, series_coefficients("Ahat", 6));
  CHECK(prod.coefficient({2, 2, 0}) == ratio(1, 576));
  CHECK(prod.coefficient({2, 2, 2}) == ratio(-1, 13824));
  CHECK(prod.coefficient({4, 0, 0}) == ratio(7, 5760));
}

TEST_CASE("lie antisymmetrization") {
  const auto ctx = make_context(1, 0, 0);
  const auto p = parse_super_polynomial(ctx, "p1"), q = parse_super_polynomial(ctx, "q1");
  const Cochain b = [&](std::span<const SuperPolynomial> args) {
    Polynomial r = Polynomial::constant(1, Rational(1));
    for (const auto& a : args) r = r * upsilon(ctx, std::span<const SuperPolynomial>(&a, 1), ProductKind::Symbol);
    return r + Polynomial::constant(1, Rational(static_cast<long>(args.size())));
  };
  const SuperPolynomial one = SuperPolynomial::constant(Rational(1));
  const std::vector<SuperPolynomial> a0{one}, a1{one, p}, a2{one, p, q};
  CHECK(lie_antisymmetrize(b, 0)(a0) == b(a0));
  CHECK(lie_antisymmetrize(b, 1)(a1) == b(a1));
  // b is symmetric in its last two slots, so the k = 2 antisymmetrization vanishes
  CHECK(lie_antisymmetrize(b, 2)(a2).is_zero());
  CHECK_THROWS_AS(lie_antisymmetrize(b, 5), std::invalid_argument);
}

TEST_CASE("chi on p, q") {
  const auto ctx = make_context(1, 0, 0);
  const std::vector<SuperPolynomial> pq{parse_super_polynomial(ctx, "p1"), parse_super_polynomial(ctx, "q1")};
  const std::vector<SuperPolynomial> qp{pq[1], pq[0]};
  const Polynomial minus_hbar = Polynomial::monomial({1}, Rational(-1));
  CHECK(chi(ctx, center_functional(), pq) == minus_hbar);
  CHECK(chi(ctx, center_functional(), qp) == -minus_hbar);
}

TEST_CASE("chi vanishes on the Cartan image") {
  const auto ctx = make_context(2, 1, 3);
  const std::vector<SuperPolynomial> cartan{phi_embed(ctx, CartanKind::Symplectic, 1), phi_embed(ctx, CartanKind::Hyperbolic, 1),
                                            phi_embed(ctx, CartanKind::Definite, 1), phi_embed(ctx, CartanKind::Center)};
  const auto other = parse_super_polynomial(ctx, "p1*p2^2 + q2 + th1*th3*p1 + th2*th4");
  for (const auto& h : cartan) {
    const std::vector<SuperPolynomial> args{h, other};
    CHECK(chi(ctx, center_functional(), args).is_zero());
  }
  const std::vector<SuperPolynomial> four{parse_super_polynomial(ctx, "p1"), parse_super_polynomial(ctx, "q1"),
                                          parse_super_polynomial(ctx, "p2"), parse_super_polynomial(ctx, "q2")};
  CHECK(chi(ctx, center_power(2), four) == Polynomial::monomial({2}, ratio(1, 2)));
  const std::vector<SuperPolynomial> odd{parse_super_polynomial(ctx, "th1"), parse_super_polynomial(ctx, "th2")};
  CHECK_THROWS_AS(chi(ctx, center_functional(), odd), std::invalid_argument);
}

TEST_CASE("rhs index") {
  const auto r0 = rhs_index({0, 1, 1});
  CHECK(r0 == Polynomial::constant(r0.num_vars(), Rational(-1)));
  // all curvature zero, n = 1: only the Omega term survives
  const CurvatureData d{1, 0, 2};
  const auto r = rhs_index(d);
  CHECK(r.to_string(d.symbols()) == "-Omega");
  CHECK(rhs_index({1, 0, 0}).to_string(CurvatureData{1, 0, 0}.symbols()) == "Omega");
  CHECK(rhs_index({1, 1, 1}).to_string(CurvatureData{1, 1, 1}.symbols()) == "-Omega");
}

TEST_CASE("rhs index on the cotangent pattern is the L genus") {
  for (int n = 0; n <= 6; ++n) {
    const CurvatureData d{n, n, n};
    const Polynomial r = rhs_index(d);
    // identify S_i with R_i: variables R1..Rn, S1..Sn, Omega, hbar -> R1..Rn, Omega, hbar
    std::vector<std::size_t> map;
    for (int i = 0; i < n; ++i) map.push_back(i);
    for (int i = 0; i < n; ++i) map.push_back(i);
    map.push_back(n);
    map.push_back(n + 1);
    CHECK(r.remap(n + 2, map) == l_genus_pattern(n));
  }
}
