// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "superindex/bernoulli.hpp"
#include "superindex/genera.hpp"
#include "superindex/hochschild.hpp"
#include "superindex/random.hpp"
#include "superindex/supermatrix.hpp"

namespace superindex {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "fail";
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bernoulli", "algebra", "trace", "cocycle", "local-index", "genera"};
  return names;
}

SuperType parse_type(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int v = 0;
    const auto* first = text.data() + start;
    const auto* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw std::invalid_argument("type must be 2n,a,b");
    parts.push_back(v);
    start = end + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("type must be 2n,a,b");
  if (parts[0] % 2) throw std::invalid_argument("type needs an even dimension 2n");
  SuperType t{parts[0] / 2, parts[1], parts[2]};
  t.validate();
  return t;
}

namespace {

std::string type_label(const SuperType& t) {
  return std::to_string(2 * t.n) + "-" + std::to_string(t.a) + "-" + std::to_string(t.b);
}

std::string type_text(const SuperType& t) {
  return "(" + std::to_string(2 * t.n) + "|" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

Check equality(std::string id, std::string anchor, const std::string& value, const std::string& expected) {
  return {std::move(id), std::move(anchor), value, expected, value == expected ? Status::Pass : Status::Fail};
}

Check truth(std::string id, std::string anchor, bool ok, std::string value, std::string expected) {
  return {std::move(id), std::move(anchor), std::move(value), std::move(expected), ok ? Status::Pass : Status::Fail};
}

std::string count_text(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

// Evaluates fn(0..count-1) on worker threads; results keep index order.
template <typename Fn>
auto parallel_map(int count, Fn fn) -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  const int workers = std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::future<std::vector<std::pair<int, R>>>> jobs;
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [=, &fn] {
      std::vector<std::pair<int, R>> out;
      for (int i = w; i < count; i += workers) out.emplace_back(i, fn(i));
      return out;
    }));
  std::vector<R> results(static_cast<std::size_t>(count));
  for (auto& j : jobs)
    for (auto& [i, r] : j.get()) results[static_cast<std::size_t>(i)] = std::move(r);
  return results;
}

// Independent generator per suite, derived from the run seed.
std::mt19937_64 suite_rng(std::uint64_t seed, std::string_view suite) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string_view>{}(suite) & 0xffffffffu)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------- bernoulli

std::vector<Check> bernoulli_suite(const RunConfig&) {
  std::vector<Check> out;
  for (int j = 2; j <= 5; ++j) {
    const Rational v = integrate_psi_cube(psi_cycle(j), j);
    out.push_back(equality("bernoulli.cycle-integral.j" + std::to_string(j),
                           "int over [0,1]^j of psi(v1-v2)...psi(vj-v1) = -(-2)^j B_j / j!", to_string(v),
                           to_string(I_closed(static_cast<unsigned>(j)))));
  }
  for (int j = 1; j <= 4; ++j) {
    const Rational v = integrate_psi_cube(psi_rooted_cycle(j), j, BasePoint::PinnedAtZero);
    out.push_back(equality("bernoulli.pinned-cycle.j" + std::to_string(j),
                           "cycle through a vertex pinned at 0 keeps the torus value I_{j+1}", to_string(v),
                           to_string(I_closed(static_cast<unsigned>(j) + 1))));
  }
  const std::vector<std::string> v{"v"};
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      const Polynomial rhs = bernoulli_poly(n + m) * (-factorial(n) * factorial(m) / factorial(n + m));
      out.push_back(equality("bernoulli.convolution.n" + std::to_string(n) + "-m" + std::to_string(m),
                             "int_0^1 B_n(u) B_m(v-u) du = -n! m!/(n+m)! B_{n+m}(v)",
                             bernoulli_convolution(n, m).to_string(v), rhs.to_string(v)));
    }
  const std::vector<std::string> x{"x"};
  for (unsigned n = 0; n <= 5; ++n)
    out.push_back(equality("bernoulli.window.n" + std::to_string(n), "int_x^{x+1} B_n(u) du = x^n",
                           bernoulli_window_integral(n).to_string(x), Polynomial::variable(1, 0).pow(n).to_string(x)));
  return out;
}

// ------------------------------------------------------------------ algebra

std::vector<SuperType> algebra_types(const RunConfig& cfg) {
  if (cfg.type) return {*cfg.type};
  return {{1, 1, 1}, {1, 0, 2}, {2, 2, 2}};
}

std::vector<Check> algebra_suite(const RunConfig& cfg) {
  std::vector<Check> out;
  auto rng = suite_rng(cfg.seed, "algebra");
  for (const SuperType& t : algebra_types(cfg)) {
    const AlgebraContext ctx(t.n, t.a, t.b);
    const std::string tag = type_label(t);

    constexpr int kTriples = 100;
    std::vector<std::array<SuperPolynomial, 3>> triples;
    for (int i = 0; i < kTriples; ++i)
      triples.push_back({random_super_polynomial(ctx, rng, 3, 4), random_super_polynomial(ctx, rng, 3, 4),
                         random_super_polynomial(ctx, rng, 3, 4)});
    const auto assoc = parallel_map(kTriples, [&](int i) {
      const auto& [f, g, h] = triples[static_cast<std::size_t>(i)];
      return static_cast<int>(star(ctx, star(ctx, f, g), h) == star(ctx, f, star(ctx, g, h)));
    });
    const int good = static_cast<int>(std::count(assoc.begin(), assoc.end(), 1));
    out.push_back(truth("algebra.associativity." + tag, "(f * g) * h = f * (g * h) on random triples", good == kTriples,
                        count_text(good, kTriples), count_text(kTriples, kTriples)));

    int weyl = 0, weyl_total = 0;
    const SuperPolynomial hb = SuperPolynomial::hbar();
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) {
        const auto pi = SuperPolynomial::even_variable(ctx.p(i + 1)), qi = SuperPolynomial::even_variable(ctx.q(i + 1));
        const auto pj = SuperPolynomial::even_variable(ctx.p(j + 1)), qj = SuperPolynomial::even_variable(ctx.q(j + 1));
        weyl += super_bracket(ctx, pi, qj) == (i == j ? hb : SuperPolynomial());
        weyl += super_bracket(ctx, pi, pj).is_zero();
        weyl += super_bracket(ctx, qi, qj).is_zero();
        weyl_total += 3;
      }
    out.push_back(truth("algebra.weyl-relations." + tag, "[p_i, q_j] = hbar delta_ij, [p_i, p_j] = [q_i, q_j] = 0",
                        weyl == weyl_total, count_text(weyl, weyl_total), count_text(weyl_total, weyl_total)));

    int cliff = 0, cliff_total = 0;
    for (int i = 0; i < ctx.num_odd(); ++i)
      for (int j = 0; j < ctx.num_odd(); ++j) {
        const auto ti = SuperPolynomial::odd_variable(i), tj = SuperPolynomial::odd_variable(j);
        cliff += star(ctx, ti, tj) + star(ctx, tj, ti) == hb * Rational(ctx.h(i, j));
        ++cliff_total;
      }
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < 20; ++s) {
      std::vector<int> c(static_cast<std::size_t>(ctx.num_odd()));
      SuperPolynomial v;
      for (int i = 0; i < ctx.num_odd(); ++i) {
        c[i] = coef(rng);
        v += SuperPolynomial::odd_variable(i) * Rational(c[i]);
      }
      int q = 0;
      for (int i = 0; i < ctx.num_odd(); ++i)
        for (int j = 0; j < ctx.num_odd(); ++j) q += c[i] * ctx.h(i, j) * c[j];
      cliff += star(ctx, v, v) == hb * ratio(q, 2);
      ++cliff_total;
    }
    out.push_back(truth("algebra.clifford-relations." + tag,
                        "theta_i * theta_j + theta_j * theta_i = hbar h_ij and v * v = hbar Q(v)", cliff == cliff_total,
                        count_text(cliff, cliff_total), count_text(cliff_total, cliff_total)));

    int mixed = 0, mixed_total = 0;
    for (int e = 0; e < ctx.num_even(); ++e)
      for (int o = 0; o < ctx.num_odd(); ++o) {
        mixed += super_bracket(ctx, SuperPolynomial::even_variable(e), SuperPolynomial::odd_variable(o)).is_zero();
        ++mixed_total;
      }
    out.push_back(truth("algebra.mixed-relations." + tag, "even and odd generators commute", mixed == mixed_total,
                        count_text(mixed, mixed_total), count_text(mixed_total, mixed_total)));

    constexpr int kMatrices = 20;
    const SuperMatrix form = super_symplectic_form(ctx);
    int ber = 0, preserved = 0;
    const SuperPolynomial one = SuperPolynomial::constant(Rational(1));
    for (int s = 0; s < kMatrices; ++s) {
      const SuperMatrix m = random_super_symplectic(ctx, rng, 4);
      preserved += m.supertranspose() * form * m == form;
      ber += berezinian(m) == one;
    }
    out.push_back(truth("algebra.super-symplectic-form." + tag, "random M satisfies M^st H M = H", preserved == kMatrices,
                        count_text(preserved, kMatrices), count_text(kMatrices, kMatrices)));
    out.push_back(truth("algebra.berezinian." + tag, "Ber M = 1 for super-symplectic M", ber == kMatrices,
                        count_text(ber, kMatrices), count_text(kMatrices, kMatrices)));
  }
  return out;
}

// -------------------------------------------------------------------- trace

std::vector<Check> trace_suite(const RunConfig& cfg) {
  std::vector<Check> out;
  for (int a = 0; a <= 3; ++a)
    for (int b = a; a + b <= 3; ++b)
      out.push_back(equality("trace.hh0.a" + std::to_string(a) + "-b" + std::to_string(b),
                             "dim Cliff / [Cliff, Cliff] = 1", std::to_string(hh0_dimension(a, b)), "1"));

  const SuperType t = cfg.type.value_or(SuperType{1, 1, 1});
  const std::string tag = type_label(t);
  {
    const AlgebraContext ctx(0, t.a, t.b);
    const std::vector<SuperPolynomial> theta{SuperPolynomial::orientation(ctx)};
    out.push_back(equality("trace.berezin-normalization." + std::to_string(t.a) + "-" + std::to_string(t.b),
                           "tau(Theta) = 1 in type (0|a,b)", tau(ctx, theta).to_string({"hbar"}), "1"));
    if (t.a + t.b <= 4) {
      const int dim = 1 << ctx.num_odd();
      int zero = 0;
      for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
          SuperMonomial mx, my;
          mx.odd = static_cast<std::uint32_t>(x);
          my.odd = static_cast<std::uint32_t>(y);
          const std::vector<SuperPolynomial> ch{SuperPolynomial::term(mx, Rational(1)), SuperPolynomial::term(my, Rational(1))};
          zero += tau_of_boundary(ctx, ch).is_zero();
        }
      out.push_back(truth("trace.supertrace-degree0." + std::to_string(t.a) + "-" + std::to_string(t.b),
                          "tau(a b - (-1)^{|a||b|} b a) = 0 on Clifford basis pairs", zero == dim * dim,
                          count_text(zero, dim * dim), count_text(dim * dim, dim * dim)));
    }
  }
  if (t.n >= 1 && t.n <= 2) {
    const AlgebraContext ctx(t.n, t.a, t.b);
    auto rng = suite_rng(cfg.seed, "trace");
    std::vector<std::vector<SuperPolynomial>> chains;
    for (int s = 0; s < 3; ++s) {
      std::vector<SuperPolynomial> chain;
      for (int k = 0; k < 2 * t.n; ++k) chain.push_back(random_trace_slot(ctx, rng, 2, 4));
      chains.push_back(std::move(chain));
    }
    const auto gens = quadratic_generators(ctx);
    const RelativeReport rel = check_relative(ctx, chains, gens);
    out.push_back(truth("trace.relative." + tag, "insertions of rho(x) 1 for x quadratic vanish",
                        rel.nonzero_rho_insertions == 0, count_text(rel.evaluations - rel.nonzero_rho_insertions, rel.evaluations),
                        count_text(rel.evaluations, rel.evaluations)));
    out.push_back({"trace.relative-phi." + tag, "insertions of Phi(x) itself (reported only)",
                   count_text(rel.nonzero_phi_insertions, rel.evaluations) + " non-zero", "", Status::Info});
  }
  return out;
}

// ------------------------------------------------------------------ cocycle

std::vector<Check> cocycle_suite(const RunConfig& cfg) {
  std::vector<Check> out;
  std::vector<SuperType> types = cfg.type ? std::vector<SuperType>{*cfg.type}
                                          : std::vector<SuperType>{{1, 0, 0}, {1, 1, 1}, {1, 0, 2}};
  auto rng = suite_rng(cfg.seed, "cocycle");
  for (const SuperType& t : types) {
    if (t.n < 1 || t.n > 2) throw std::invalid_argument("cocycle suite supports 2n in {2, 4}");
    const AlgebraContext ctx(t.n, t.a, t.b);
    constexpr int kChains = 50;
    constexpr int kTerms = 6;
    std::vector<std::vector<SuperPolynomial>> chains;
    for (int s = 0; s < kChains; ++s) {
      std::vector<SuperPolynomial> chain;
      for (int k = 0; k < 2 * t.n + 2; ++k) chain.push_back(random_super_polynomial(ctx, rng, 2, kTerms));
      chains.push_back(std::move(chain));
    }
    const auto results = parallel_map(kChains, [&](int i) {
      const auto& chain = chains[static_cast<std::size_t>(i)];
      // Power measure: some single face already has a non-zero tau value.
      bool nontrivial = false;
      for (const auto& [c, slots] : split_homogeneous(chain))
        for (const auto& [fc, face] : hochschild_boundary(ctx, slots))
          if (!nontrivial && !tau(ctx, face).is_zero()) nontrivial = true;
      return std::pair{tau_of_boundary(ctx, chain).is_zero(), nontrivial};
    });
    int zero = 0, nontrivial = 0;
    for (const auto& [z, nt] : results) {
      zero += z;
      nontrivial += nt;
    }
    const std::string tag = type_label(t);
    out.push_back(truth("cocycle.tau-boundary." + tag, "tau vanishes on Hochschild boundaries (random chains, slot degree <= 2)",
                        zero == kChains, count_text(zero, kChains), count_text(kChains, kChains)));
    out.push_back({"cocycle.nonzero-faces." + tag, "chains with a boundary face of non-zero tau (test power)",
                   count_text(nontrivial, kChains), "", Status::Info});
  }
  return out;
}

// -------------------------------------------------------------- local-index

struct LocalPlan {
  SuperType type;
  bool direct;
};

std::vector<LocalPlan> local_plan(const RunConfig& cfg) {
  if (cfg.type) {
    if (cfg.n && *cfg.n != cfg.type->n) throw std::invalid_argument("--n disagrees with the type's 2n");
    if (cfg.type->n > 6) throw std::invalid_argument("local index supports 2n <= 12");
    return {{*cfg.type, cfg.type->n <= kMaxPairs}};
  }
  std::vector<int> degrees{1, 2, 3};
  if (cfg.n) {
    if (*cfg.n < 0 || *cfg.n > 6) throw std::invalid_argument("local index supports n <= 6");
    degrees = {*cfg.n};
  }
  std::vector<LocalPlan> plan;
  for (int n : degrees)
    for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 2}, std::pair{0, 3}})
      plan.push_back({{n, a, b}, cfg.n ? n <= kMaxPairs : n <= 2});
  return plan;
}

bool even_in(const Polynomial& p, std::size_t var) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[var] % 2 == 0; });
}

std::vector<Check> local_index_suite(const RunConfig& cfg) {
  const auto plan = local_plan(cfg);
  const auto computed = parallel_map(static_cast<int>(plan.size()), [&](int i) {
    const LocalPlan& p = plan[static_cast<std::size_t>(i)];
    std::vector<Check> out;
    const SuperType& t = p.type;
    const auto names = index_variables(t);
    const std::string tag = "n" + std::to_string(t.n) + "." + type_label(t);
    const Polynomial graph = pn_graphsum(t);
    const Polynomial closed = closed_form(t);
    const Polynomial avg_graph = average(t, graph);
    const std::string anchor =
        "averaged P_n = (-1)^{a+zhat} [prod Ahat(hbar gamma) prod cosh(hbar lambda/2) sinh(hbar lambda)/(hbar lambda) "
        "prod cos(hbar kappa/2) sin(hbar kappa)/(hbar kappa) e^{x2}]_n";
    if (p.direct) {
      const Polynomial direct = pn_direct(t);
      const Polynomial avg_direct = average(t, direct);
      out.push_back(truth("local-index.oracle." + tag, anchor, avg_direct == avg_graph && avg_graph == closed,
                          avg_direct.to_string(names), closed.to_string(names)));
      out.push_back(equality("local-index.direct-graph." + tag, "direct configuration integral = graph sum",
                             direct.to_string(names), graph.to_string(names)));
      out.push_back(equality("local-index.base-point." + tag,
                             "Theta vertex pinned at 0 = Theta vertex integrated over [0,1]",
                             pn_direct(t, BasePointReading::Integrated).to_string(names), direct.to_string(names)));
      const Polynomial pre = closed_form_before_average(t);
      out.push_back({"local-index.before-average." + tag,
                     "P_n before averaging vs the product with (e^{hbar lambda} - 1)/(hbar lambda)", direct.to_string(names),
                     pre.to_string(names), Status::Info});
    } else {
      out.push_back(truth("local-index.oracle." + tag, anchor, avg_graph == closed, avg_graph.to_string(names),
                          closed.to_string(names)));
    }
    out.push_back(equality("local-index.ahat-cosh-cos." + tag,
                           "graph sum = [prod Ahat(hbar gamma) prod cosh(hbar lambda/2) prod cos(hbar kappa/2) e^{x2}]_n",
                           graph.to_string(names), ahat_cosh_cos_form(t).to_string(names)));
    if (t.n >= 1) {
      CartanElement zero{std::vector<Rational>(t.n), std::vector<Rational>(t.a), std::vector<Rational>(t.zhat()), Rational(0)};
      out.push_back(equality("local-index.vanishing." + tag, "P_n(0) = 0 for n >= 1",
                             evaluate_at(t, graph, zero).to_string({"hbar"}), "0"));
    }
    bool even = true;
    for (int i = 0; i < t.n; ++i) even = even && even_in(closed, static_cast<std::size_t>(i));
    for (int s = 0; s < t.zhat(); ++s) even = even && even_in(closed, static_cast<std::size_t>(t.n + t.a + s));
    for (int r = 0; r < t.a; ++r) even = even && even_in(avg_graph, static_cast<std::size_t>(t.n + r));
    out.push_back(truth("local-index.evenness." + tag,
                        "closed form even in gamma and kappa, averaged P_n even in lambda", even, even ? "even" : "not even",
                        "even"));
    return out;
  });
  std::vector<Check> out;
  for (const auto& c : computed) out.insert(out.end(), c.begin(), c.end());

  // Flower units on definite labels, hbar = 1, two labels unless the type fixes zhat.
  const SuperType ft = cfg.type.value_or(SuperType{0, 0, 4});
  const int order = 6;
  const TruncatedSeries flowers = y2_flower_series(ft, order);
  const auto& v = flowers.variables();
  TruncatedSeries cos_prod = TruncatedSeries::constant(v, order, Rational(ft.zhat() % 2 ? -1 : 1));
  TruncatedSeries cot_prod = TruncatedSeries::constant(v, order, Rational(1));
  const auto sin_c = series_coefficients("sin", order + 1);
  const std::vector<Rational> sinc(sin_c.begin() + 1, sin_c.end());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const auto c = TruncatedSeries::univariate(v, order, s, series_coefficients("cos", order), ratio(1, 2));
    cos_prod *= c;
    cot_prod *= c * TruncatedSeries::univariate(v, order, s, sinc, ratio(1, 2)).inverse();
  }
  const std::string ftag = type_label(ft);
  out.push_back(equality("local-index.flower-definite." + ftag,
                         "flower units on definite labels sum to (-1)^zhat prod cos(kappa/2)", flowers.to_string(),
                         cos_prod.to_string()));
  out.push_back(equality("local-index.flower-definite-cot." + ftag,
                         "flower units on definite labels sum to prod (kappa/2) cot(kappa/2)", flowers.to_string(),
                         cot_prod.to_string()));
  return out;
}

// ------------------------------------------------------------------- genera

std::vector<Check> genera_suite(const RunConfig&) {
  std::vector<Check> out;
  out.push_back(equality("genera.series.ahat", "Ahat = (t/2)/sinh(t/2) to order 4", series("Ahat", {"t"}, 4).to_string(),
                         "1 - 1/24 t^2 + 7/5760 t^4"));
  out.push_back(equality("genera.series.l", "L = t/tanh(t) to order 4", series("L", {"t"}, 4).to_string(),
                         "1 + 1/3 t^2 - 1/45 t^4"));

  const int order = 8;
  const std::vector<std::string> x{"x"};
  std::vector<Rational> cycles(order + 1), signed_cycles(order + 1);
  for (int j = 2; j <= order; ++j) {
    const Rational w = I_closed(static_cast<unsigned>(j)) / Rational(j * (1 << j));
    cycles[j] = w;
    if (j % 2 == 0) signed_cycles[j] = (j / 2) % 2 ? w : -w;
  }
  out.push_back(equality("genera.log-identity.sinh", "sum_{j>=2} I_j/(2^j j) x^j = log((x/2)/sinh(x/2))",
                         TruncatedSeries::univariate(x, order, 0, cycles).to_string(), series("Ahat", x, order).log().to_string()));
  const auto sin_c = series_coefficients("sin", order + 1);
  const std::vector<Rational> sinc(sin_c.begin() + 1, sin_c.end());
  out.push_back(equality("genera.log-identity.sin", "sum_{j even} -(-1)^{j/2} I_j/(2^j j) x^j = log(sin(x/2)/(x/2))",
                         TruncatedSeries::univariate(x, order, 0, signed_cycles).to_string(),
                         TruncatedSeries::univariate(x, order, 0, sinc, ratio(1, 2)).log().to_string()));

  for (int n = 0; n <= 6; ++n) {
    const SuperType t{n, 0, 0};
    const auto names = index_variables(t);
    std::vector<std::string> vars(names.begin(), names.end() - 1);
    TruncatedSeries prod = TruncatedSeries::univariate(vars, n, static_cast<std::size_t>(n), series_coefficients("exp", n));
    for (int i = 0; i < n; ++i) prod *= TruncatedSeries::univariate(vars, n, static_cast<std::size_t>(i), series_coefficients("Ahat", n));
    Polynomial expected(names.size());
    const TruncatedSeries part = prod.homogeneous_part(n);
    for (const auto& [e, c] : part.polynomial().terms()) {
      Polynomial::Exponents f(e);
      f.push_back(static_cast<std::uint16_t>(n - e[static_cast<std::size_t>(n)]));
      expected.add_term(f, c);
    }
    out.push_back(equality("genera.even-closed-form.n" + std::to_string(n),
                           "closed form in type (2n|0,0) = [prod Ahat(hbar gamma) e^{x2}]_n", closed_form(t).to_string(names),
                           expected.to_string(names)));
  }

  const std::vector<std::string> tv{"t"};
  const auto sinh_c = series_coefficients("sinh", order + 1);
  const auto sinh_over = TruncatedSeries::univariate(tv, order, 0, std::vector<Rational>(sinh_c.begin() + 1, sinh_c.end()));
  const auto lhs = series("Ahat", tv, order) *
                   TruncatedSeries::univariate(tv, order, 0, series_coefficients("cosh", order), ratio(1, 2)) * sinh_over;
  // (t/2)/tanh(t/2) by series division, independent of the L coefficients: tanh(t/2) = (t/2) u(t).
  const auto tanh_ext = TruncatedSeries::univariate(tv, order + 1, 0, series_coefficients("sinh", order + 1), ratio(1, 2)) *
                        TruncatedSeries::univariate(tv, order + 1, 0, series_coefficients("cosh", order + 1), ratio(1, 2)).inverse();
  std::vector<Rational> u(order + 1);
  for (int k = 0; k <= order; ++k) u[k] = tanh_ext.coefficient({static_cast<std::uint16_t>(k + 1)}) * Rational(2);
  const auto coth_form = TruncatedSeries::univariate(tv, order, 0, u).inverse() * sinh_over;
  out.push_back(equality("genera.l-genus.cosh-identity",
                         "(t/2)/sinh(t/2) cosh(t/2) sinh(t)/t = (t/2)/tanh(t/2) sinh(t)/t to order 8", lhs.to_string(),
                         coth_form.to_string()));
  out.push_back(equality("genera.l-genus.ahat-bhat", "Ahat(t) Bhat(t) = L(t/2) sinh(t)/t to order 8",
                         (series("Ahat", tv, order) * series("Bhat", tv, order)).to_string(),
                         (TruncatedSeries::univariate(tv, order, 0, series_coefficients("L", order), ratio(1, 2)) * sinh_over).to_string()));

  {
    const std::vector<std::string> v{"a", "b", "c"};
    const int o = 6;
    const auto coeffs = series_coefficients("Ahat", o);
    TruncatedSeries prod = TruncatedSeries::constant(v, o, Rational(1));
    for (std::size_t i = 0; i < 3; ++i) prod *= TruncatedSeries::univariate(v, o, i, coeffs);
    int good = 0, total = 0;
    for (int i = 0; i <= o; ++i)
      for (int j = 0; i + j <= o; ++j)
        for (int k = 0; i + j + k <= o; ++k) {
          ++total;
          good += prod.coefficient({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(k)}) ==
                  coeffs[i] * coeffs[j] * coeffs[k];
        }
    out.push_back(truth("genera.multiplicativity.ahat", "product over 3 roots = product of per-root coefficients to order 6",
                        good == total, count_text(good, total), count_text(total, total)));
  }

  for (int n = 0; n <= 3; ++n) {
    const CurvatureData d{n, n, n};
    std::vector<std::size_t> map;
    for (int i = 0; i < n; ++i) map.push_back(static_cast<std::size_t>(i));
    for (int i = 0; i < n; ++i) map.push_back(static_cast<std::size_t>(i));
    map.push_back(static_cast<std::size_t>(n));
    map.push_back(static_cast<std::size_t>(n + 1));
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("R" + std::to_string(i));
    names.push_back("Omega");
    names.push_back("hbar");
    out.push_back(equality("genera.rhs-cotangent.n" + std::to_string(n),
                           "rhs index on (2n|n,n) with S = R equals hbar^n [L(M) Ahat(-TM) exp(-Omega/hbar)]_n",
                           rhs_index(d).remap(static_cast<std::size_t>(n + 2), map).to_string(names),
                           l_genus_pattern(n).to_string(names)));
  }

  {
    const AlgebraContext ctx(1, 0, 0);
    const std::vector<SuperPolynomial> pq{SuperPolynomial::even_variable(ctx.p(1)), SuperPolynomial::even_variable(ctx.q(1))};
    const std::vector<SuperPolynomial> qp{pq[1], pq[0]};
    out.push_back(equality("genera.chi.p-q", "chi(P)(p ^ q) = P(C(p, q)) = -hbar", chi(ctx, center_functional(), pq).to_string({"hbar"}),
                           "-hbar"));
    out.push_back(equality("genera.chi.antisymmetry", "chi(P)(q ^ p) = -chi(P)(p ^ q)",
                           chi(ctx, center_functional(), qp).to_string({"hbar"}), "hbar"));
    const AlgebraContext big(2, 1, 3);
    const auto other = parse_super_polynomial(big, "p1*p2^2 + q2 + th1*th3*p1 + th2*th4");
    int zero = 0, total = 0;
    for (const auto& h : {phi_embed(big, CartanKind::Symplectic, 1), phi_embed(big, CartanKind::Symplectic, 2),
                          phi_embed(big, CartanKind::Hyperbolic, 1), phi_embed(big, CartanKind::Definite, 1),
                          phi_embed(big, CartanKind::Center)}) {
      const std::vector<SuperPolynomial> args{h, other};
      zero += chi(big, center_functional(), args).is_zero();
      ++total;
    }
    out.push_back(truth("genera.chi.cartan", "chi vanishes when an argument lies in the Cartan image", zero == total,
                        count_text(zero, total), count_text(total, total)));
  }
  return out;
}

using SuiteFn = std::vector<Check> (*)(const RunConfig&);

SuiteFn suite_function(std::string_view name) {
  if (name == "bernoulli") return bernoulli_suite;
  if (name == "algebra") return algebra_suite;
  if (name == "trace") return trace_suite;
  if (name == "cocycle") return cocycle_suite;
  if (name == "local-index") return local_index_suite;
  if (name == "genera") return genera_suite;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

SuiteReport run_one(const std::string& name, const RunConfig& cfg) {
  SuiteReport r{name, suite_function(name)(cfg)};
  std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return r;
}

}  // namespace

std::vector<SuiteReport> run_suites(std::string_view name, const RunConfig& cfg) {
  if (cfg.type) cfg.type->validate();
  if (name != "all") return {run_one(std::string(name), cfg)};
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& s : suite_names()) jobs.push_back(std::async(std::launch::async, run_one, s, cfg));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string report_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "== " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : r.checks) {
      out << "[" << status_name(c.status) << "] " << c.id << "  (" << c.anchor << ")\n";
      out << "    value:    " << c.value << '\n';
      if (!c.expected.empty()) out << "    expected: " << c.expected << '\n';
    }
  }
  return out.str();
}

std::string report_json(const std::vector<SuiteReport>& reports, std::string_view suite, const RunConfig& cfg) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["schema"] = "superindex-report/1";
  root["suite"] = std::string(suite);
  root["seed"] = cfg.seed;
  root["type"] = cfg.type ? ordered_json(type_text(*cfg.type)) : ordered_json(nullptr);
  root["n"] = cfg.n ? ordered_json(*cfg.n) : ordered_json(nullptr);
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    all = all && r.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json j;
      j["id"] = c.id;
      j["anchor"] = c.anchor;
      j["status"] = std::string(status_name(c.status));
      j["value"] = c.value;
      j["expected"] = c.expected;
      checks.push_back(std::move(j));
    }
    s["checks"] = std::move(checks);
    suites.push_back(std::move(s));
  }
  root["passed"] = all;
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

}  // namespace superindex
