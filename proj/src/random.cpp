// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/random.hpp"

#include <bit>

namespace superindex {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SuperMonomial random_monomial(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree) {
  SuperMonomial m;
  const int nvars = ctx.num_even() + ctx.num_odd();
  if (nvars == 0) return m;
  for (int d = uniform(rng, 0, max_degree); d > 0; --d) {
    const int v = uniform(rng, 0, nvars - 1);
    if (v < ctx.num_even())
      m.even[v]++;
    else
      m.odd |= 1u << (v - ctx.num_even());
  }
  return m;
}

Rational nonzero_coefficient(std::mt19937_64& rng) {
  int c = uniform(rng, -3, 2);
  return Rational(c >= 0 ? c + 1 : c);
}

}  // namespace

SuperPolynomial random_super_polynomial(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree, int terms) {
  SuperPolynomial f;
  for (int t = 0; t < terms; ++t) f.add_term(random_monomial(ctx, rng, max_degree), Rational(uniform(rng, -3, 3)));
  return f;
}

SuperPolynomial random_homogeneous_polynomial(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree,
                                              int terms, int parity) {
  SuperPolynomial f;
  for (int t = 0, tries = 0; t < terms && tries < 50 * terms; ++tries) {
    const SuperMonomial m = random_monomial(ctx, rng, max_degree);
    if (m.parity() != parity) continue;
    f.add_term(m, nonzero_coefficient(rng));
    ++t;
  }
  return f;
}

SuperPolynomial random_trace_slot(const AlgebraContext& ctx, std::mt19937_64& rng, int max_even_degree, int terms) {
  const AlgebraContext even_only(ctx.n(), 0, 0);
  SuperPolynomial f;
  for (int t = 0; t < terms; ++t) {
    SuperMonomial m = random_monomial(even_only, rng, max_even_degree);
    if (ctx.num_odd() > 0) m.odd = static_cast<std::uint32_t>(uniform(rng, 0, (1 << ctx.num_odd()) - 1));
    f.add_term(m, Rational(uniform(rng, -3, 3)));
  }
  return f;
}

}  // namespace superindex
