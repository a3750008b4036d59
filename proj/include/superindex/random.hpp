// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_RANDOM_HPP
#define SUPERINDEX_RANDOM_HPP

#include <random>

#include "superindex/algebra.hpp"

namespace superindex {

// `terms` random monomials of total degree <= max_degree (no hbar) with
// coefficients uniform in {-3..3}.
SuperPolynomial random_super_polynomial(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree, int terms);

// Same, restricted to monomials of one odd parity.
SuperPolynomial random_homogeneous_polynomial(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree,
                                              int terms, int parity);

// Random slot for trace tests: even part of degree <= max_even_degree times an
// arbitrary odd monomial, so Berezin integrals of products are rarely zero.
SuperPolynomial random_trace_slot(const AlgebraContext& ctx, std::mt19937_64& rng, int max_even_degree, int terms);

}  // namespace superindex

#endif
