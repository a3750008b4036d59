// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_BERNOULLI_HPP
#define SUPERINDEX_BERNOULLI_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "superindex/polynomial.hpp"
#include "superindex/rational.hpp"

namespace superindex {

// B_1 = -1/2.
Rational bernoulli_number(unsigned j);
// Univariate B_m(v).
Polynomial bernoulli_poly(unsigned m);

// Integral of p over 0 <= v_{ordering[0]} <= ... <= v_{ordering.back()} <= 1.
// Variables of p outside `ordering` must not occur.
Rational integrate_order_region(const Polynomial& p, std::span<const std::size_t> ordering);

// psi(v) = 2v + 1 on [-1, 0), 2v - 1 on [0, 1), extended 1-periodically.
struct PsiFactor {
  int i, j;
  unsigned power = 1;
};

// prod psi(v_i - v_j)^power * extra, over variables v_0..v_k.
struct PsiProduct {
  std::vector<PsiFactor> factors;
  Polynomial extra;  // empty variable list means the constant 1
};

enum class BasePoint { Free, PinnedAtZero };

// Integral over [0,1]^k in v_1..v_k, summing the k! order regions. With
// PinnedAtZero the index 0 may occur and v_0 is fixed at 0.
Rational integrate_psi_cube(const PsiProduct& pp, int k, BasePoint v0 = BasePoint::Free);

// Integral over the single region 0 = v_0 < v_1 < ... < v_k < 1, where every
// psi(v_i - v_j) with i < j equals 2(v_i - v_j) + 1.
Rational integrate_psi_simplex(const PsiProduct& pp, int k);

// Integral of psi(v_1 - v_2) psi(v_2 - v_3) ... psi(v_j - v_1) over [0,1]^j.
Rational I_closed(unsigned j);
// Same cycle of length j + 1 with v_0 pinned; translation invariance makes it I_{j+1}.
Rational Itilde_closed(unsigned j);

// Cycle and open-chain factor lists on v_1..v_j (or rooted at v_0).
PsiProduct psi_cycle(int j);
PsiProduct psi_open_chain(int j);
PsiProduct psi_rooted_cycle(int j);  // psi(v_0 - v_1) psi(v_1 - v_2) ... psi(v_j - v_0)
PsiProduct psi_rooted_chain(int j);  // psi(v_0 - v_1) ... psi(v_{j-1} - v_j)

// int_0^1 B_n(u) B~_m(v - u) du with B~ the 1-periodic extension, as a polynomial in v on [0,1].
Polynomial bernoulli_convolution(unsigned n, unsigned m);
// int_x^{x+1} B_n(u) du as a polynomial in x.
Polynomial bernoulli_window_integral(unsigned n);

}  // namespace superindex

#endif
