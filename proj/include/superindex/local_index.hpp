// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_LOCAL_INDEX_HPP
#define SUPERINDEX_LOCAL_INDEX_HPP

#include <map>
#include <string>
#include <vector>

#include "superindex/algebra.hpp"
#include "superindex/genera.hpp"
#include "superindex/polynomial.hpp"

namespace superindex {

// Type (2n|a,b) without the algebra; the graph sum and closed forms only need the counts.
struct SuperType {
  int n = 0, a = 0, b = 0;
  int zhat() const { return (b - a) / 2; }
  void validate() const;
};

// Variables of the local index polynomial: g1..gn, l1..la, k1..kzhat, x2, hbar.
std::vector<std::string> index_variables(const SuperType& t);

// X = sum gamma_i q_i p_i + sum lambda_r eta_r zeta_r + sum kappa_s (-xi_s mu_s) + x2.
struct CartanElement {
  std::vector<Rational> gamma, lambda, kappa;
  Rational x2;
};
SuperPolynomial cartan_embedding(const AlgebraContext& ctx, const CartanElement& x);

// Evaluates a polynomial in index_variables at a Cartan element (hbar stays symbolic).
Polynomial evaluate_at(const SuperType& t, const Polynomial& p, const CartanElement& x);

enum class BasePointReading { Pinned, Integrated };

// Upsilon int_{[0,1]^n} omega(Theta (x) X (x) ... (x) X) / n!, symbolic in the Cartan
// coefficients; n = t.n <= 4. Pinned fixes v_0 = 0, Integrated also integrates v_0 over [0,1].
Polynomial pn_direct(const SuperType& t, BasePointReading reading = BasePointReading::Pinned);

// Graph classes: closed cycles of X-vertices (lengths >= 2), decorated Theta-flower
// units (an odd petal of length j through Y-vertices of one index plus one matched
// spare vertex), and edgeless x2-vertices.
struct FlowerUnit {
  enum class Kind { Hyperbolic, Definite } kind;
  int index;   // r or s, 1-based; distinct across units
  int petal;   // odd length j >= 1
};

struct IndexGraph {
  std::map<int, int> cycles;      // length j -> multiplicity l_j
  std::vector<FlowerUnit> units;  // sorted by (kind, index)
  int x2_vertices = 0;
  int n1() const;  // vertices on cycles
  int n2() const;  // vertices in flower units (petals and spares)
  // Order of the automorphism group: x2_vertices! prod_j l_j! (2j)^{l_j} 2^{#units}.
  Integer automorphisms() const;
};

std::vector<IndexGraph> enumerate_index_graphs(const SuperType& t);

// Closed-form weight C_G of one graph class (cycle values summed over the decorations).
Polynomial graph_weight(const SuperType& t, const IndexGraph& g);

// sum_G C_G / |Aut G|, the same normalisation as pn_direct; n = t.n <= 6.
Polynomial pn_graphsum(const SuperType& t);

// Flower units on definite labels only, summed with their automorphism weights and
// hbar = 1: prod_s (1 + sum_{j odd} C_unit(j) / 2), truncated at total degree `order`.
// Variables k1..kzhat.
TruncatedSeries y2_flower_series(const SuperType& t, int order);

// Deletes every monomial of odd degree in some lambda_r.
Polynomial average(const SuperType& t, const Polynomial& p);

// Degree-n part in (gamma, lambda, kappa, x2) of
// (-1)^{a+zhat} prod Ahat(hbar gamma) prod cosh(hbar lambda/2) sinh(hbar lambda)/(hbar lambda)
//   prod cos(hbar kappa/2) sin(hbar kappa)/(hbar kappa) e^{x2}.
Polynomial closed_form(const SuperType& t);

// Same product with (e^{hbar lambda} - 1)/(hbar lambda) in place of sinh(hbar lambda)/(hbar lambda).
Polynomial closed_form_before_average(const SuperType& t);

// Degree-n part of prod Ahat(hbar gamma) prod cosh(hbar lambda/2) prod cos(hbar kappa/2) e^{x2}.
Polynomial ahat_cosh_cos_form(const SuperType& t);

}  // namespace superindex

#endif
