// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_HOCHSCHILD_HPP
#define SUPERINDEX_HOCHSCHILD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superindex/algebra.hpp"
#include "superindex/polynomial.hpp"

namespace superindex {

// Pure tensor of monomials together with the psi-product psi(v_i - v_j)^{psi[ij]}
// (pairs i < j in pair_index order) and a power of hbar.
struct ChainKey {
  std::vector<SuperMonomial> slots;
  std::vector<std::uint8_t> psi;
  std::uint16_t hbar = 0;
  auto operator<=>(const ChainKey&) const = default;
};

int pair_index(int i, int j, int arity);  // requires i < j

// Linear combination of ChainKeys of one arity.
class TensorChain {
 public:
  explicit TensorChain(int arity = 1) : arity_(arity) {}
  static TensorChain from_slots(std::span<const SuperPolynomial> slots);

  int arity() const { return arity_; }
  const std::map<ChainKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ChainKey& key, const Rational& c);

  TensorChain& operator+=(const TensorChain& o);
  TensorChain& operator*=(const Rational& c);
  friend TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
  friend TensorChain operator*(TensorChain a, const Rational& c) { return a *= c; }
  friend bool operator==(const TensorChain&, const TensorChain&) = default;

 private:
  int arity_;
  std::map<ChainKey, Rational> terms_;
};

// alpha_ij = 1/2 sum_l (d_p_l^(i) d_q_l^(j) - d_q_l^(i) d_p_l^(j)), alpha_ji = -alpha_ij.
TensorChain alpha_ij(const AlgebraContext& ctx, int i, int j, const TensorChain& chain);

// g_ij = -1/2 sum h_ml d_theta_m^(i) d_theta_l^(j): the odd part of the star
// bivector. The derivative at slot j acts first; each odd derivative picks up
// the Koszul sign of the slots to its left. As ordered operators g_ji = -g_ij.
TensorChain g_ij(const AlgebraContext& ctx, int i, int j, const TensorChain& chain);

// exp(sum_{0 <= i < j <= k} hbar psi(v_i - v_j)(alpha_ij + g_ij)) applied to the chain.
// The series stops once every term is annihilated; more than `derivative_cap`
// applications on a single term throws std::logic_error. Default cap: sum of slot degrees.
TensorChain omega_apply(const AlgebraContext& ctx, const TensorChain& chain,
                        std::optional<int> derivative_cap = std::nullopt);

// Sum over perfect matchings of slots 1..2n of the matching sign times the product of alpha's.
TensorChain pi_2n(const AlgebraContext& ctx, const TensorChain& chain);

// Simplex: 0 = v_0 < v_1 < ... < v_k < 1. CubePinned: v_0 = 0, v_1..v_k in [0,1].
// CubeFree: v_0..v_k all in [0,1].
enum class Region { Simplex, CubePinned, CubeFree };

// Symbol product of all slots, p = q = 0, Berezin integral, times coefficient,
// then psi-products integrated over the region. Polynomial in hbar.
Polynomial upsilon_integrated(const AlgebraContext& ctx, const TensorChain& chain, Region region = Region::Simplex);

// tau_{2n|a,b} on a chain of 2n + 1 elements.
Polynomial tau(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain);

using ChainSum = std::vector<std::pair<Rational, std::vector<SuperPolynomial>>>;

// Expands every slot into its even and odd parts.
ChainSum split_homogeneous(std::span<const SuperPolynomial> chain);

// Cyclic bar differential with super signs; slots must be homogeneous.
ChainSum hochschild_boundary(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain);

TensorChain to_tensor(const ChainSum& sum);

// tau applied to the boundary of a chain of 2n + 2 elements (split into homogeneous parts first).
Polynomial tau_of_boundary(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain);

struct RelativeReport {
  int evaluations = 0;
  int nonzero_rho_insertions = 0;   // insertions of a = rho(x).1; must stay 0
  int nonzero_phi_insertions = 0;   // insertions of Phi(x) itself; informational
};

// For each chain a_0..a_{2n-1} and each quadratic generator x, evaluates
// sum_{j=1}^{2n} (-1)^j tau(a_0, .., a_{j-1}, a, a_j, .., a_{2n-1}) with a = (1/hbar)[Phi(x), 1].
RelativeReport check_relative(const AlgebraContext& ctx, std::span<const std::vector<SuperPolynomial>> chains,
                              std::span<const SuperPolynomial> generators);

// dim of Cliff(a,b)/[Cliff, Cliff] at hbar = 1 by exact linear algebra; a + b <= 4.
int hh0_dimension(int a, int b);

// Rank of a rational matrix.
int rank(std::vector<std::vector<Rational>> rows);

}  // namespace superindex

#endif
