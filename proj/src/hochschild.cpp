// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/hochschild.hpp"

#include <bit>
#include <mutex>
#include <tuple>
#include <stdexcept>

#include "superindex/bernoulli.hpp"

namespace superindex {

int pair_index(int i, int j, int arity) {
  if (!(0 <= i && i < j && j < arity)) throw std::out_of_range("pair index");
  return i * arity - i * (i + 1) / 2 + (j - i - 1);
}

TensorChain TensorChain::from_slots(std::span<const SuperPolynomial> slots) {
  const int arity = static_cast<int>(slots.size());
  TensorChain out(arity);
  ChainKey key;
  key.slots.resize(arity);
  key.psi.assign(static_cast<std::size_t>(arity * (arity - 1) / 2), 0);
  // odometer over the term lists of all slots
  std::vector<SuperPolynomial::TermMap::const_iterator> it(arity);
  for (int s = 0; s < arity; ++s) {
    if (slots[s].is_zero()) return out;
    it[s] = slots[s].terms().begin();
  }
  for (;;) {
    Rational c(1);
    key.hbar = 0;
    for (int s = 0; s < arity; ++s) {
      key.slots[s] = it[s]->first;
      key.hbar = static_cast<std::uint16_t>(key.hbar + key.slots[s].hbar);
      key.slots[s].hbar = 0;
      c *= it[s]->second;
    }
    out.add(key, c);
    int s = arity - 1;
    for (; s >= 0; --s) {
      if (++it[s] != slots[s].terms().end()) break;
      it[s] = slots[s].terms().begin();
    }
    if (s < 0) return out;
  }
}

void TensorChain::add(const ChainKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorChain& TensorChain::operator+=(const TensorChain& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorChain& TensorChain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

namespace {

void check_slot(const TensorChain& chain, int i) {
  if (i < 0 || i >= chain.arity()) throw std::out_of_range("slot index out of range");
}

int koszul_sign(const ChainKey& key, int slot) {
  int parity = 0;
  for (int s = 0; s < slot; ++s) parity ^= key.slots[s].parity();
  return parity ? -1 : 1;
}

// Left odd derivative d/dtheta_var on one slot, with the Koszul sign of the slots before it.
int odd_derivative(ChainKey& key, int slot, int var) {
  SuperMonomial& m = key.slots[slot];
  if (!(m.odd >> var & 1u)) return 0;
  const int s = koszul_sign(key, slot) * odd_derivative_sign(m.odd, var);
  m.odd &= ~(1u << var);
  return s;
}

int even_derivative(ChainKey& key, int slot, int var) {
  SuperMonomial& m = key.slots[slot];
  const int e = m.even[var];
  if (e) m.even[var]--;
  return e;
}

// Adds alpha_ij (i < j) applied to `key` with coefficient c into out.
void add_alpha(const AlgebraContext& ctx, int i, int j, const ChainKey& key, const Rational& c, TensorChain& out) {
  const int n = ctx.n();
  const Rational half = c / 2;
  for (int l = 0; l < n; ++l) {
    {
      ChainKey k = key;
      const int e1 = even_derivative(k, i, ctx.p(l + 1));
      const int e2 = e1 ? even_derivative(k, j, ctx.q(l + 1)) : 0;
      if (e1 && e2) out.add(k, half * (e1 * e2));
    }
    {
      ChainKey k = key;
      const int e1 = even_derivative(k, i, ctx.q(l + 1));
      const int e2 = e1 ? even_derivative(k, j, ctx.p(l + 1)) : 0;
      if (e1 && e2) out.add(k, -half * (e1 * e2));
    }
  }
}

void add_g(const AlgebraContext& ctx, int i, int j, const ChainKey& key, const Rational& c, TensorChain& out) {
  const int m = ctx.num_odd();
  const Rational minus_half = -c / 2;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int h = ctx.h(a, b);
      if (!h) continue;
      ChainKey k = key;
      const int s1 = odd_derivative(k, j, b);
      if (!s1) continue;
      const int s2 = odd_derivative(k, i, a);
      if (!s2) continue;
      out.add(k, minus_half * (h * s1 * s2));
    }
}

}  // namespace

TensorChain alpha_ij(const AlgebraContext& ctx, int i, int j, const TensorChain& chain) {
  check_slot(chain, i);
  check_slot(chain, j);
  if (i == j) throw std::invalid_argument("alpha_ij needs i != j");
  TensorChain out(chain.arity());
  for (const auto& [key, c] : chain.terms()) {
    if (i < j)
      add_alpha(ctx, i, j, key, c, out);
    else
      add_alpha(ctx, j, i, key, -c, out);
  }
  return out;
}

TensorChain g_ij(const AlgebraContext& ctx, int i, int j, const TensorChain& chain) {
  check_slot(chain, i);
  check_slot(chain, j);
  TensorChain out(chain.arity());
  for (const auto& [key, c] : chain.terms()) add_g(ctx, i, j, key, c, out);
  return out;
}

TensorChain omega_apply(const AlgebraContext& ctx, const TensorChain& chain, std::optional<int> derivative_cap) {
  const int arity = chain.arity();
  int cap = 0;
  if (derivative_cap) {
    cap = *derivative_cap;
  } else {
    for (const auto& [key, c] : chain.terms()) {
      int d = 0;
      for (const auto& m : key.slots) d += m.degree();
      cap = std::max(cap, d);
    }
  }
  TensorChain result = chain;
  for (int i = 0; i < arity; ++i)
    for (int j = i + 1; j < arity; ++j) {
      const int idx = pair_index(i, j, arity);
      TensorChain acc = result;
      TensorChain cur = result;
      for (int m = 1;; ++m) {
        TensorChain next(arity);
        const Rational inv_m = Rational(1) / m;
        for (const auto& [key, c] : cur.terms()) {
          ChainKey k = key;
          k.psi[idx]++;
          k.hbar++;
          add_alpha(ctx, i, j, k, c * inv_m, next);
          add_g(ctx, i, j, k, c * inv_m, next);
        }
        if (next.is_zero()) break;
        for (const auto& [key, c] : next.terms()) {
          int applied = 0;
          for (auto e : key.psi) applied += e;
          if (applied > cap) throw std::logic_error("omega_apply: derivative cap exceeded");
        }
        acc += next;
        cur = std::move(next);
      }
      result = std::move(acc);
    }
  return result;
}

TensorChain pi_2n(const AlgebraContext& ctx, const TensorChain& chain) {
  const int arity = chain.arity();
  if (arity % 2 == 0) throw std::invalid_argument("pi_2n needs arity 2n + 1");
  const int slots = arity - 1;
  TensorChain out(arity);
  std::vector<int> sequence;
  std::vector<bool> used(arity, false);
  auto recurse = [&](auto&& self, const TensorChain& cur) -> void {
    int s = 1;
    while (s < arity && used[s]) ++s;
    if (s == arity) {
      int inversions = 0;
      for (std::size_t x = 0; x < sequence.size(); ++x)
        for (std::size_t y = x + 1; y < sequence.size(); ++y) inversions += sequence[x] > sequence[y];
      out += inversions % 2 ? cur * Rational(-1) : cur;
      return;
    }
    used[s] = true;
    for (int t = s + 1; t <= slots; ++t) {
      if (used[t]) continue;
      used[t] = true;
      sequence.push_back(s);
      sequence.push_back(t);
      const TensorChain next = alpha_ij(ctx, s, t, cur);
      if (!next.is_zero()) self(self, next);
      sequence.pop_back();
      sequence.pop_back();
      used[t] = false;
    }
    used[s] = false;
  };
  recurse(recurse, chain);
  return out;
}

namespace {

Rational region_integral(const std::vector<std::uint8_t>& psi, int arity, Region region) {
  using MemoKey = std::tuple<int, int, std::vector<std::uint8_t>>;
  static std::mutex lock;
  static std::map<MemoKey, Rational> memo;
  const MemoKey key{static_cast<int>(region), arity, psi};
  {
    std::lock_guard guard(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  // CubeFree shifts every index by one so that v_0 becomes an integrated variable.
  const int shift = region == Region::CubeFree ? 1 : 0;
  PsiProduct pp;
  for (int i = 0; i < arity; ++i)
    for (int j = i + 1; j < arity; ++j)
      if (const auto e = psi[pair_index(i, j, arity)]) pp.factors.push_back({i + shift, j + shift, e});
  Rational value;
  switch (region) {
    case Region::Simplex: value = integrate_psi_simplex(pp, arity - 1); break;
    case Region::CubePinned: value = integrate_psi_cube(pp, arity - 1, BasePoint::PinnedAtZero); break;
    case Region::CubeFree: value = integrate_psi_cube(pp, arity, BasePoint::Free); break;
  }
  std::lock_guard guard(lock);
  memo.emplace(key, value);
  return value;
}

}  // namespace

Polynomial upsilon_integrated(const AlgebraContext& ctx, const TensorChain& chain, Region region) {
  const std::uint32_t top = ctx.orientation_mask();
  std::map<std::vector<std::uint8_t>, std::map<std::uint16_t, Rational>> grouped;
  for (const auto& [key, c] : chain.terms()) {
    std::uint32_t acc = 0;
    int sign = 1;
    bool survives = true;
    for (const auto& m : key.slots) {
      if (m.even_degree() != 0) {
        survives = false;
        break;
      }
      sign *= odd_product_sign(acc, m.odd);
      acc |= m.odd;
      if (!sign) {
        survives = false;
        break;
      }
    }
    if (!survives || acc != top) continue;
    grouped[key.psi][key.hbar] += sign * c;
  }
  Polynomial out(1);
  for (const auto& [psi, by_hbar] : grouped) {
    const Rational w = region_integral(psi, chain.arity(), region);
    if (w == 0) continue;
    for (const auto& [h, c] : by_hbar) out.add_term(Polynomial::Exponents{h}, w * c);
  }
  return out;
}

Polynomial tau(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain) {
  if (chain.size() % 2 == 0) throw std::invalid_argument("tau needs 2n + 1 slots");
  const TensorChain c = TensorChain::from_slots(chain);
  return upsilon_integrated(ctx, omega_apply(ctx, pi_2n(ctx, c)));
}

namespace {

std::pair<SuperPolynomial, SuperPolynomial> parity_parts(const SuperPolynomial& f) {
  SuperPolynomial even, odd;
  for (const auto& [m, c] : f.terms()) (m.parity() ? odd : even).add_term(m, c);
  return {even, odd};
}

}  // namespace

ChainSum split_homogeneous(std::span<const SuperPolynomial> chain) {
  ChainSum out{{Rational(1), {}}};
  for (const auto& slot : chain) {
    const auto [even, odd] = parity_parts(slot);
    ChainSum next;
    for (const auto& [c, slots] : out)
      for (const auto* part : {&even, &odd}) {
        if (part->is_zero()) continue;
        auto s = slots;
        s.push_back(*part);
        next.emplace_back(c, std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

ChainSum hochschild_boundary(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain) {
  const int len = static_cast<int>(chain.size());
  if (len < 2) throw std::invalid_argument("boundary needs at least two slots");
  std::vector<int> parity(len);
  for (int s = 0; s < len; ++s) {
    const auto p = chain[s].parity();
    if (!p) throw std::invalid_argument("boundary needs homogeneous slots");
    parity[s] = *p;
  }
  ChainSum out;
  const int k = len - 2;
  for (int i = 0; i <= k; ++i) {
    std::vector<SuperPolynomial> face;
    for (int s = 0; s < len; ++s) {
      if (s == i) {
        face.push_back(star(ctx, chain[s], chain[s + 1]));
        ++s;
      } else {
        face.push_back(chain[s]);
      }
    }
    out.emplace_back(Rational(i % 2 ? -1 : 1), std::move(face));
  }
  int others = 0;
  for (int s = 0; s < len - 1; ++s) others += parity[s];
  const int exponent = (k + 1) + parity[len - 1] * others;
  std::vector<SuperPolynomial> wrap{star(ctx, chain[len - 1], chain[0])};
  for (int s = 1; s < len - 1; ++s) wrap.push_back(chain[s]);
  out.emplace_back(Rational(exponent % 2 ? -1 : 1), std::move(wrap));
  return out;
}

TensorChain to_tensor(const ChainSum& sum) {
  if (sum.empty()) return TensorChain(0);
  TensorChain out(static_cast<int>(sum.front().second.size()));
  for (const auto& [c, slots] : sum) out += TensorChain::from_slots(slots) * c;
  return out;
}

Polynomial tau_of_boundary(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain) {
  Polynomial total(1);
  for (const auto& [c, homogeneous] : split_homogeneous(chain))
    for (const auto& [s, face] : hochschild_boundary(ctx, homogeneous)) total += tau(ctx, face) * (c * s);
  return total;
}

RelativeReport check_relative(const AlgebraContext& ctx, std::span<const std::vector<SuperPolynomial>> chains,
                              std::span<const SuperPolynomial> generators) {
  RelativeReport report;
  const SuperPolynomial one = SuperPolynomial::constant(Rational(1));
  auto insertion_sum = [&](const std::vector<SuperPolynomial>& chain, const SuperPolynomial& a) {
    Polynomial total(1);
    const int len = static_cast<int>(chain.size());
    for (int j = 1; j <= len; ++j) {
      std::vector<SuperPolynomial> with(chain.begin(), chain.begin() + j);
      with.push_back(a);
      with.insert(with.end(), chain.begin() + j, chain.end());
      total += tau(ctx, with) * Rational(j % 2 ? -1 : 1);
    }
    return total;
  };
  for (const auto& chain : chains) {
    if (chain.size() % 2 != 0) throw std::invalid_argument("check_relative needs chains of 2n slots");
    for (const auto& x : generators) {
      // a = (1/hbar)[Phi(x), 1]; the bracket is divisible by hbar
      SuperPolynomial a;
      const SuperPolynomial bracket = super_bracket(ctx, x, one);
      for (const auto& [m, c] : bracket.terms()) {
        if (m.hbar == 0) throw std::logic_error("bracket not divisible by hbar");
        SuperMonomial lowered = m;
        lowered.hbar--;
        a.add_term(lowered, c);
      }
      ++report.evaluations;
      if (!insertion_sum(chain, a).is_zero()) ++report.nonzero_rho_insertions;
      if (!insertion_sum(chain, x).is_zero()) ++report.nonzero_phi_insertions;
    }
  }
  return report;
}

int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[i][c] -= f * rows[r][c];
    }
    ++r;
  }
  return r;
}

int hh0_dimension(int a, int b) {
  if (a + b > 4) throw std::invalid_argument("hh0_dimension supports a + b <= 4");
  const AlgebraContext ctx(0, a, b);
  const int dim = 1 << ctx.num_odd();
  std::vector<std::vector<Rational>> rows;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      SuperMonomial mx, my;
      mx.odd = static_cast<std::uint32_t>(x);
      my.odd = static_cast<std::uint32_t>(y);
      const auto fx = SuperPolynomial::term(mx, Rational(1)), fy = SuperPolynomial::term(my, Rational(1));
      std::vector<Rational> row(dim, Rational(0));
      const SuperPolynomial bracket = super_bracket(ctx, fx, fy);
      for (const auto& [m, c] : bracket.terms()) row[m.odd] += c;  // hbar = 1
      rows.push_back(std::move(row));
    }
  return dim - rank(std::move(rows));
}

}  // namespace superindex
