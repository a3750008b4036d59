// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/algebra.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace superindex {

AlgebraContext::AlgebraContext(int n, int a, int b) : n_(n), a_(a), b_(b) {
  if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("negative type parameter");
  if (a > b) throw std::invalid_argument("type requires a <= b");
  if (n > kMaxPairs) throw std::invalid_argument("n exceeds " + std::to_string(kMaxPairs));
  if (a + b > kMaxOdd) throw std::invalid_argument("a + b exceeds " + std::to_string(kMaxOdd));
  const int m = a + b;
  hq_.assign(m, std::vector<int>(m, 0));
  for (int r = 1; r <= a; ++r) {
    hq_[zeta(r)][eta(r)] = hq_[eta(r)][zeta(r)] = 1;
    odd_names_.push_back({OddRole::Zeta, r});
    odd_names_.push_back({OddRole::Eta, r});
  }
  for (int s = 1; s <= zhat(); ++s) {
    odd_names_.push_back({OddRole::Xi, s});
    odd_names_.push_back({OddRole::Mu, s});
  }
  if (has_upsilon()) odd_names_.push_back({OddRole::Upsilon, 1});
  for (int i = 2 * a; i < m; ++i) hq_[i][i] = -1;
}

namespace {

void check_role_index(int i, int bound, const char* what) {
  if (i < 1 || i > bound) throw std::out_of_range(std::string(what) + " index out of range");
}

}  // namespace

int AlgebraContext::p(int i) const { return check_role_index(i, n_, "p"), i - 1; }
int AlgebraContext::q(int i) const { return check_role_index(i, n_, "q"), n_ + i - 1; }
int AlgebraContext::zeta(int r) const { return check_role_index(r, a_, "zeta"), 2 * (r - 1); }
int AlgebraContext::eta(int r) const { return check_role_index(r, a_, "eta"), 2 * (r - 1) + 1; }
int AlgebraContext::xi(int s) const { return check_role_index(s, zhat(), "xi"), 2 * a_ + 2 * (s - 1); }
int AlgebraContext::mu(int s) const { return check_role_index(s, zhat(), "mu"), 2 * a_ + 2 * (s - 1) + 1; }
int AlgebraContext::upsilon() const {
  if (!has_upsilon()) throw std::out_of_range("type has no upsilon");
  return a_ + b_ - 1;
}

std::string AlgebraContext::odd_role_label(int theta_index) const {
  const OddName& nm = odd_names_.at(theta_index);
  switch (nm.role) {
    case OddRole::Zeta: return "zeta" + std::to_string(nm.index);
    case OddRole::Eta: return "eta" + std::to_string(nm.index);
    case OddRole::Xi: return "xi" + std::to_string(nm.index);
    case OddRole::Mu: return "mu" + std::to_string(nm.index);
    case OddRole::Upsilon: return "upsilon";
  }
  return {};
}

int SuperMonomial::parity() const { return std::popcount(odd) & 1; }

int SuperMonomial::even_degree() const {
  int d = 0;
  for (auto e : even) d += e;
  return d;
}

int SuperMonomial::degree() const { return even_degree() + std::popcount(odd); }

int odd_product_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> j);  // bits of a above j (j itself is absent)
  }
  return (swaps & 1) ? -1 : 1;
}

int odd_derivative_sign(std::uint32_t mask, int i) {
  return (std::popcount(mask & ((1u << i) - 1u)) & 1) ? -1 : 1;
}

SuperPolynomial SuperPolynomial::constant(const Rational& c) { return term(SuperMonomial{}, c); }

SuperPolynomial SuperPolynomial::term(const SuperMonomial& m, const Rational& c) {
  SuperPolynomial f;
  f.add_term(m, c);
  return f;
}

SuperPolynomial SuperPolynomial::even_variable(int index) {
  SuperMonomial m;
  m.even.at(index) = 1;
  return term(m, Rational(1));
}

SuperPolynomial SuperPolynomial::odd_variable(int index) {
  SuperMonomial m;
  m.odd = 1u << index;
  return term(m, Rational(1));
}

SuperPolynomial SuperPolynomial::hbar() {
  SuperMonomial m;
  m.hbar = 1;
  return term(m, Rational(1));
}

SuperPolynomial SuperPolynomial::orientation(const AlgebraContext& ctx) {
  SuperMonomial m;
  m.odd = ctx.orientation_mask();
  return term(m, Rational(1));
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperPolynomial::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SuperPolynomial::parity() const {
  if (terms_.empty()) return 0;
  const int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

int SuperPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

// Returns 0 when the odd parts overlap.
int multiply_monomials(const SuperMonomial& x, const SuperMonomial& y, SuperMonomial& out) {
  const int s = odd_product_sign(x.odd, y.odd);
  if (s == 0) return 0;
  for (std::size_t i = 0; i < out.even.size(); ++i) out.even[i] = static_cast<std::uint8_t>(x.even[i] + y.even[i]);
  out.odd = x.odd | y.odd;
  out.hbar = static_cast<std::uint16_t>(x.hbar + y.hbar);
  return s;
}

using MonomialPair = std::pair<SuperMonomial, SuperMonomial>;
using PairMap = std::map<MonomialPair, Rational>;

void accumulate(PairMap& target, const MonomialPair& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = target.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) target.erase(it);
  }
}

// One application of the Poisson bivector, Koszul rule (D1 (x) D2)(x (x) y) = (-1)^{|D2||x|} D1x (x) D2y.
PairMap apply_bivector(const AlgebraContext& ctx, const PairMap& in) {
  PairMap out;
  const int n = ctx.n();
  const int m = ctx.num_odd();
  for (const auto& [key, c] : in) {
    const auto& [x, y] = key;
    for (int l = 0; l < n; ++l) {
      const int pl = l, ql = n + l;
      if (x.even[pl] && y.even[ql]) {
        MonomialPair k = key;
        k.first.even[pl]--;
        k.second.even[ql]--;
        accumulate(out, k, c * (int(x.even[pl]) * int(y.even[ql])));
      }
      if (x.even[ql] && y.even[pl]) {
        MonomialPair k = key;
        k.first.even[ql]--;
        k.second.even[pl]--;
        accumulate(out, k, -c * (int(x.even[ql]) * int(y.even[pl])));
      }
    }
    if (m == 0 || x.odd == 0 || y.odd == 0) continue;
    const int koszul = x.parity() ? -1 : 1;
    for (int i = 0; i < m; ++i) {
      if (!(x.odd >> i & 1u)) continue;
      for (int j = 0; j < m; ++j) {
        const int hij = ctx.h(i, j);
        if (hij == 0 || !(y.odd >> j & 1u)) continue;
        const int s = -hij * koszul * odd_derivative_sign(x.odd, i) * odd_derivative_sign(y.odd, j);
        MonomialPair k = key;
        k.first.odd &= ~(1u << i);
        k.second.odd &= ~(1u << j);
        accumulate(out, k, c * s);
      }
    }
  }
  return out;
}

}  // namespace

SuperPolynomial symbol_product(const SuperPolynomial& f, const SuperPolynomial& g) {
  SuperPolynomial r;
  SuperMonomial out;
  for (const auto& [x, cx] : f.terms())
    for (const auto& [y, cy] : g.terms())
      if (int s = multiply_monomials(x, y, out)) r.add_term(out, s * cx * cy);
  return r;
}

SuperPolynomial star(const AlgebraContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g) {
  PairMap current;
  for (const auto& [x, cx] : f.terms())
    for (const auto& [y, cy] : g.terms()) accumulate(current, {x, y}, cx * cy);
  SuperPolynomial r;
  Rational weight(1);
  SuperMonomial out;
  for (int k = 0; !current.empty(); ++k) {
    if (k > 0) weight /= 2 * k;
    for (const auto& [key, c] : current)
      if (int s = multiply_monomials(key.first, key.second, out)) {
        out.hbar = static_cast<std::uint16_t>(out.hbar + k);
        r.add_term(out, s * weight * c);
      }
    current = apply_bivector(ctx, current);
  }
  return r;
}

Variable parse_variable(const AlgebraContext& ctx, std::string_view name) {
  auto index_after = [&](std::size_t prefix) -> int {
    std::string_view digits = name.substr(prefix);
    if (digits.empty() || digits.size() > 3) return -1;
    int v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  int i = -1;
  if (name.starts_with("th") && (i = index_after(2)) >= 1 && i <= ctx.num_odd()) return {Variable::Kind::Odd, i - 1};
  if (name.starts_with("p") && (i = index_after(1)) >= 1 && i <= ctx.n()) return {Variable::Kind::Even, ctx.p(i)};
  if (name.starts_with("q") && (i = index_after(1)) >= 1 && i <= ctx.n()) return {Variable::Kind::Even, ctx.q(i)};
  throw std::invalid_argument("unknown variable: " + std::string(name));
}

SuperPolynomial partial(const AlgebraContext& ctx, Variable var, const SuperPolynomial& f) {
  SuperPolynomial r;
  if (var.kind == Variable::Kind::Even) {
    if (var.index < 0 || var.index >= ctx.num_even()) throw std::out_of_range("even variable index");
    for (const auto& [m_in, c] : f.terms()) {
      auto m = m_in;
      const int e = m.even[var.index];
      if (e == 0) continue;
      m.even[var.index]--;
      r.add_term(m, c * e);
    }
    return r;
  }
  if (var.index < 0 || var.index >= ctx.num_odd()) throw std::out_of_range("odd variable index");
  const std::uint32_t bit = 1u << var.index;
  for (const auto& [m_in, c] : f.terms()) {
    auto m = m_in;
    if (!(m.odd & bit)) continue;
    const int s = odd_derivative_sign(m.odd, var.index);
    m.odd &= ~bit;
    r.add_term(m, s * c);
  }
  return r;
}

SuperPolynomial super_bracket(const AlgebraContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g) {
  const auto pf = f.parity(), pg = g.parity();
  if (!pf || !pg) throw std::invalid_argument("super_bracket needs homogeneous arguments");
  SuperPolynomial r = star(ctx, f, g);
  if (*pf && *pg)
    r += star(ctx, g, f);
  else
    r -= star(ctx, g, f);
  return r;
}

SuperPolynomial berezin(const AlgebraContext& ctx, const SuperPolynomial& f) {
  SuperPolynomial r;
  const std::uint32_t top = ctx.orientation_mask();
  for (const auto& [m_in, c] : f.terms()) {
    auto m = m_in;
    if (m.odd != top) continue;
    m.odd = 0;
    r.add_term(m, c);
  }
  return r;
}

SuperPolynomial at_zero_even(const SuperPolynomial& f) {
  SuperPolynomial r;
  for (const auto& [m, c] : f.terms())
    if (m.even_degree() == 0) r.add_term(m, c);
  return r;
}

Polynomial upsilon(const AlgebraContext& ctx, std::span<const SuperPolynomial> chain, ProductKind kind) {
  SuperPolynomial prod = SuperPolynomial::constant(Rational(1));
  for (const auto& s : chain) prod = kind == ProductKind::Star ? star(ctx, prod, s) : symbol_product(prod, s);
  Polynomial r(1);
  const SuperPolynomial top = berezin(ctx, at_zero_even(prod));
  for (const auto& [m, c] : top.terms()) r.add_term(Polynomial::Exponents{m.hbar}, c);
  return r;
}

SuperPolynomial phi_embed(const AlgebraContext& ctx, CartanKind kind, int index) {
  switch (kind) {
    case CartanKind::Symplectic:
      return symbol_product(SuperPolynomial::even_variable(ctx.q(index)), SuperPolynomial::even_variable(ctx.p(index)));
    case CartanKind::Hyperbolic:
      return symbol_product(SuperPolynomial::odd_variable(ctx.eta(index)), SuperPolynomial::odd_variable(ctx.zeta(index)));
    case CartanKind::Definite:
      return -symbol_product(SuperPolynomial::odd_variable(ctx.xi(index)), SuperPolynomial::odd_variable(ctx.mu(index)));
    case CartanKind::Center:
      return SuperPolynomial::constant(Rational(1));
  }
  throw std::invalid_argument("unknown Cartan kind");
}

std::vector<SuperPolynomial> quadratic_generators(const AlgebraContext& ctx) {
  std::vector<SuperPolynomial> out;
  const int e = ctx.num_even(), o = ctx.num_odd();
  for (int i = 0; i < e; ++i)
    for (int j = i; j < e; ++j)
      out.push_back(symbol_product(SuperPolynomial::even_variable(i), SuperPolynomial::even_variable(j)));
  for (int i = 0; i < o; ++i)
    for (int j = i + 1; j < o; ++j)
      out.push_back(symbol_product(SuperPolynomial::odd_variable(i), SuperPolynomial::odd_variable(j)));
  return out;
}

SuperPolynomial apply_linear_change(const AlgebraContext& ctx, const LinearChange& g, const SuperPolynomial& f) {
  const int ne = ctx.num_even(), no = ctx.num_odd();
  if (static_cast<int>(g.even.size()) != ne || static_cast<int>(g.odd.size()) != no)
    throw std::invalid_argument("linear change has wrong size");
  std::vector<SuperPolynomial> even_image(ne), odd_image(no);
  for (int k = 0; k < ne; ++k)
    for (int l = 0; l < ne; ++l) even_image[k] += SuperPolynomial::even_variable(l) * g.even[k].at(l);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) odd_image[i] += SuperPolynomial::odd_variable(j) * g.odd[i].at(j);
  SuperPolynomial r;
  for (const auto& [m, c] : f.terms()) {
    SuperMonomial scalar;
    scalar.hbar = m.hbar;
    SuperPolynomial t = SuperPolynomial::term(scalar, c);
    for (int k = 0; k < ne; ++k)
      for (int e = 0; e < m.even[k]; ++e) t = symbol_product(t, even_image[k]);
    for (int i = 0; i < no; ++i)
      if (m.odd >> i & 1u) t = symbol_product(t, odd_image[i]);
    r += t;
  }
  return r;
}

std::string format(const AlgebraContext& ctx, const SuperPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  const int n = ctx.n();
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    auto append = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (e > 1) mono += '^' + std::to_string(e);
    };
    append("hbar", m.hbar);
    for (int i = 0; i < n; ++i) append("p" + std::to_string(i + 1), m.even[i]);
    for (int i = 0; i < n; ++i) append("q" + std::to_string(i + 1), m.even[n + i]);
    for (int i = 0; i < ctx.num_odd(); ++i) append("th" + std::to_string(i + 1), (m.odd >> i) & 1u);
    const Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + " " + mono;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const AlgebraContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  SuperPolynomial parse() {
    SuperPolynomial r = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument(why + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view run(auto pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Juxtaposition ("1/2 hbar") multiplies, as in the canonical output.
  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '(';
  }

  SuperPolynomial expression() {
    SuperPolynomial r;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    r = product();
    if (negate) r = -r;
    for (;;) {
      if (accept('+'))
        r += product();
      else if (accept('-'))
        r -= product();
      else
        return r;
    }
  }

  SuperPolynomial product() {
    SuperPolynomial r = power();
    for (;;) {
      if (accept('*') || starts_atom()) {
        r = symbol_product(r, power());
        continue;
      }
      return r;
    }
  }

  SuperPolynomial power() {
    SuperPolynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::string_view digits = run([](unsigned char c) { return std::isdigit(c); });
    if (digits.empty() || digits.size() > 2) fail("bad exponent");
    SuperPolynomial r = SuperPolynomial::constant(Rational(1));
    for (int e = std::stoi(std::string(digits)); e > 0; --e) r = symbol_product(r, base);
    return r;
  }

  SuperPolynomial atom() {
    skip_space();
    if (accept('(')) {
      SuperPolynomial r = expression();
      if (!accept(')')) fail("missing ')'");
      return r;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string num(run([](unsigned char c) { return std::isdigit(c); }));
      if (accept('/')) {
        skip_space();
        std::string_view den = run([](unsigned char c) { return std::isdigit(c); });
        if (den.empty()) fail("bad denominator");
        num += "/" + std::string(den);
      }
      return SuperPolynomial::constant(parse_rational(num));
    }
    std::string_view name = run([](unsigned char c) { return std::isalnum(c) || c == '_'; });
    if (name.empty()) fail("expected a term");
    if (name == "hbar") return SuperPolynomial::hbar();
    if (name == "Theta") return SuperPolynomial::orientation(ctx_);
    try {
      const Variable v = parse_variable(ctx_, name);
      return v.kind == Variable::Kind::Even ? SuperPolynomial::even_variable(v.index)
                                            : SuperPolynomial::odd_variable(v.index);
    } catch (const std::invalid_argument&) {
      fail("unknown variable '" + std::string(name) + "'");
    }
  }

  const AlgebraContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPolynomial parse_super_polynomial(const AlgebraContext& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

}  // namespace superindex
