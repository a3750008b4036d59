// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#include "superindex/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superindex {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (num.front() == '+') num.remove_prefix(1);
  Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace superindex
