// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_RATIONAL_HPP
#define SUPERINDEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superindex {

// Always canonical: gmpxx normalises after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise or on q = 0.
Rational parse_rational(std::string_view text);

// Canonical p/q; the two-argument mpq_class constructor does not reduce.
Rational ratio(long p, long q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace superindex

#endif
