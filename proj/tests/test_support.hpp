#ifndef SUPERINDEX_TEST_SUPPORT_HPP
#define SUPERINDEX_TEST_SUPPORT_HPP

#include "superindex/random.hpp"

namespace superindex::test {

inline SuperPolynomial random_element(const AlgebraContext& ctx, std::mt19937_64& rng, int degree) {
  return random_super_polynomial(ctx, rng, degree, 4);
}

inline SuperPolynomial random_homogeneous(const AlgebraContext& ctx, std::mt19937_64& rng, int degree) {
  return random_homogeneous_polynomial(ctx, rng, degree, 4, std::uniform_int_distribution<int>(0, 1)(rng));
}

}  // namespace superindex::test

#endif
