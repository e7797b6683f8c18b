#pragma once

#include <random>

#include "goorbit/field.hpp"
#include "goorbit/linalg.hpp"

namespace goorbit::testing {

// Random field element with small integer-over-small-denominator coordinates.
inline Scalar random_scalar(std::mt19937_64& rng, int density_percent = 60, int range = 5) {
  std::uniform_int_distribution<int> coin(0, 99), num(-range, range), den(1, 3);
  Scalar s;
  for (int i = 0; i < Scalar::kDim; ++i)
    if (coin(rng) < density_percent) s.set_coeff(i, Rational(num(rng), den(rng)));
  return s;
}

inline Scalar random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

}  // namespace goorbit::testing
