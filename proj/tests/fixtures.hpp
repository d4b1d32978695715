#pragma once

// Reference data shared by the unit tests and the acceptance runner.

#include "bq/alexander.hpp"

namespace fixtures {

using P = bq::LaurentPoly;

inline const P s = P::s(), t = P::t();

// Relation matrices of the two virtual knot pairs with identical Alexander biquandles.
inline bq::LaurentMatrix knot_pair_matrix_1() {
  return {{-1, 0, -t * (s * t - 1), s * s * t * t - s * t + 1},
          {0, -1, s * t, -s * (s * t - 1)},
          {-1, s * t - 1, -s * t + 2, 0},
          {0, s * t, -s * t + 1, -1}};
}

inline bq::LaurentMatrix knot_pair_matrix_2() {
  return {{-1, 0, -t * (s * t - 1), s * s * t * t - s * t + 1},
          {0, -1, s * t, -s * (s * t - 1)},
          {-1, 2 * s * t - 2, -2 * s * t + 3, 0},
          {0, 2 * s * t - 1, -2 * s * t + 2, -1}};
}

// (s - 1)(t - 1)(st - 1), the common determinant of both pairs.
inline P knot_pair_determinant() { return (s - 1) * (t - 1) * (s * t - 1); }

} // namespace fixtures
