#pragma once

#include <vector>

#include "toep/rational.hpp"
#include "toep/scalar.hpp"
#include "toep/series.hpp"

namespace toep {

using RationalMatrix = std::vector<std::vector<Rational>>;
using SeriesMatrix = std::vector<std::vector<Series>>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Fraction-free Bareiss after clearing row denominators. Exact.
Rational det_rational(const RationalMatrix& m);

// Division elimination with row pivoting on minimal valuation among
// valuation <= 0 candidates. When a column offers no such pivot the remaining
// block falls back to cofactor expansion up to size 6; larger blocks are
// refused (InputError) rather than given a wrong answer.
Series det_series(const SeriesMatrix& m);

// Dispatch: all-rational matrices take the Bareiss path, otherwise rationals
// widen to exact series constants.
Scalar det_scalar(const ScalarMatrix& m);

// Exact Gauss-Jordan. InputError when singular.
RationalMatrix invert_rational(const RationalMatrix& m);

// Adjugate over series determinants; divides by det_series(m).
SeriesMatrix invert_series(const SeriesMatrix& m);

ScalarMatrix invert_scalar(const ScalarMatrix& m);

}  // namespace toep
