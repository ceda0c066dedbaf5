#pragma once

#include "knotcode/integer.hpp"
#include "knotcode/laurent_poly.hpp"
#include "knotcode/matrix.hpp"

namespace knotcode {

/// Determinant over Z[T, T^-1]. Each row is first multiplied by a power of T
/// so that all entries are ordinary polynomials, then fraction-free (Bareiss)
/// elimination is run with exact division. The 0x0 determinant is 1.
LaurentPoly laurent_det(const Matrix<LaurentPoly>& m);

/// Bareiss determinant over Z.
Integer integer_det(const Matrix<Integer>& m);

/// Entry-wise evaluation at an integer. Negative exponents need t = +-1.
Matrix<Integer> evaluate_at(const Matrix<LaurentPoly>& m, const Integer& t);

}  // namespace knotcode
