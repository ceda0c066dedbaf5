#pragma once

#include <cstddef>
#include <vector>

#include "knotcode/finite_field.hpp"
#include "knotcode/laurent_poly.hpp"
#include "knotcode/matrix.hpp"

namespace knotcode {

using FqMatrix = Matrix<FqElem>;
using FqVector = std::vector<FqElem>;

/// Reduced row echelon form; `pivots` lists the pivot column of each nonzero row.
struct RrefResult {
  FqMatrix rref;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FqField& f, FqMatrix m);
std::size_t rank(const FqField& f, const FqMatrix& m);

/// Rows form a basis of {x : m x^T = 0}; there are cols - rank of them.
FqMatrix kernel_basis(const FqField& f, const FqMatrix& m);

/// Rows of the reduced echelon form, i.e. a basis of the row space.
FqMatrix row_basis(const FqField& f, const FqMatrix& m);

/// m * x^T.
FqVector mat_vec(const FqField& f, const FqMatrix& m, const FqVector& x);

/// Image of an integer Laurent polynomial at t (t must be nonzero if negative
/// exponents occur).
FqElem evaluate(const FqField& f, const LaurentPoly& p, FqElem t);
FqMatrix evaluate(const FqField& f, const Matrix<LaurentPoly>& m, FqElem t);

/// Image of an integer in F_q.
FqElem to_field(const FqField& f, const Integer& v);

}  // namespace knotcode
