#pragma once

#include <cstddef>
#include <vector>

#include "knotcode/diagram.hpp"
#include "knotcode/finite_field.hpp"
#include "knotcode/fq_linalg.hpp"
#include "knotcode/integer.hpp"
#include "knotcode/laurent_poly.hpp"
#include "knotcode/matrix.hpp"
#include "knotcode/poly_fp.hpp"

namespace knotcode {

/// Alexander (Fox coloring) matrix: one row per crossing in input order, one
/// column per arc (arcs numbered by smallest edge). At each crossing the over
/// arc gets 1-T, the under arc on the left of the over strand -1 and the one
/// on the right T; coinciding arcs have their entries summed.
struct FoxMatrix {
  Matrix<LaurentPoly> entries;
  std::vector<ArcId> arc_order;
  std::vector<std::size_t> crossing_order;
};
FoxMatrix fox_matrix(const Diagram& d);

/// Dehn coloring matrix: row U_i - T U_j - U_k + T U_l per crossing, where
/// i/j are the regions left/right of the incoming over edge and k/l those of
/// the outgoing over edge. Columns follow the order in which regions first
/// occur in that (i, j, k, l) scan. With restrict_outer the unbounded
/// region's column is dropped (its color is pinned to 0).
struct DehnMatrix {
  Matrix<LaurentPoly> entries;
  std::vector<RegionId> region_order;
};
DehnMatrix dehn_matrix(const Diagram& d, bool restrict_outer = false);

/// Normalized generator of E_1: the (1,1) minor of the Fox matrix with its
/// lowest term made a positive constant. The unknot gives 1.
LaurentPoly alexander_polynomial(const Diagram& d);

/// |Delta(-1)|.
Integer knot_determinant(const Diagram& d);

enum class MatrixKind { fox, dehn };

/// All minors of size (columns - k) in lexicographic (rows, then columns)
/// order, unnormalized. Size 0 gives the single minor 1; a size larger than
/// the row count gives no minors (the ideal is zero).
std::vector<LaurentPoly> minor_family(const Diagram& d, MatrixKind kind, std::size_t k);

/// Delta(t) mod m shares a factor with m. t must be a unit mod m.
bool is_colorable_mod(const Diagram& d, const Integer& m, const Integer& t);
/// gcd(f, Delta(t)) != 1 in F_p[T]; t must be coprime to f.
bool is_colorable_poly(const Diagram& d, const PolyFp& f, const PolyFp& t);
/// Delta(t) = 0 in F_q; t must be nonzero.
bool is_colorable_fq(const Diagram& d, const FqField& f, FqElem t);

/// Number of Fox colorings over Z/(m) at t, from the invariant factors of M(t) over Z.
Integer count_colorings_mod(const Diagram& d, const Integer& m, const Integer& t);
/// Number of Fox colorings over F_p[T]/(f) at t, from the invariant factors of M(t) over F_p[T].
Integer count_colorings_poly_mod(const Diagram& d, const PolyFp& f, const PolyFp& t);

/// Fox matrix with T replaced by an integer or a polynomial over F_p.
Matrix<Integer> fox_matrix_at(const Diagram& d, const Integer& t);
Matrix<PolyFp> fox_matrix_at(const Diagram& d, const PolyFp& t);

/// Dehn coloring (indexed like dehn_matrix columns) whose unbounded region
/// has color `anchor` and whose arc colors are x_r = U_left - t U_right.
/// Throws std::invalid_argument if `fox` is not a Fox coloring.
FqVector fox_to_dehn(const Diagram& d, const FqField& f, FqElem t, const FqVector& fox, FqElem anchor);
/// Inverse direction: x_r = U_left - t U_right along any edge of arc r.
/// Throws std::invalid_argument if `dehn` is not a Dehn coloring.
FqVector dehn_to_fox(const Diagram& d, const FqField& f, FqElem t, const FqVector& dehn);

}  // namespace knotcode
