#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "knotcode/diagram.hpp"
#include "knotcode/finite_field.hpp"
#include "knotcode/laurent_poly.hpp"

namespace knotcode {

/// (T^ab - 1)(T - 1) / ((T^a - 1)(T^b - 1)), normalized. Signs of a and b are
/// dropped (the mirror image has the same polynomial up to units). Throws
/// std::invalid_argument unless a, b are nonzero and coprime.
LaurentPoly torus_alexander(long a, long b);

/// Alexander polynomial of the (a,b) cable around a knot with polynomial
/// `base`: torus_alexander(a, b) * base(T^b), normalized.
LaurentPoly cable_alexander(const LaurentPoly& base, long a, long b);

/// Elementary ideals E_k(M(t)) over a field, each either 0 or the whole
/// field. flags[k] is true for the whole field; every k past the stored
/// range is true.
struct EvaluatedIdealSeq {
  FqField field = FqField::prime(2);
  FqElem t;
  std::vector<bool> flags;

  bool at(std::size_t k) const { return k >= flags.size() || flags[k]; }
  /// Smallest k with E_k = F_q, which is the code dimension.
  std::size_t dimension() const;
  std::string to_string() const;
};

/// From the rank of the evaluated Fox matrix.
EvaluatedIdealSeq ideal_seq_from_diagram(const Diagram& d, const FqField& f, FqElem t);
/// The unknot: E_0 = 0, E_k = F_q for k >= 1.
EvaluatedIdealSeq unknot_ideal_seq(const FqField& f, FqElem t);

/// Sequence of the (a,b) cable at t from the companion's sequence at t^b:
/// e'_k = (delta != 0 and e_k) or e_(k-1), delta = torus_alexander(a, b)(t).
/// Throws std::invalid_argument if base.t != t^|b| or the fields differ.
EvaluatedIdealSeq cable_ideal_seq(const EvaluatedIdealSeq& base, long a, long b, FqElem t);

struct CableStep {
  long a = 0;
  long b = 0;
  FqElem t;       // argument of the resulting sequence
  FqElem t_base;  // argument the companion was evaluated at
  FqElem delta;
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  EvaluatedIdealSeq seq;
};

/// Iterated cable K(a1,b1,...,am,bm) at t. `base_at(s)` must return the
/// companion's sequence at s; it is called once, at s = t^(|b1|...|bm|).
std::vector<CableStep> iterated_cable(const std::function<EvaluatedIdealSeq(FqElem)>& base_at,
                                      const std::vector<std::pair<long, long>>& pairs, const FqField& f, FqElem t);

/// n_1 = 3, n_(m+1) = 4 n_m + p.
std::uint64_t iterated_cable_length(std::uint64_t p, unsigned m);

}  // namespace knotcode
