#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knotcode/integer.hpp"
#include "knotcode/matrix.hpp"
#include "knotcode/poly_fp.hpp"

namespace knotcode {

/// Euclidean structure on Z: norm is |a|, units are +-1.
struct IntegerDomain {
  using Elem = Integer;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Integer norm(const Elem& a) const { return abs_value(a); }
  /// Quotient with |remainder| < |b|.
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
    Elem q;
    Elem r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  /// Unit u with u * a in normal form (non-negative).
  Elem normalizing_unit(const Elem& a) const { return a < 0 ? Elem(-1) : Elem(1); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
};

/// Euclidean structure on F_p[T]: norm is the degree, units are nonzero constants.
struct PolyFpDomain {
  using Elem = PolyFp;
  std::uint64_t p;
  Elem zero() const { return PolyFp(p, {}); }
  Elem one() const { return PolyFp::constant(p, 1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  int norm(const Elem& a) const { return a.degree(); }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return a.divmod(b); }
  Elem normalizing_unit(const Elem& a) const {
    return a.is_zero() ? one() : PolyFp(p, {inv_mod(a.leading(), p)});
  }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
};

/// Smith normal form of a matrix over a Euclidean domain.
///
/// `diagonal` holds the entries of U*A*V in the order they sit on the main
/// diagonal (nonzero d_1 | d_2 | ... first, then zeros). `invariant_factors`
/// lists the same min(rows, cols) values in ideal-increasing order: zeros
/// first, then the nonzero factors from the largest to the unit end.
template <class Elem>
struct SnfResult {
  std::vector<Elem> invariant_factors;
  std::vector<Elem> diagonal;
  std::size_t rank = 0;
  Matrix<Elem> U;
  Matrix<Elem> V;
};

namespace detail {

template <class D>
void row_axpy(const D& dom, Matrix<typename D::Elem>& m, std::size_t dst, std::size_t src,
              const typename D::Elem& q) {
  // row dst -= q * row src
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (dom.is_zero(m(src, c))) continue;
    m(dst, c) = dom.sub(m(dst, c), dom.mul(q, m(src, c)));
  }
}

template <class D>
void col_axpy(const D& dom, Matrix<typename D::Elem>& m, std::size_t dst, std::size_t src,
              const typename D::Elem& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (dom.is_zero(m(r, src))) continue;
    m(r, dst) = dom.sub(m(r, dst), dom.mul(q, m(r, src)));
  }
}

}  // namespace detail

/// Smith normal form with smallest-norm pivoting (ties: first in row-major
/// order). Records U, V with U * a * V = diag.
template <class D>
SnfResult<typename D::Elem> smith_normal_form(const D& dom, const Matrix<typename D::Elem>& a) {
  using Elem = typename D::Elem;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix<Elem> A = a;
  Matrix<Elem> U = identity_matrix(m, dom.zero(), dom.one());
  Matrix<Elem> V = identity_matrix(n, dom.zero(), dom.one());
  const std::size_t l = std::min(m, n);
  std::size_t t = 0;
  for (; t < l; ++t) {
    while (true) {
      // pivot search
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (dom.is_zero(A(i, j))) continue;
          if (!piv || dom.norm(A(i, j)) < dom.norm(A(piv->first, piv->second))) piv = {i, j};
        }
      if (!piv) break;
      A.swap_rows(t, piv->first);
      U.swap_rows(t, piv->first);
      A.swap_cols(t, piv->second);
      V.swap_cols(t, piv->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (dom.is_zero(A(i, t))) continue;
        auto [q, r] = dom.divmod(A(i, t), A(t, t));
        detail::row_axpy(dom, A, i, t, q);
        detail::row_axpy(dom, U, i, t, q);
        if (!dom.is_zero(r)) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (dom.is_zero(A(t, j))) continue;
        auto [q, r] = dom.divmod(A(t, j), A(t, t));
        detail::col_axpy(dom, A, j, t, q);
        detail::col_axpy(dom, V, j, t, q);
        if (!dom.is_zero(r)) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the submatrix
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!dom.is_zero(dom.divmod(A(i, j), A(t, t)).second)) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      // row t += row bad
      detail::row_axpy(dom, A, t, *bad_row, dom.sub(dom.zero(), dom.one()));
      detail::row_axpy(dom, U, t, *bad_row, dom.sub(dom.zero(), dom.one()));
    }
    if (dom.is_zero(A(t, t))) break;
    const Elem u = dom.normalizing_unit(A(t, t));
    for (std::size_t c = 0; c < n; ++c) A(t, c) = dom.mul(u, A(t, c));
    for (std::size_t c = 0; c < m; ++c) U(t, c) = dom.mul(u, U(t, c));
  }

  SnfResult<Elem> res;
  res.rank = t;
  res.diagonal.reserve(l);
  for (std::size_t i = 0; i < l; ++i) res.diagonal.push_back(A(i, i));
  for (std::size_t i = l; i-- > 0;) res.invariant_factors.push_back(res.diagonal[i]);
  res.U = std::move(U);
  res.V = std::move(V);
  return res;
}

}  // namespace knotcode
