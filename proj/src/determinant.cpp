#include "knotcode/determinant.hpp"

#include <stdexcept>

namespace knotcode {

namespace {

// Bareiss elimination over a ring with exact division supplied by `divide`.
template <class T, class IsZero, class Divide>
T bareiss(Matrix<T> a, const T& one, IsZero is_zero, Divide divide) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) return T{};
      a.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divide(v, prev);
      }
      a(i, k) = T{};
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace

LaurentPoly laurent_det(const Matrix<LaurentPoly>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("laurent_det: matrix is not square");
  Matrix<LaurentPoly> a = m;
  std::int64_t total_shift = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool any = false;
    std::int64_t lo = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      lo = any ? std::min(lo, a(r, c).min_deg()) : a(r, c).min_deg();
      any = true;
    }
    if (!any) return {};
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = a(r, c).shifted(-lo);
    total_shift += lo;
  }
  const LaurentPoly det = bareiss<LaurentPoly>(
      std::move(a), LaurentPoly(1), [](const LaurentPoly& p) { return p.is_zero(); },
      [](const LaurentPoly& v, const LaurentPoly& d) {
        auto q = v.exact_divide(d);
        if (!q) throw std::logic_error("laurent_det: inexact Bareiss division");
        return *q;
      });
  return det.shifted(total_shift);
}

Integer integer_det(const Matrix<Integer>& m) {
  return bareiss<Integer>(
      m, Integer(1), [](const Integer& v) { return v == 0; },
      [](const Integer& v, const Integer& d) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        return q;
      });
}

Matrix<Integer> evaluate_at(const Matrix<LaurentPoly>& m, const Integer& t) {
  return m.map([&](const LaurentPoly& p) { return p.evaluate(t); });
}

}  // namespace knotcode
