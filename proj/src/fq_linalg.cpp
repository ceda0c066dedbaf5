#include "knotcode/fq_linalg.hpp"

#include <stdexcept>

namespace knotcode {

RrefResult rref(const FqField& f, FqMatrix m) {
  RrefResult res;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).code == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(row, piv);
    const FqElem inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).code == 0) continue;
      const FqElem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rref = std::move(m);
  return res;
}

std::size_t rank(const FqField& f, const FqMatrix& m) { return rref(f, m).pivots.size(); }

FqMatrix kernel_basis(const FqField& f, const FqMatrix& m) {
  const auto [r, pivots] = rref(f, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  FqMatrix out(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(n, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    out.append_row(v);
  }
  return out;
}

FqMatrix row_basis(const FqField& f, const FqMatrix& m) {
  const auto [r, pivots] = rref(f, m);
  FqMatrix out(0, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(r.row(i));
  return out;
}

FqVector mat_vec(const FqField& f, const FqMatrix& m, const FqVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
  FqVector out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).code != 0 && x[c].code != 0) out[r] = f.add(out[r], f.mul(m(r, c), x[c]));
  return out;
}

FqElem to_field(const FqField& f, const Integer& v) {
  return f.from_int(static_cast<std::int64_t>(mod_u64(v, f.characteristic())));
}

FqElem evaluate(const FqField& f, const LaurentPoly& p, FqElem t) {
  if (p.is_zero()) return f.zero();
  FqElem acc = f.zero();
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, t), to_field(f, c[i]));
  return f.mul(acc, f.pow(t, p.min_deg()));
}

FqMatrix evaluate(const FqField& f, const Matrix<LaurentPoly>& m, FqElem t) {
  return m.map([&](const LaurentPoly& p) { return evaluate(f, p, t); });
}

}  // namespace knotcode
