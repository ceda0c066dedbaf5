// Test-only reference implementations. Deliberately naive and independent of
// the library's elimination code.
#pragma once

#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "knotcode/finite_field.hpp"
#include "knotcode/integer.hpp"
#include "knotcode/laurent_poly.hpp"
#include "knotcode/matrix.hpp"

namespace oracle {

using knotcode::FqElem;
using knotcode::FqField;
using knotcode::Integer;
using knotcode::LaurentPoly;
using knotcode::Matrix;

inline LaurentPoly lp(std::initializer_list<long> ascending, std::int64_t min_deg = 0) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return LaurentPoly::from_coeffs(min_deg, std::move(c));
}

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == T{}) continue;
    T minor = cofactor_det(m.without(0, j));
    if (j % 2 == 0)
      acc = acc + m(0, j) * minor;
    else
      acc = acc - m(0, j) * minor;
  }
  return acc;
}

inline FqElem fq_cofactor_det(const FqField& f, const Matrix<FqElem>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return f.one();
  if (n == 1) return m(0, 0);
  FqElem acc = f.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).code == 0) continue;
    FqElem term = f.mul(m(0, j), fq_cofactor_det(f, m.without(0, j)));
    acc = j % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

// Rank over F_q as the largest size of a nonzero minor (small matrices only).
inline std::size_t fq_rank_by_minors(const FqField& f, const Matrix<FqElem>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::size_t> rs(k);
    std::vector<std::size_t> cs(k);
    std::function<bool(std::size_t, std::size_t)> pick_rows;
    std::function<bool(std::size_t, std::size_t)> pick_cols = [&](std::size_t i, std::size_t start) {
      if (i == k) return fq_cofactor_det(f, m.submatrix(rs, cs)).code != 0;
      for (std::size_t c = start; c < cols; ++c) {
        cs[i] = c;
        if (pick_cols(i + 1, c + 1)) return true;
      }
      return false;
    };
    pick_rows = [&](std::size_t i, std::size_t start) {
      if (i == k) return pick_cols(0, 0);
      for (std::size_t r = start; r < rows; ++r) {
        rs[i] = r;
        if (pick_rows(i + 1, r + 1)) return true;
      }
      return false;
    };
    if (pick_rows(0, 0)) return k;
  }
  return 0;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

// Number of assignments x in (Z/m)^cols with m x^T = 0 mod m, by enumeration.
inline std::uint64_t brute_force_count_mod(const Matrix<Integer>& a, std::uint64_t m) {
  const std::size_t n = a.cols();
  std::vector<std::uint64_t> x(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) s += a(r, c) * Integer(static_cast<unsigned long>(x[c]));
      ok = knotcode::mod_u64(s, m) == 0;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++x[i] == m) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Every x in F_q^n with parity x^T = 0, found by running through all of F_q^n.
inline std::vector<std::vector<FqElem>> brute_force_codewords(const FqField& f, const Matrix<FqElem>& parity) {
  const std::size_t n = parity.cols();
  std::vector<FqElem> x(n, f.zero());
  std::vector<std::vector<FqElem>> out;
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < parity.rows() && ok; ++r) {
      FqElem s = f.zero();
      for (std::size_t c = 0; c < n; ++c) s = f.add(s, f.mul(parity(r, c), x[c]));
      ok = s.code == 0;
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < n && ++x[i].code == f.size()) x[i++].code = 0;
    if (i == n) break;
  }
  return out;
}

inline std::vector<std::uint64_t> weight_counts(const std::vector<std::vector<FqElem>>& words, std::size_t n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  for (const auto& w : words) ++a[std::count_if(w.begin(), w.end(), [](FqElem v) { return v.code != 0; })];
  return a;
}

// A and B agree after permuting B's columns, permuting its rows and flipping
// the signs of some rows. Tries every column permutation (small matrices only).
inline bool equivalent_up_to_perm_and_sign(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto canon_rows = [](const Matrix<Integer>& m, const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::vector<Integer> row;
      for (std::size_t c : cols) row.push_back(m(r, c));
      const auto lead = std::find_if(row.begin(), row.end(), [](const Integer& v) { return v != 0; });
      if (lead != row.end() && *lead < 0)
        for (auto& v : row) v = -v;
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  std::vector<std::size_t> id(a.cols());
  std::iota(id.begin(), id.end(), 0);
  const auto target = canon_rows(a, id);
  std::vector<std::size_t> perm = id;
  do {
    if (canon_rows(b, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
