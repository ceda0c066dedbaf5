#include "knotcode/coloring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>

#include "knotcode/determinant.hpp"
#include "knotcode/snf.hpp"

namespace knotcode {

FoxMatrix fox_matrix(const Diagram& d) {
  require_valid(d);
  const ArcMap am = arcs(d);
  FoxMatrix fm;
  fm.entries = Matrix<LaurentPoly>(d.n(), am.count);
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::T();
  for (std::size_t r = 0; r < d.n(); ++r) {
    const Crossing& c = d.crossings[r];
    const EdgeId left = c.sign > 0 ? c.under_out : c.under_in;
    const EdgeId right = c.sign > 0 ? c.under_in : c.under_out;
    fm.entries(r, am.of_edge[c.over_in]) += one_minus_t;
    fm.entries(r, am.of_edge[left]) += LaurentPoly(-1);
    fm.entries(r, am.of_edge[right]) += LaurentPoly::T();
    fm.crossing_order.push_back(r);
  }
  for (ArcId a = 0; a < am.count; ++a) fm.arc_order.push_back(a);
  return fm;
}

DehnMatrix dehn_matrix(const Diagram& d, bool restrict_outer) {
  require_valid(d);
  const RegionMap reg = regions(d);
  std::vector<std::array<RegionId, 4>> rows;
  std::vector<std::optional<std::size_t>> column(reg.count);
  DehnMatrix dm;
  auto note = [&](RegionId r) {
    if (!column[r]) {
      column[r] = dm.region_order.size();
      dm.region_order.push_back(r);
    }
  };
  for (const Crossing& c : d.crossings) {
    const std::array<RegionId, 4> ijkl{reg.left[c.over_in], reg.right[c.over_in], reg.left[c.over_out],
                                       reg.right[c.over_out]};
    for (RegionId r : ijkl) note(r);
    rows.push_back(ijkl);
  }
  for (RegionId r = 0; r < reg.count; ++r) note(r);
  if (restrict_outer) {
    dm.region_order.erase(std::find(dm.region_order.begin(), dm.region_order.end(), reg.outer));
    std::fill(column.begin(), column.end(), std::nullopt);
    for (std::size_t i = 0; i < dm.region_order.size(); ++i) column[dm.region_order[i]] = i;
  }
  dm.entries = Matrix<LaurentPoly>(d.n(), dm.region_order.size());
  const LaurentPoly T = LaurentPoly::T();
  const std::array<LaurentPoly, 4> coef{LaurentPoly(1), -T, LaurentPoly(-1), T};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < 4; ++s)
      if (column[rows[r][s]]) dm.entries(r, *column[rows[r][s]]) += coef[s];
  return dm;
}

LaurentPoly alexander_polynomial(const Diagram& d) {
  if (d.is_trivial()) return LaurentPoly(1);
  const FoxMatrix fm = fox_matrix(d);
  return laurent_det(fm.entries.without(0, 0)).normalized();
}

Integer knot_determinant(const Diagram& d) { return abs_value(alexander_polynomial(d).evaluate(-1)); }

std::vector<LaurentPoly> minor_family(const Diagram& d, MatrixKind kind, std::size_t k) {
  const Matrix<LaurentPoly> m = kind == MatrixKind::fox ? fox_matrix(d).entries : dehn_matrix(d).entries;
  std::vector<LaurentPoly> out;
  if (k >= m.cols()) return {LaurentPoly(1)};
  const std::size_t size = m.cols() - k;
  if (size > m.rows()) return out;
  std::vector<std::size_t> rs(size);
  std::vector<std::size_t> cs(size);
  std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t i, std::size_t from) {
    if (i == size) {
      out.push_back(laurent_det(m.submatrix(rs, cs)));
      return;
    }
    for (std::size_t c = from; c + (size - i) <= m.cols(); ++c) {
      cs[i] = c;
      pick_cols(i + 1, c + 1);
    }
  };
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
    if (i == size) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r + (size - i) <= m.rows(); ++r) {
      rs[i] = r;
      pick_rows(i + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return out;
}

namespace {

PolyFp compose(const LaurentPoly& p, const PolyFp& t) {
  if (!p.is_zero() && p.min_deg() < 0) throw std::invalid_argument("negative powers of T cannot be composed with a polynomial");
  const std::uint64_t prime = t.prime();
  PolyFp acc(prime, {});
  for (std::int64_t e = p.max_deg(); e >= 0 && !p.is_zero(); --e)
    acc = acc * t + PolyFp(prime, {mod_u64(p.coeff(e), prime)});
  return acc;
}

void require_unit_mod(const Integer& m, const Integer& t) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (gcd(m, t) != 1) throw std::invalid_argument("t must be invertible modulo " + m.get_str());
}

void require_poly_args(const PolyFp& f, const PolyFp& t) {
  if (f.prime() != t.prime()) throw std::invalid_argument("modulus and t live over different primes");
  if (f.degree() < 1) throw std::invalid_argument("polynomial modulus must have positive degree");
  if (poly_gcd(f, t).degree() != 0) throw std::invalid_argument("t must be coprime to the polynomial modulus");
}

}  // namespace

Matrix<Integer> fox_matrix_at(const Diagram& d, const Integer& t) { return evaluate_at(fox_matrix(d).entries, t); }

Matrix<PolyFp> fox_matrix_at(const Diagram& d, const PolyFp& t) {
  return fox_matrix(d).entries.map([&](const LaurentPoly& p) { return compose(p, t); });
}

bool is_colorable_mod(const Diagram& d, const Integer& m, const Integer& t) {
  require_unit_mod(m, t);
  return gcd(m, alexander_polynomial(d).evaluate(t)) != 1;
}

bool is_colorable_poly(const Diagram& d, const PolyFp& f, const PolyFp& t) {
  require_poly_args(f, t);
  return poly_gcd(f, compose(alexander_polynomial(d), t)).degree() >= 1;
}

bool is_colorable_fq(const Diagram& d, const FqField& f, FqElem t) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  return evaluate(f, alexander_polynomial(d), t).code == 0;
}

Integer count_colorings_mod(const Diagram& d, const Integer& m, const Integer& t) {
  require_unit_mod(m, t);
  const Matrix<Integer> a = fox_matrix_at(d, t);
  const auto s = smith_normal_form(IntegerDomain{}, a);
  Integer count = 1;
  for (const auto& di : s.invariant_factors) count *= gcd(m, di);
  return count * ipow(m, a.cols() - s.invariant_factors.size());
}

Integer count_colorings_poly_mod(const Diagram& d, const PolyFp& f, const PolyFp& t) {
  require_poly_args(f, t);
  const Matrix<PolyFp> a = fox_matrix_at(d, t);
  const auto s = smith_normal_form(PolyFpDomain{f.prime()}, a);
  unsigned long exponent = static_cast<unsigned long>(f.degree()) * (a.cols() - s.invariant_factors.size());
  for (const auto& di : s.invariant_factors) exponent += static_cast<unsigned long>(poly_gcd(f, di).degree());
  return ipow(Integer(static_cast<unsigned long>(f.prime())), exponent);
}

namespace {

// Region colors indexed by RegionId, from arc colors and the outer anchor.
std::vector<FqElem> propagate_regions(const Diagram& d, const FqField& f, FqElem t, const FqVector& fox,
                                      FqElem anchor) {
  const RegionMap reg = regions(d);
  const ArcMap am = arcs(d);
  const FqElem t_inv = f.inv(t);
  const std::size_t m = d.is_trivial() ? 1 : d.edge_count();
  std::vector<std::vector<std::pair<RegionId, EdgeId>>> adj(reg.count);
  for (EdgeId e = 0; e < m; ++e) {
    adj[reg.left[e]].push_back({reg.right[e], e});
    adj[reg.right[e]].push_back({reg.left[e], e});
  }
  std::vector<std::optional<FqElem>> color(reg.count);
  color[reg.outer] = anchor;
  std::queue<RegionId> todo;
  todo.push(reg.outer);
  while (!todo.empty()) {
    const RegionId u = todo.front();
    todo.pop();
    for (auto [v, e] : adj[u]) {
      if (color[v]) continue;
      const FqElem x = fox[am.of_edge[e]];
      // x = U_left - t U_right
      color[v] = reg.left[e] == u ? f.mul(f.sub(*color[u], x), t_inv) : f.add(x, f.mul(t, *color[u]));
      todo.push(v);
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    const FqElem x = f.sub(*color[reg.left[e]], f.mul(t, *color[reg.right[e]]));
    if (x != fox[am.of_edge[e]]) throw std::invalid_argument("vector is not a Fox coloring of this diagram");
  }
  std::vector<FqElem> out;
  for (auto& c : color) out.push_back(*c);
  return out;
}

}  // namespace

FqVector fox_to_dehn(const Diagram& d, const FqField& f, FqElem t, const FqVector& fox, FqElem anchor) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  const FoxMatrix fm = fox_matrix(d);
  if (fox.size() != fm.entries.cols()) throw std::invalid_argument("Fox coloring has the wrong length");
  for (auto v : mat_vec(f, evaluate(f, fm.entries, t), fox))
    if (v.code != 0) throw std::invalid_argument("vector is not a Fox coloring of this diagram");
  const auto by_region = propagate_regions(d, f, t, fox, anchor);
  const DehnMatrix dm = dehn_matrix(d);
  FqVector out;
  for (RegionId r : dm.region_order) out.push_back(by_region[r]);
  return out;
}

FqVector dehn_to_fox(const Diagram& d, const FqField& f, FqElem t, const FqVector& dehn) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  const DehnMatrix dm = dehn_matrix(d);
  if (dehn.size() != dm.region_order.size()) throw std::invalid_argument("Dehn coloring has the wrong length");
  for (auto v : mat_vec(f, evaluate(f, dm.entries, t), dehn))
    if (v.code != 0) throw std::invalid_argument("vector is not a Dehn coloring of this diagram");
  const RegionMap reg = regions(d);
  std::vector<FqElem> by_region(reg.count);
  for (std::size_t i = 0; i < dm.region_order.size(); ++i) by_region[dm.region_order[i]] = dehn[i];
  const ArcMap am = arcs(d);
  FqVector fox(am.count);
  for (ArcId a = 0; a < am.count; ++a) {
    const EdgeId e = am.first_edge[a];
    fox[a] = f.sub(by_region[reg.left[e]], f.mul(t, by_region[reg.right[e]]));
  }
  // every edge of an arc must agree
  const std::size_t m = d.is_trivial() ? 1 : d.edge_count();
  for (EdgeId e = 0; e < m; ++e)
    if (f.sub(by_region[reg.left[e]], f.mul(t, by_region[reg.right[e]])) != fox[am.of_edge[e]])
      throw std::invalid_argument("vector is not a Dehn coloring of this diagram");
  return fox;
}

}  // namespace knotcode
