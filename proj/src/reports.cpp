#include "knotcode/reports.hpp"

#include <algorithm>
#include <functional>

#include "knotcode/cable.hpp"
#include "knotcode/determinant.hpp"
#include "knotcode/snf.hpp"

namespace knotcode {

namespace {

json str(std::size_t v) { return std::to_string(v); }

json seq_to_json(const EvaluatedIdealSeq& s) {
  json flags = json::array();
  for (bool b : s.flags) flags.push_back(b);
  return {{"flags", flags}, {"text", s.to_string()}, {"dimension", str(s.dimension())}};
}

const char* kind_name(MatrixKind k) { return k == MatrixKind::fox ? "fox" : "dehn"; }

// Minor obtained by deleting row 0 and column 0 of the Fox matrix.
LaurentPoly corner_minor(const Diagram& d) {
  const auto m = fox_matrix(d).entries;
  return laurent_det(m.without(0, 0));
}

constexpr std::size_t kMinorFamilyLimit = 16;

// All first minors are +-T^s times Delta.
std::optional<bool> minors_agree(const Diagram& d) {
  if (d.n() > kMinorFamilyLimit) return std::nullopt;
  const LaurentPoly delta = alexander_polynomial(d);
  for (const LaurentPoly& m : minor_family(d, MatrixKind::fox, 1))
    if (m.normalized() != delta) return false;
  return true;
}

std::vector<std::uint64_t> small_prime_divisors(Integer v) {
  std::vector<std::uint64_t> out;
  v = abs_value(v);
  for (std::uint64_t p = 2; p < 1000 && v > 1; ++p) {
    if (!is_prime(p) || mod_u64(v, p) != 0) continue;
    out.push_back(p);
    while (mod_u64(v, p) == 0) v /= p;
  }
  return out;
}

}  // namespace

json Report::to_json() const {
  json w = json::array();
  for (const auto& s : warnings) w.push_back(s);
  return {{"outputs", outputs}, {"warnings", w}, {"status", static_cast<int>(status)}};
}

Report alexander_report(const Diagram& d) {
  require_valid(d);
  Report r;
  const LaurentPoly delta = alexander_polynomial(d);
  r.outputs["alexander"] = poly_to_json(delta);
  r.outputs["alexander_text"] = delta.to_string();
  r.outputs["determinant"] = integer_to_json(knot_determinant(d));
  return r;
}

Report invariants_report(const Diagram& d) {
  Report r = alexander_report(d);
  const ValidationReport v = validate_diagram(d);
  r.outputs["crossings"] = str(d.n());
  r.outputs["arcs"] = str(v.arc_count);
  r.outputs["regions"] = str(v.region_count);
  if (d.is_trivial()) {
    r.outputs["minor_family_consistent"] = true;
    r.outputs["det_minor_at_one"] = "1";
    return r;
  }
  const auto agree = minors_agree(d);
  if (agree) {
    r.outputs["minor_family_consistent"] = *agree;
  } else {
    r.outputs["minor_family_consistent"] = "skipped";
    r.warnings.push_back("minor family check skipped above " + std::to_string(kMinorFamilyLimit) + " crossings");
  }
  const Integer at_one = corner_minor(d).evaluate(1);
  r.outputs["det_minor_at_one"] = integer_to_json(at_one);
  if (abs_value(at_one) != 1) r.warnings.push_back("det M*(1) is not +-1");
  return r;
}

Report matrix_report(const Diagram& d, const MatrixOptions& o) {
  require_valid(d);
  Report r;
  r.outputs["kind"] = kind_name(o.kind);
  Matrix<LaurentPoly> entries;
  if (o.kind == MatrixKind::fox) {
    const FoxMatrix m = fox_matrix(d);
    entries = m.entries;
    json order = json::array();
    for (ArcId a : m.arc_order) order.push_back(str(a));
    r.outputs["arc_order"] = order;
  } else {
    const DehnMatrix m = dehn_matrix(d, o.restrict_outer);
    entries = m.entries;
    json order = json::array();
    for (RegionId g : m.region_order) order.push_back(str(g));
    r.outputs["region_order"] = order;
    r.outputs["restrict_outer"] = o.restrict_outer;
  }
  r.outputs["rows"] = str(entries.rows());
  r.outputs["cols"] = str(entries.cols());
  r.outputs["matrix"] = matrix_to_json(entries);
  if (o.at) {
    r.outputs["at"] = integer_to_json(*o.at);
    r.outputs["evaluated"] = matrix_to_json(evaluate_at(entries, *o.at));
  }
  return r;
}

Report code_report(const LinearCode& c, const CodeOptions& o) {
  Report r;
  r.outputs["field"] = field_to_json(c.field);
  r.outputs["n"] = str(c.n);
  r.outputs["k"] = str(c.k());
  for (const auto& note : c.notes) r.warnings.push_back(note);
  if (c.n * c.k() <= 4096) r.outputs["generator"] = matrix_to_json(c.field, c.generator);

  if (o.min_dist) {
    const Distance dist = min_distance(c, o.budget);
    r.outputs["d"] = dist.to_string();
    if (dist.kind == Distance::Kind::unknown) {
      r.warnings.push_back("minimum distance not computed: " + message_count(c).get_str() +
                           " messages exceed the budget of " + std::to_string(o.budget));
      r.status = ReportStatus::budget;
    }
  }
  if (o.weights) {
    try {
      json w = json::array();
      for (const Integer& a : weight_enumerator(c, o.budget).counts) w.push_back(integer_to_json(a));
      r.outputs["weights"] = w;
    } catch (const BudgetExceeded& e) {
      r.warnings.push_back(std::string("weight enumerator not computed: ") + e.what());
      r.status = ReportStatus::budget;
    }
  }

  const LdpcProfile p = ldpc_profile(c);
  json rows = json::array();
  json cols = json::array();
  for (auto w : p.row_weights) rows.push_back(str(w));
  for (auto w : p.col_weights) cols.push_back(str(w));
  r.outputs["ldpc"] = {{"row", rows}, {"col", cols}, {"verdict", p.verdict}};

  const DualFeasibility f = dual_knot_feasibility(c, {c.n, o.components});
  json rules = json::array();
  for (const auto& rule : f.rules)
    rules.push_back({{"rule", rule.rule}, {"ruled_out", rule.ruled_out}, {"detail", rule.detail}});
  r.outputs["dual_feasible"] = {{"ruled_out", f.ruled_out}, {"rules", rules}};
  return r;
}

Report code_report(const Diagram& d, const FqField& f, FqElem t, const CodeOptions& o) {
  require_valid(d);
  const LinearCode c = code_from_diagram(d, f, t, o.kind);
  Report r = code_report(c, o);
  r.outputs["t"] = elem_to_json(f, t);
  r.outputs["kind"] = kind_name(o.kind);
  if (o.kind == MatrixKind::fox) r.outputs["dimension_via_ideals"] = str(dimension_via_ideals(d, f, t));
  return r;
}

Report snf_report(const json& matrix, const std::string& ring) {
  Report r;
  r.outputs["ring"] = ring;
  auto fill = [&](const auto& res, auto&& enc) {
    json inv = json::array();
    json diag = json::array();
    for (const auto& v : res.invariant_factors) inv.push_back(enc(v));
    for (const auto& v : res.diagonal) diag.push_back(enc(v));
    r.outputs["invariant_factors"] = inv;
    r.outputs["diagonal"] = diag;
    r.outputs["rank"] = str(res.rank);
  };
  if (ring == "Z") {
    const auto m = int_matrix_from_json(matrix);
    fill(smith_normal_form(IntegerDomain{}, m), [](const Integer& v) { return integer_to_json(v); });
    return r;
  }
  std::string digits;
  for (char ch : ring)
    if (ch >= '0' && ch <= '9') digits += ch;
  const bool poly_ring = ring.size() > 4 && ring.front() == 'F' && ring.substr(ring.size() - 3) == "[T]";
  if (!poly_ring || digits.empty()) throw std::invalid_argument("ring must be Z or F_p[T]: \"" + ring + "\"");
  const std::uint64_t p = std::stoull(digits);
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + digits);
  const auto m = poly_fp_matrix_from_json(p, matrix);
  fill(smith_normal_form(PolyFpDomain{p}, m), [](const PolyFp& v) { return poly_fp_to_json(v); });
  return r;
}

Report colorings_report(const Diagram& d, const ColoringOptions& o) {
  require_valid(d);
  Report r;
  if (o.mod) {
    const auto ts = parse_int_list(o.t);
    if (ts.size() != 1) throw std::invalid_argument("t must be an integer for --mod");
    const Integer t(ts[0]);
    if (*o.mod < 1) throw std::invalid_argument("modulus must be positive");
    if (gcd(t, *o.mod) != 1) throw std::invalid_argument("t must be a unit modulo m");
    r.outputs["ring"] = "Z/(" + o.mod->get_str() + ")";
    r.outputs["t"] = integer_to_json(t);
    r.outputs["count"] = integer_to_json(count_colorings_mod(d, *o.mod, t));
    r.outputs["trivial"] = integer_to_json(*o.mod);
    r.outputs["colorable"] = is_colorable_mod(d, *o.mod, t);
  } else if (o.poly_mod) {
    const auto [p, fc] = *o.poly_mod;
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    const PolyFp f = PolyFp::from_signed(p, fc);
    const PolyFp t = PolyFp::from_signed(p, parse_int_list(o.t));
    if (f.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
    if (poly_gcd(f, t).degree() != 0) throw std::invalid_argument("t must be coprime to the modulus");
    r.outputs["ring"] = "F_" + std::to_string(p) + "[T]/(" + f.to_string() + ")";
    r.outputs["t"] = poly_fp_to_json(t);
    r.outputs["count"] = integer_to_json(count_colorings_poly_mod(d, f, t));
    r.outputs["trivial"] = integer_to_json(ipow(Integer(static_cast<unsigned long>(p)), f.degree()));
    r.outputs["colorable"] = is_colorable_poly(d, f, t);
  } else {
    throw std::invalid_argument("one of --mod or --poly-mod is required");
  }
  return r;
}

Report cable_report(const std::optional<Diagram>& base, const FqField& f, FqElem t,
                    const std::vector<std::pair<long, long>>& pairs) {
  if (base) require_valid(*base);
  if (pairs.empty()) throw std::invalid_argument("at least one (a,b) pair is required");
  Report r;
  std::optional<FqElem> base_arg;
  const auto steps = iterated_cable(
      [&](FqElem s) {
        base_arg = s;
        return base ? ideal_seq_from_diagram(*base, f, s) : unknot_ideal_seq(f, s);
      },
      pairs, f, t);
  const EvaluatedIdealSeq base_seq = base ? ideal_seq_from_diagram(*base, f, *base_arg) : unknot_ideal_seq(f, *base_arg);
  r.outputs["field"] = field_to_json(f);
  r.outputs["t"] = elem_to_json(f, t);
  r.outputs["base"] = {{"knot", base ? "diagram" : "unknot"},
                       {"t", elem_to_json(f, *base_arg)},
                       {"dim", str(base_seq.dimension())},
                       {"seq", seq_to_json(base_seq)}};
  LaurentPoly delta = base ? alexander_polynomial(*base) : LaurentPoly(1);
  json rows = json::array();
  for (const CableStep& s : steps) {
    if (s.a < 0 || s.b < 0)
      r.warnings.push_back("negative cable parameters (" + std::to_string(s.a) + "," + std::to_string(s.b) +
                           ") use absolute values: the mirror image has the same ideals up to units");
    delta = cable_alexander(delta, s.a, s.b);
    rows.push_back({{"a", std::to_string(s.a)},
                    {"b", std::to_string(s.b)},
                    {"t", elem_to_json(f, s.t)},
                    {"t_base", elem_to_json(f, s.t_base)},
                    {"delta", elem_to_json(f, s.delta)},
                    {"dim_before", str(s.dim_before)},
                    {"dim_after", str(s.dim_after)},
                    {"seq", seq_to_json(s.seq)},
                    {"alexander", poly_to_json(delta)}});
  }
  r.outputs["rows"] = rows;
  r.outputs["dim"] = str(steps.back().dim_after);
  return r;
}

Report sum_report(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2, const FqField& f, FqElem t,
                  const CodeOptions& o) {
  const Diagram s = connected_sum(d1, a1, d2, a2);
  const LinearCode c = code_from_diagram(d1, f, t, MatrixKind::fox);
  const LinearCode d = code_from_diagram(d2, f, t, MatrixKind::fox);
  const std::size_t p1 = d1.is_trivial() ? 0 : a1;
  const std::size_t p2 = d2.is_trivial() ? 0 : a2;
  const LinearCode sc = sum_code(c, p1, d, p2);
  CodeOptions inner = o;
  inner.components = o.components + 1;
  Report r = code_report(sc, inner);
  r.outputs["t"] = elem_to_json(f, t);
  r.outputs["diagram"] = diagram_to_json(s);
  r.outputs["k_summands"] = {str(c.k()), str(d.k())};
  const std::size_t k_diagram = code_from_diagram(s, f, t, MatrixKind::fox).k();
  r.outputs["k_diagram"] = str(k_diagram);
  if (k_diagram != sc.k()) r.warnings.push_back("sum diagram code dimension differs from the block construction");
  const LinearCode cs = subcode_last_zero(c, p1);
  const LinearCode ds = subcode_last_zero(d, p2);
  if (o.min_dist) {
    const Distance dist = sum_min_distance(c, cs, d, ds, o.budget);
    r.outputs["d_formula"] = dist.to_string();
    if (r.outputs.contains("d") && dist.is_finite() && r.outputs["d"] != dist.to_string())
      r.warnings.push_back("minimum distance formula disagrees with enumeration");
  }
  if (o.weights) {
    try {
      const WeightEnumerator w = sum_weight_enumerator(weight_enumerator(c, o.budget), weight_enumerator(cs, o.budget),
                                                       weight_enumerator(d, o.budget), weight_enumerator(ds, o.budget),
                                                       f.size());
      json arr = json::array();
      for (const Integer& a : w.counts) arr.push_back(integer_to_json(a));
      r.outputs["weights_formula"] = arr;
      if (r.outputs.contains("weights") && r.outputs["weights"] != arr)
        r.warnings.push_back("weight enumerator formula disagrees with enumeration");
    } catch (const BudgetExceeded& e) {
      r.warnings.push_back(std::string("weight formula not computed: ") + e.what());
      r.status = ReportStatus::budget;
    }
  }
  return r;
}

Report check_report(const Diagram& d) {
  Report r;
  json checks = json::array();
  std::optional<std::string> first_failure;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    if (!ok && !first_failure) first_failure = name;
  };

  const ValidationReport v = validate_diagram(d);
  record("valid", v.ok, v.ok ? "" : v.violations.front());
  if (!v.ok) {
    r.outputs["checks"] = checks;
    r.outputs["first_failure"] = *first_failure;
    r.status = ReportStatus::failed;
    return r;
  }
  const std::size_t n = d.n();
  const std::size_t strands = std::max<std::size_t>(n, 1);
  record("arc_count", v.arc_count == strands, std::to_string(v.arc_count) + " arcs");
  record("region_count", v.region_count == n + 2, std::to_string(v.region_count) + " regions");

  if (!d.is_trivial()) {
    const RegionMap reg = regions(d);
    const auto idx = region_index(d);
    const auto shade = checkerboard(d);
    bool index_ok = idx[reg.outer] == 0;
    bool shade_ok = true;
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
      index_ok = index_ok && idx[reg.left[e]] - idx[reg.right[e]] == 1;
      shade_ok = shade_ok && shade[reg.left[e]] != shade[reg.right[e]];
    }
    record("region_index", index_ok);
    record("checkerboard", shade_ok);

    const auto fox = fox_matrix(d).entries;
    bool rows_ok = true;
    for (std::size_t i = 0; i < fox.rows(); ++i) {
      LaurentPoly s;
      for (std::size_t j = 0; j < fox.cols(); ++j) s += fox(i, j);
      rows_ok = rows_ok && s.is_zero();
    }
    record("fox_row_sums_zero", rows_ok);
    const Integer at_one = corner_minor(d).evaluate(1);
    record("det_minor_at_one", abs_value(at_one) == 1, at_one.get_str());
    const auto agree = minors_agree(d);
    if (agree) record("first_minors_agree", *agree);
  }

  const LaurentPoly delta = alexander_polynomial(d);
  const LaurentPoly mirrored = delta.substitute_power(-1).normalized();
  record("alexander_symmetric", mirrored == delta, delta.to_string());
  record("alexander_at_one", abs_value(delta.evaluate(1)) == 1);

  const Integer det = knot_determinant(d);
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  for (std::uint64_t p : small_prime_divisors(det))
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);

  bool dehn_ok = true;
  bool bound_ok = true;
  bool routes_ok = true;
  bool distance_ok = true;
  bool singleton_ok = true;
  bool valuation_ok = true;
  std::string detail;
  for (std::uint64_t p : primes) {
    const FqField f = FqField::prime(p);
    for (FqElem t : {f.from_int(-1), f.from_int(2)}) {
      if (t.code == 0) continue;
      const LinearCode c = code_from_diagram(d, f, t, MatrixKind::fox);
      const LinearCode nd = code_from_diagram(d, f, t, MatrixKind::dehn);
      const std::string where = "F_" + std::to_string(p) + " t=" + f.to_string(t);
      if (nd.k() != c.k() + 1) {
        dehn_ok = false;
        detail = where;
      }
      if (c.k() < 1 || 2 * c.k() > c.n + 1) {
        bound_ok = false;
        detail = where;
      }
      try {
        if (dimension_via_ideals(d, f, t) != c.k()) routes_ok = false;
      } catch (const std::logic_error&) {
        routes_ok = false;
      }
      const Distance dist = min_distance(c, 100000);
      if (dist.is_finite()) {
        if (!d.is_trivial() && dist.value < 2) distance_ok = false;
        if (c.k() > c.n - dist.value + 1) singleton_ok = false;
      }
    }
    const unsigned e = valuation(det, Integer(static_cast<unsigned long>(p)));
    const std::size_t k = code_from_diagram(d, f, f.from_int(-1), MatrixKind::fox).k();
    if (p != 2 && (k > e + 1 || (e == 1 && k != 2))) valuation_ok = false;
  }
  record("dehn_kernel_is_fox_kernel_plus_one", dehn_ok, dehn_ok ? "" : detail);
  record("dimension_bound", bound_ok, bound_ok ? "" : detail);
  record("dimension_routes_agree", routes_ok);
  record("min_distance_at_least_2", distance_ok);
  record("singleton_bound", singleton_ok);
  record("dimension_at_most_e_plus_1", valuation_ok);

  r.outputs["checks"] = checks;
  if (first_failure) {
    r.outputs["first_failure"] = *first_failure;
    r.status = ReportStatus::failed;
  }
  return r;
}

}  // namespace knotcode
