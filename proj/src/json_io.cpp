#include "knotcode/json_io.hpp"

#include <charconv>
#include <sstream>

namespace knotcode {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t u64_from_json(const json& j) {
  const std::int64_t v = int64_from_json(j);
  if (v < 0) throw FormatError("expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

std::vector<std::uint64_t> reduced_coeffs(std::uint64_t p, const json& j) {
  std::vector<std::uint64_t> out;
  for (const json& c : array_of(j, "coefficients")) out.push_back(mod_u64(integer_from_json(c), p));
  return out;
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json cs = json::array();
  for (const Crossing& c : d.crossings)
    cs.push_back({{"under_in", c.under_in},
                  {"under_out", c.under_out},
                  {"over_in", c.over_in},
                  {"over_out", c.over_out},
                  {"sign", c.sign}});
  return {{"crossings", cs},
          {"outer", {{"edge", d.outer.edge}, {"side", d.outer.side == Side::left ? "left" : "right"}}}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  for (const json& c : array_of(field_of(j, "crossings"), "crossings")) {
    Crossing x;
    x.under_in = static_cast<EdgeId>(u64_from_json(field_of(c, "under_in")));
    x.under_out = static_cast<EdgeId>(u64_from_json(field_of(c, "under_out")));
    x.over_in = static_cast<EdgeId>(u64_from_json(field_of(c, "over_in")));
    x.over_out = static_cast<EdgeId>(u64_from_json(field_of(c, "over_out")));
    x.sign = static_cast<int>(int64_from_json(field_of(c, "sign")));
    d.crossings.push_back(x);
  }
  if (j.contains("outer")) {
    const json& o = j.at("outer");
    d.outer.edge = static_cast<EdgeId>(u64_from_json(field_of(o, "edge")));
    const json& side = field_of(o, "side");
    if (side == "left")
      d.outer.side = Side::left;
    else if (side == "right")
      d.outer.side = Side::right;
    else
      throw FormatError("outer.side must be \"left\" or \"right\"");
  } else if (d.is_trivial()) {
    d.outer = unknot_diagram().outer;
  } else {
    throw FormatError("missing key \"outer\"");
  }
  return d;
}

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

json integer_to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw FormatError("not a decimal integer: \"" + s + "\"");
    return v;
  }
  throw FormatError("expected an integer");
}

std::int64_t int64_from_json(const json& j) {
  const Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) throw FormatError("integer out of range: " + v.get_str());
  return v.get_si();
}

json poly_to_json(const LaurentPoly& p) {
  json cs = json::array();
  for (const Integer& c : p.coeffs()) cs.push_back(integer_to_json(c));
  return {{"min_deg", std::to_string(p.is_zero() ? 0 : p.min_deg())}, {"coeffs", cs}};
}

LaurentPoly poly_from_json(const json& j) {
  if (j.is_number() || j.is_string()) return LaurentPoly(integer_from_json(j));
  std::vector<Integer> cs;
  for (const json& c : array_of(field_of(j, "coeffs"), "coeffs")) cs.push_back(integer_from_json(c));
  const std::int64_t lo = j.contains("min_deg") ? int64_from_json(j.at("min_deg")) : 0;
  return LaurentPoly::from_coeffs(lo, std::move(cs));
}

json poly_fp_to_json(const PolyFp& p) {
  json cs = json::array();
  for (std::uint64_t c : p.coeffs()) cs.push_back(std::to_string(c));
  return cs;
}

PolyFp poly_fp_from_json(std::uint64_t p, const json& j) {
  if (j.is_number() || j.is_string()) return PolyFp(p, {mod_u64(integer_from_json(j), p)});
  return PolyFp(p, reduced_coeffs(p, j));
}

json field_to_json(const FqField& f) {
  json m = json::array();
  for (std::uint64_t c : f.modulus()) m.push_back(std::to_string(c));
  return {{"p", std::to_string(f.characteristic())}, {"modulus", m}};
}

FqField field_from_json(const json& j) {
  const std::uint64_t p = u64_from_json(field_of(j, "p"));
  if (!j.contains("modulus")) return FqField::prime(p);
  std::vector<std::uint64_t> m;
  for (const json& c : array_of(j.at("modulus"), "modulus")) m.push_back(u64_from_json(c));
  if (m.size() <= 2) return FqField::prime(p);
  return FqField::make(p, m);
}

json elem_to_json(const FqField& f, FqElem a) {
  json cs = json::array();
  for (std::uint64_t c : f.coeffs(a)) cs.push_back(std::to_string(c));
  return cs;
}

FqElem elem_from_json(const FqField& f, const json& j) {
  if (j.is_number() || j.is_string()) return f.from_coeffs({mod_u64(integer_from_json(j), f.characteristic())});
  return f.from_coeffs(reduced_coeffs(f.characteristic(), j));
}

json matrix_to_json(const Matrix<Integer>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const Matrix<LaurentPoly>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const Matrix<PolyFp>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_fp_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const FqField& f, const FqMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(f, m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F&& entry) {
  const json& rows = j.is_object() ? field_of(j, "rows") : j;
  Matrix<T> m;
  for (const json& row : array_of(rows, "matrix")) {
    std::vector<T> vals;
    for (const json& v : array_of(row, "matrix row")) vals.push_back(entry(v));
    if (m.rows() > 0 && vals.size() != m.cols()) throw FormatError("ragged matrix");
    m.append_row(vals);
  }
  return m;
}

}  // namespace

Matrix<Integer> int_matrix_from_json(const json& j) {
  return matrix_from_json<Integer>(j, [](const json& v) { return integer_from_json(v); });
}

Matrix<PolyFp> poly_fp_matrix_from_json(std::uint64_t p, const json& j) {
  return matrix_from_json<PolyFp>(j, [p](const json& v) { return poly_fp_from_json(p, v); });
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::int64_t v = 0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (b != e && *b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e) throw std::invalid_argument("not an integer list: \"" + s + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

FqField parse_field_spec(const std::string& q, const std::string& modulus) {
  std::uint64_t p = 0;
  std::uint64_t a = 1;
  const auto caret = q.find('^');
  const auto head = parse_int_list(q.substr(0, caret));
  if (head.size() != 1 || head[0] < 2) throw std::invalid_argument("bad field size: \"" + q + "\"");
  if (caret != std::string::npos) {
    const auto e = parse_int_list(q.substr(caret + 1));
    if (e.size() != 1 || e[0] < 1) throw std::invalid_argument("bad field size: \"" + q + "\"");
    p = static_cast<std::uint64_t>(head[0]);
    a = static_cast<std::uint64_t>(e[0]);
  } else {
    // q given as a number: split into p^a
    std::uint64_t v = static_cast<std::uint64_t>(head[0]);
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = v;
    a = 0;
    while (v % p == 0) {
      v /= p;
      ++a;
    }
    if (v != 1) throw std::invalid_argument("field size is not a prime power: " + q);
  }
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  if (a == 1 && modulus.empty()) return FqField::prime(p);
  if (modulus.empty()) throw std::invalid_argument("--modulus is required for q = p^a with a > 1");
  std::vector<std::uint64_t> m;
  for (std::int64_t c : parse_int_list(modulus)) {
    const std::int64_t r = c % static_cast<std::int64_t>(p);
    m.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r));
  }
  if (m.size() != a + 1) throw std::invalid_argument("modulus degree does not match q");
  if (a == 1) return FqField::prime(p);
  return FqField::make(p, m);
}

FqElem parse_field_element(const FqField& f, const std::string& t) {
  if (t == "alpha" || t == "x" || t == "a") return f.generator_x();
  const auto cs = parse_int_list(t);
  if (cs.size() == 1) return f.from_int(cs[0]);
  std::vector<std::uint64_t> r;
  const auto p = static_cast<std::int64_t>(f.characteristic());
  for (std::int64_t c : cs) r.push_back(static_cast<std::uint64_t>(((c % p) + p) % p));
  if (r.size() > f.degree()) throw std::invalid_argument("too many coefficients for a field element: " + t);
  return f.from_coeffs(r);
}

}  // namespace knotcode
