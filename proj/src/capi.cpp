#include "knotcode.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "knotcode/codes.hpp"
#include "knotcode/generators.hpp"
#include "knotcode/json_io.hpp"
#include "knotcode/reidemeister.hpp"
#include "knotcode/reports.hpp"

struct kc_diagram {
  knotcode::Diagram d;
};
struct kc_field {
  knotcode::FqField f;
};
struct kc_code {
  knotcode::LinearCode c;
};

namespace {

thread_local std::string last_error;

kc_status fail(kc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <class F>
kc_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const knotcode::InvalidDiagram& e) {
    return fail(KC_ERR_INVALID_DIAGRAM, e.what());
  } catch (const knotcode::BudgetExceeded& e) {
    return fail(KC_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(KC_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(KC_ERR_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(KC_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KC_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kc_status emit(const std::string& s, char** out) {
  *out = dup_string(s);
  return KC_OK;
}

kc_status emit(const knotcode::Report& r, char** out) { return emit(r.to_json().dump(), out); }

#define KC_REQUIRE(cond)                                          \
  do {                                                            \
    if (!(cond)) return fail(KC_ERR_ARGUMENT, "null argument"); \
  } while (0)

knotcode::FqElem elem(const kc_field* f, std::uint64_t t) {
  const knotcode::FqElem e{t};
  if (!f->f.contains(e)) throw std::invalid_argument("element code out of range for the field");
  return e;
}

knotcode::MatrixKind kind_of(kc_matrix_kind k) {
  return k == KC_DEHN ? knotcode::MatrixKind::dehn : knotcode::MatrixKind::fox;
}

knotcode::CodeOptions code_options(kc_matrix_kind kind, int min_dist, int weights, std::uint64_t budget) {
  knotcode::CodeOptions o;
  o.kind = kind_of(kind);
  o.min_dist = min_dist != 0;
  o.weights = weights != 0;
  o.budget = budget == 0 ? knotcode::default_budget() : budget;
  return o;
}

kc_status new_diagram(knotcode::Diagram d, kc_diagram** out) {
  *out = new kc_diagram{std::move(d)};
  return KC_OK;
}

}  // namespace

extern "C" {

const char* kc_version(void) { return "1.0.0"; }

const char* kc_last_error(void) { return last_error.c_str(); }

void kc_string_free(char* s) { std::free(s); }

kc_status kc_diagram_from_json(const char* text, kc_diagram** out) {
  KC_REQUIRE(text && out);
  return guarded([&] { return new_diagram(knotcode::parse_diagram(text), out); });
}

kc_status kc_diagram_to_json(const kc_diagram* d, char** out) {
  KC_REQUIRE(d && out);
  return guarded([&] { return emit(knotcode::diagram_to_json(d->d).dump(), out); });
}

kc_status kc_diagram_builtin(const char* name, kc_diagram** out) {
  KC_REQUIRE(name && out);
  return guarded([&] { return new_diagram(knotcode::builtin(name), out); });
}

kc_status kc_diagram_torus(long a, long b, kc_diagram** out) {
  KC_REQUIRE(out);
  return guarded([&] { return new_diagram(knotcode::torus_diagram({a, b}), out); });
}

kc_status kc_diagram_pretzel(const long* twists, size_t count, kc_diagram** out) {
  KC_REQUIRE(out && (twists || count == 0));
  return guarded([&] {
    knotcode::PretzelSpec s;
    s.twists.assign(twists, twists + count);
    return new_diagram(knotcode::pretzel_diagram(s), out);
  });
}

kc_status kc_diagram_connected_sum(const kc_diagram* d1, size_t arc1, const kc_diagram* d2, size_t arc2,
                                   kc_diagram** out) {
  KC_REQUIRE(d1 && d2 && out);
  return guarded([&] {
    return new_diagram(knotcode::connected_sum(d1->d, static_cast<knotcode::ArcId>(arc1), d2->d,
                                               static_cast<knotcode::ArcId>(arc2)),
                       out);
  });
}

kc_status kc_diagram_r1(const kc_diagram* d, size_t edge, int side, int first_over, kc_diagram** out) {
  KC_REQUIRE(d && out);
  return guarded([&] {
    const auto s = side == 0 ? knotcode::TwistSide::left : knotcode::TwistSide::right;
    return new_diagram(knotcode::r1_add(d->d, static_cast<knotcode::EdgeId>(edge), s, first_over != 0), out);
  });
}

kc_status kc_diagram_mirror(const kc_diagram* d, kc_diagram** out) {
  KC_REQUIRE(d && out);
  return guarded([&] { return new_diagram(knotcode::mirror(d->d), out); });
}

kc_status kc_diagram_validate(const kc_diagram* d, int* valid, char** report) {
  KC_REQUIRE(d && valid);
  return guarded([&] {
    const knotcode::ValidationReport v = knotcode::validate_diagram(d->d);
    *valid = v.ok ? 1 : 0;
    if (report) {
      knotcode::json j = {{"ok", v.ok},
                          {"arcs", std::to_string(v.arc_count)},
                          {"regions", std::to_string(v.region_count)},
                          {"violations", v.violations}};
      *report = dup_string(j.dump());
    }
    return KC_OK;
  });
}

size_t kc_diagram_crossings(const kc_diagram* d) { return d ? d->d.n() : 0; }

void kc_diagram_free(kc_diagram* d) { delete d; }

kc_status kc_field_new(uint64_t p, const uint64_t* modulus, size_t len, kc_field** out) {
  KC_REQUIRE(out && (modulus || len == 0));
  return guarded([&] {
    if (len <= 2) {
      *out = new kc_field{knotcode::FqField::prime(p)};
    } else {
      *out = new kc_field{knotcode::FqField::make(p, std::vector<std::uint64_t>(modulus, modulus + len))};
    }
    return KC_OK;
  });
}

kc_status kc_field_parse(const char* q, const char* modulus, kc_field** out) {
  KC_REQUIRE(q && out);
  return guarded([&] {
    *out = new kc_field{knotcode::parse_field_spec(q, modulus ? modulus : "")};
    return KC_OK;
  });
}

kc_status kc_field_parse_element(const kc_field* f, const char* text, uint64_t* out) {
  KC_REQUIRE(f && text && out);
  return guarded([&] {
    *out = knotcode::parse_field_element(f->f, text).code;
    return KC_OK;
  });
}

uint64_t kc_field_size(const kc_field* f) { return f ? f->f.size() : 0; }

kc_status kc_field_element_to_json(const kc_field* f, uint64_t e, char** out) {
  KC_REQUIRE(f && out);
  return guarded([&] { return emit(knotcode::elem_to_json(f->f, elem(f, e)).dump(), out); });
}

void kc_field_free(kc_field* f) { delete f; }

kc_status kc_code_from_diagram(const kc_diagram* d, const kc_field* f, uint64_t t, kc_matrix_kind kind,
                               kc_code** out) {
  KC_REQUIRE(d && f && out);
  return guarded([&] {
    *out = new kc_code{knotcode::code_from_diagram(d->d, f->f, elem(f, t), kind_of(kind))};
    return KC_OK;
  });
}

kc_status kc_code_from_parity(const kc_field* f, const uint64_t* entries, size_t rows, size_t cols,
                              kc_code** out) {
  KC_REQUIRE(f && out && (entries || rows * cols == 0));
  return guarded([&] {
    knotcode::FqMatrix h(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) h(r, c) = elem(f, entries[r * cols + c]);
    *out = new kc_code{knotcode::code_from_parity(f->f, h)};
    return KC_OK;
  });
}

size_t kc_code_length(const kc_code* c) { return c ? c->c.n : 0; }

size_t kc_code_dimension(const kc_code* c) { return c ? c->c.k() : 0; }

kc_status kc_code_min_distance(const kc_code* c, uint64_t budget, long* out) {
  KC_REQUIRE(c && out);
  return guarded([&] {
    const auto d = knotcode::min_distance(c->c, budget == 0 ? knotcode::default_budget() : budget);
    switch (d.kind) {
      case knotcode::Distance::Kind::finite:
        *out = static_cast<long>(d.value);
        return KC_OK;
      case knotcode::Distance::Kind::infinite:
        *out = -1;
        return KC_OK;
      default:
        return fail(KC_ERR_BUDGET, "message count exceeds the enumeration budget");
    }
  });
}

kc_status kc_code_weights(const kc_code* c, uint64_t budget, char** out) {
  KC_REQUIRE(c && out);
  return guarded([&] {
    knotcode::json arr = knotcode::json::array();
    for (const auto& a : knotcode::weight_enumerator(c->c, budget == 0 ? knotcode::default_budget() : budget).counts)
      arr.push_back(a.get_str());
    return emit(arr.dump(), out);
  });
}

kc_status kc_code_sum(const kc_code* c1, size_t pos1, const kc_code* c2, size_t pos2, kc_code** out) {
  KC_REQUIRE(c1 && c2 && out);
  return guarded([&] {
    *out = new kc_code{knotcode::sum_code(c1->c, pos1, c2->c, pos2)};
    return KC_OK;
  });
}

kc_status kc_code_dual(const kc_code* c, kc_code** out) {
  KC_REQUIRE(c && out);
  return guarded([&] {
    *out = new kc_code{knotcode::dual(c->c)};
    return KC_OK;
  });
}

kc_status kc_code_contains(const kc_code* c, const uint64_t* word, size_t len, int* out) {
  KC_REQUIRE(c && out && (word || len == 0));
  return guarded([&] {
    if (len != c->c.n) throw std::invalid_argument("word length differs from the code length");
    knotcode::FqVector x;
    for (size_t i = 0; i < len; ++i) {
      const knotcode::FqElem e{word[i]};
      if (!c->c.field.contains(e)) throw std::invalid_argument("element code out of range for the field");
      x.push_back(e);
    }
    *out = knotcode::contains(c->c, x) ? 1 : 0;
    return KC_OK;
  });
}

void kc_code_free(kc_code* c) { delete c; }

kc_status kc_report_invariants(const kc_diagram* d, char** out) {
  KC_REQUIRE(d && out);
  return guarded([&] { return emit(knotcode::invariants_report(d->d), out); });
}

kc_status kc_report_alexander(const kc_diagram* d, char** out) {
  KC_REQUIRE(d && out);
  return guarded([&] { return emit(knotcode::alexander_report(d->d), out); });
}

kc_status kc_report_matrix(const kc_diagram* d, kc_matrix_kind kind, int restrict_outer, const char* at,
                           char** out) {
  KC_REQUIRE(d && out);
  return guarded([&] {
    knotcode::MatrixOptions o;
    o.kind = kind_of(kind);
    o.restrict_outer = restrict_outer != 0;
    if (at) o.at = knotcode::integer_from_json(knotcode::json(std::string(at)));
    return emit(knotcode::matrix_report(d->d, o), out);
  });
}

kc_status kc_report_code(const kc_diagram* d, const kc_field* f, uint64_t t, kc_matrix_kind kind, int min_dist,
                         int weights, uint64_t budget, char** out) {
  KC_REQUIRE(d && f && out);
  return guarded([&] {
    return emit(knotcode::code_report(d->d, f->f, elem(f, t), code_options(kind, min_dist, weights, budget)), out);
  });
}

kc_status kc_report_sum(const kc_diagram* d1, size_t arc1, const kc_diagram* d2, size_t arc2, const kc_field* f,
                        uint64_t t, int min_dist, int weights, uint64_t budget, char** out) {
  KC_REQUIRE(d1 && d2 && f && out);
  return guarded([&] {
    return emit(knotcode::sum_report(d1->d, static_cast<knotcode::ArcId>(arc1), d2->d,
                                     static_cast<knotcode::ArcId>(arc2), f->f, elem(f, t),
                                     code_options(KC_FOX, min_dist, weights, budget)),
                out);
  });
}

kc_status kc_report_snf(const char* matrix_json, const char* ring, char** out) {
  KC_REQUIRE(matrix_json && ring && out);
  return guarded([&] {
    knotcode::json m;
    try {
      m = knotcode::json::parse(matrix_json);
    } catch (const knotcode::json::parse_error& e) {
      throw std::invalid_argument(std::string("matrix is not JSON: ") + e.what());
    }
    return emit(knotcode::snf_report(m, ring), out);
  });
}

kc_status kc_report_colorings(const kc_diagram* d, const char* modulus, const char* poly_modulus, const char* t,
                              char** out) {
  KC_REQUIRE(d && out && t);
  return guarded([&] {
    if ((modulus == nullptr) == (poly_modulus == nullptr))
      throw std::invalid_argument("exactly one of modulus and poly_modulus must be given");
    knotcode::ColoringOptions o;
    o.t = t;
    if (modulus) {
      o.mod = knotcode::integer_from_json(knotcode::json(std::string(modulus)));
    } else {
      const std::string pm = poly_modulus;
      const auto colon = pm.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("poly modulus must look like p:c0,c1,...");
      const auto p = knotcode::parse_int_list(pm.substr(0, colon));
      if (p.size() != 1 || p[0] < 2) throw std::invalid_argument("bad prime in poly modulus");
      o.poly_mod = {{static_cast<std::uint64_t>(p[0]), knotcode::parse_int_list(pm.substr(colon + 1))}};
    }
    return emit(knotcode::colorings_report(d->d, o), out);
  });
}

kc_status kc_report_cable(const kc_diagram* base, const kc_field* f, uint64_t t, const long* pairs,
                          size_t pair_count, char** out) {
  KC_REQUIRE(f && out && (pairs || pair_count == 0));
  return guarded([&] {
    std::vector<std::pair<long, long>> ps;
    for (size_t i = 0; i < pair_count; ++i) ps.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    std::optional<knotcode::Diagram> b;
    if (base) b = base->d;
    return emit(knotcode::cable_report(b, f->f, elem(f, t), ps), out);
  });
}

kc_status kc_report_check(const kc_diagram* d, char** out) {
  KC_REQUIRE(d && out);
  return guarded([&] { return emit(knotcode::check_report(d->d), out); });
}

}  // extern "C"
