// JSON encodings of diagrams, polynomials, fields and matrices.
//
// Diagrams use plain integers (the file format). Everything else that carries
// a number writes it as a decimal string; readers accept either form.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "knotcode/diagram.hpp"
#include "knotcode/finite_field.hpp"
#include "knotcode/fq_linalg.hpp"
#include "knotcode/integer.hpp"
#include "knotcode/laurent_poly.hpp"
#include "knotcode/matrix.hpp"
#include "knotcode/poly_fp.hpp"

namespace knotcode {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json diagram_to_json(const Diagram& d);
/// Structure only; call validate_diagram on the result.
Diagram diagram_from_json(const json& j);
Diagram parse_diagram(const std::string& text);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
std::int64_t int64_from_json(const json& j);

json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json poly_fp_to_json(const PolyFp& p);
/// Ascending coefficient array, reduced mod p.
PolyFp poly_fp_from_json(std::uint64_t p, const json& j);

json field_to_json(const FqField& f);
FqField field_from_json(const json& j);

json elem_to_json(const FqField& f, FqElem a);
FqElem elem_from_json(const FqField& f, const json& j);

json matrix_to_json(const Matrix<Integer>& m);
json matrix_to_json(const Matrix<LaurentPoly>& m);
json matrix_to_json(const Matrix<PolyFp>& m);
json matrix_to_json(const FqField& f, const FqMatrix& m);

Matrix<Integer> int_matrix_from_json(const json& j);
Matrix<PolyFp> poly_fp_matrix_from_json(std::uint64_t p, const json& j);

/// Field flags: q is "p", "p^a" or "q"; modulus "c0,c1,...,1" (required for
/// a > 1). Throws std::invalid_argument.
FqField parse_field_spec(const std::string& q, const std::string& modulus);
/// t flag: an integer (reduced mod p), "alpha"/"x" for the class of x, or a
/// comma separated ascending coefficient list.
FqElem parse_field_element(const FqField& f, const std::string& t);

/// "c0,c1,..." as signed integers.
std::vector<std::int64_t> parse_int_list(const std::string& s);

}  // namespace knotcode
