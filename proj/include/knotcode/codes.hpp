#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcode/coloring.hpp"
#include "knotcode/diagram.hpp"
#include "knotcode/finite_field.hpp"
#include "knotcode/fq_linalg.hpp"
#include "knotcode/generators.hpp"
#include "knotcode/integer.hpp"

namespace knotcode {

/// Linear code {x in F_q^n : parity x^T = 0}. The parity matrix is kept as
/// given (no rank reduction); `generator` is a basis of its kernel.
struct LinearCode {
  FqField field = FqField::prime(2);
  std::size_t n = 0;
  FqMatrix parity;
  FqMatrix generator;
  std::vector<std::string> notes;

  std::size_t k() const { return generator.rows(); }
};

LinearCode code_from_parity(const FqField& f, const FqMatrix& parity);
/// Code spanned by the rows of `gen`; the parity matrix is a kernel basis of it.
LinearCode code_from_generator(const FqField& f, const FqMatrix& gen);
/// Kernel of the Fox (length = arcs) or Dehn (length = regions) matrix at t.
/// t = 0 throws; t = 1 is allowed and noted.
LinearCode code_from_diagram(const Diagram& d, const FqField& f, FqElem t, MatrixKind kind);

bool contains(const LinearCode& c, const FqVector& x);
/// Same set of codewords (same field and length, equal row spaces).
bool same_code(const LinearCode& a, const LinearCode& b);

struct Distance {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::size_t value = 0;

  static Distance of(std::size_t v) { return {Kind::finite, v}; }
  static Distance infinite() { return {Kind::infinite, 0}; }
  static Distance unknown() { return {Kind::unknown, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
  std::string to_string() const;
  friend bool operator==(const Distance&, const Distance&) = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 10^7 unless KNOTCODE_BUDGET holds a positive integer.
std::uint64_t default_budget();

/// q^k.
Integer message_count(const LinearCode& c);

/// Calls fn on the codewords for messages first..last-1, messages taken in
/// lexicographic order (first generator row most significant).
void for_each_codeword(const LinearCode& c, std::uint64_t first, std::uint64_t last,
                       const std::function<void(const FqVector&)>& fn);

std::size_t weight(const FqVector& x);

/// Exhaustive over q^k messages; Unknown when q^k exceeds the budget,
/// infinite for the zero code.
Distance min_distance(const LinearCode& c, std::uint64_t budget = default_budget());

/// counts[w] = number of codewords of weight w, w = 0..n.
struct WeightEnumerator {
  std::vector<Integer> counts;

  Integer total() const;
  std::string to_string() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Throws BudgetExceeded when q^k exceeds the budget.
WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget = default_budget());

LinearCode dual(const LinearCode& c);
/// {x in C : x_pos = 0}.
LinearCode subcode_last_zero(const LinearCode& c, std::size_t pos);

/// Code of length n1 + n2 made of pairs (x, y) with x in c1, y in c2 and
/// x_pos1 = y_pos2. Parity: c1's block, c2's block shifted right, and the
/// row e_pos1 - e_(n1 + pos2).
LinearCode sum_code(const LinearCode& c1, std::size_t pos1, const LinearCode& c2, std::size_t pos2);

/// min(d(C'), d(D'), min wt(C \ C') + min wt(D \ D')) where C' and D' are
/// subcodes of C and D. Weight sets come from enumerators, so the budget
/// applies to every code involved.
Distance sum_min_distance(const LinearCode& c, const LinearCode& c_sub, const LinearCode& d,
                          const LinearCode& d_sub, std::uint64_t budget = default_budget());

/// W_{C'} W_{D'} + (W_C - W_{C'})(W_D - W_{D'}) / (q - 1).
WeightEnumerator sum_weight_enumerator(const WeightEnumerator& c, const WeightEnumerator& c_sub,
                                       const WeightEnumerator& d, const WeightEnumerator& d_sub,
                                       std::uint64_t q);

struct LdpcProfile {
  std::vector<std::size_t> row_weights;
  std::vector<std::size_t> col_weights;
  std::optional<std::size_t> row_regular;  // every row has this weight
  std::optional<std::size_t> col_regular;
  std::string verdict;
};
/// Row weights count check nodes ("right"), column weights variable nodes ("left").
LdpcProfile ldpc_profile(const LinearCode& c);

struct Provenance {
  std::size_t n = 0;
  std::size_t component_count = 1;  // number of knots in the connected sum
};

struct FeasibilityRule {
  std::string rule;
  bool ruled_out = false;
  std::string detail;
};

struct DualFeasibility {
  std::vector<FeasibilityRule> rules;
  bool ruled_out = false;
};

/// Necessary conditions for the dual to be a knot code:
///  divisibility: the characteristic divides n;
///  dimension: k >= (n - 1) / 2;
///  summands: fewer than four connected summands.
DualFeasibility dual_knot_feasibility(const LinearCode& c, const Provenance& p);

/// Smallest k with E_k(M(t)) = F_q, i.e. n - rank M(t). Cross-checked against
/// the kernel basis; a mismatch throws std::logic_error.
std::size_t dimension_via_ideals(const Diagram& d, const FqField& f, FqElem t);

/// Dimension over F_q at t = -1 predicted for a pretzel knot from its
/// parameters: #{i : gcd(p_i, q) != 1} if that is positive, otherwise 2 when
/// the characteristic divides the determinant and 1 when not.
std::size_t pretzel_predicted_dimension(const PretzelSpec& s, const FqField& f);

}  // namespace knotcode
