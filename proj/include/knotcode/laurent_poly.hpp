#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotcode/integer.hpp"

namespace knotcode {

/// Element of Z[T, T^-1].
///
/// Stored as a dense coefficient vector starting at exponent `min_deg()`.
/// The first and last stored coefficients are always nonzero; the zero
/// polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly from_coeffs(std::int64_t min_deg, std::vector<Integer> coeffs);
  static LaurentPoly monomial(const Integer& c, std::int64_t exp);
  /// The indeterminate T.
  static LaurentPoly T() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_deg() const { return min_deg_; }
  std::int64_t max_deg() const { return min_deg_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::int64_t exp) const;
  /// Number of nonzero terms.
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by T^s.
  LaurentPoly shifted(std::int64_t s) const;
  /// Substitute T -> T^b (b != 0).
  LaurentPoly substitute_power(std::int64_t b) const;
  /// Value at an integer point. Negative exponents need t = +-1.
  Integer evaluate(const Integer& t) const;
  /// Exact quotient in Z[T, T^-1], or nullopt if the division leaves a remainder.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const;
  /// True when this is +-T^s.
  bool is_unit() const;

  /// Representative of the class under multiplication by +-T^s whose lowest
  /// term is a positive constant.
  LaurentPoly normalized() const;

  /// Human-readable form, highest degree first, e.g. "T^2 - T + 1".
  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();

  std::int64_t min_deg_ = 0;
  std::vector<Integer> coeffs_;
};

/// gcd in Z[T] of two Laurent polynomials, computed from contents and a
/// primitive remainder sequence; returned normalized (units +-T^s divided out).
LaurentPoly int_poly_content_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace knotcode
