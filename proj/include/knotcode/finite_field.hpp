#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "knotcode/poly_fp.hpp"

namespace knotcode {

/// Element of a finite field, encoded as the integer sum_i c_i p^i of its
/// coefficient vector in the polynomial basis. Only meaningful together with
/// the FqField that produced it.
struct FqElem {
  std::uint64_t code = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// The finite field F_q = F_p[x]/(modulus), q = p^a.
///
/// Copies are cheap: the arithmetic tables are shared.
class FqField {
 public:
  /// Prime field F_p.
  static FqField prime(std::uint64_t p);
  /// Extension field; `modulus` is ascending, monic, irreducible over F_p.
  static FqField make(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t size() const { return q_; }
  /// Ascending coefficients of the defining polynomial; prime fields use x.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return degree_ == 1; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  /// Image of an integer (reduced mod p).
  FqElem from_int(std::int64_t v) const;
  /// Element with the given ascending coefficient vector (length <= degree).
  FqElem from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
  std::vector<std::uint64_t> coeffs(FqElem a) const;
  /// The class of x in F_p[x]/(modulus) (zero in a prime field).
  FqElem generator_x() const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  /// Throws std::domain_error on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  /// a^e for any integer e (negative exponents need a != 0).
  FqElem pow(FqElem a, std::int64_t e) const;
  /// Multiplicative order of a nonzero element; divides q - 1.
  std::uint64_t order(FqElem a) const;

  bool contains(FqElem a) const { return a.code < q_; }
  std::string to_string(FqElem a) const;

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;
  FqElem mul_slow(FqElem a, FqElem b) const;

  std::uint64_t p_ = 2;
  unsigned degree_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace knotcode
