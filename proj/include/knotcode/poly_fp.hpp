#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotcode {

/// Deterministic primality test: trial division below 10^6, then
/// Miller-Rabin with a witness set that is exact for 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse modulo a prime; throws on zero.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Polynomial over the prime field F_p, ascending coefficients, no trailing zeros.
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static PolyFp constant(std::uint64_t p, std::int64_t c);
  /// The monomial T.
  static PolyFp x(std::uint64_t p);
  /// Coefficients given as signed integers, reduced mod p.
  static PolyFp from_signed(std::uint64_t p, const std::vector<std::int64_t>& coeffs);

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  PolyFp& operator+=(const PolyFp& o);
  PolyFp& operator-=(const PolyFp& o);
  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  PolyFp operator-() const;
  PolyFp scaled(std::uint64_t s) const;
  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const;
  PolyFp mod(const PolyFp& d) const { return divmod(d).second; }
  PolyFp monic() const;
  std::uint64_t evaluate(std::uint64_t x) const;
  /// this^e mod m.
  PolyFp pow_mod(std::uint64_t e, const PolyFp& m) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

/// Monic gcd over F_p[T]; gcd(0, 0) = 0.
PolyFp poly_gcd(const PolyFp& a, const PolyFp& b);

/// Irreducibility over F_p via gcd(f, x^(p^i) - x mod f) = 1 for i <= deg/2.
bool is_irreducible(const PolyFp& f);

}  // namespace knotcode
