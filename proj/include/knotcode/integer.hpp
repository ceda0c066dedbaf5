#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace knotcode {

/// Arbitrary-precision integer used throughout the algebra layer.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Largest e with p^e | v. `v` must be nonzero and `p` at least 2.
inline unsigned valuation(Integer v, const Integer& p) {
  unsigned e = 0;
  if (v == 0) return 0;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0) {
    v /= p;
    ++e;
  }
  return e;
}

/// Floor-style mod that always lands in [0, m).
inline std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

}  // namespace knotcode
