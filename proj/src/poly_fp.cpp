#include "knotcode/poly_fp.hpp"

#include <array>
#include <stdexcept>

namespace knotcode {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kTrialLimit = 1000000;
  for (std::uint64_t d = 2; d * d <= n && d < kTrialLimit; ++d)
    if (n % d == 0) return false;
  if (n < kTrialLimit * kTrialLimit) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  constexpr std::array<std::uint64_t, 7> kWitnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t a : kWitnesses) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("PolyFp: modulus must be at least 2");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, std::int64_t c) { return from_signed(p, {c}); }

PolyFp PolyFp::x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

PolyFp PolyFp::from_signed(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (auto v : coeffs) c.push_back(static_cast<std::uint64_t>(((v % sp) + sp) % sp));
  return PolyFp(p, std::move(c));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp& PolyFp::operator+=(const PolyFp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& o) { return *this += -o; }

PolyFp PolyFp::operator-() const {
  PolyFp r = *this;
  for (auto& v : r.c_) v = (p_ - v) % p_;
  return r;
}

PolyFp PolyFp::scaled(std::uint64_t s) const {
  PolyFp r = *this;
  for (auto& v : r.c_) v = mul_mod(v, s % p_, p_);
  r.trim();
  return r;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_, {});
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = (out[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return PolyFp(a.p_, std::move(out));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& d) const {
  if (d.is_zero()) throw std::domain_error("PolyFp: division by zero polynomial");
  PolyFp rem = *this;
  if (rem.degree() < d.degree()) return {PolyFp(p_, {}), rem};
  std::vector<std::uint64_t> q(static_cast<std::size_t>(rem.degree() - d.degree() + 1), 0);
  const std::uint64_t inv_lead = inv_mod(d.leading(), p_);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const std::uint64_t f = mul_mod(rem.leading(), inv_lead, p_);
    q[shift] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      rem.c_[shift + j] = (rem.c_[shift + j] + p_ - mul_mod(f, d.c_[j], p_)) % p_;
    rem.trim();
  }
  return {PolyFp(p_, std::move(q)), rem};
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

std::uint64_t PolyFp::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
  return acc;
}

PolyFp PolyFp::pow_mod(std::uint64_t e, const PolyFp& m) const {
  PolyFp result = PolyFp::constant(p_, 1).mod(m);
  PolyFp base = mod(m);
  while (e > 0) {
    if (e & 1U) result = (result * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1U;
  }
  return result;
}

std::string PolyFp::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || c_[k] != 1) out += std::to_string(c_[k]);
    if (k >= 1) out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyFp poly_gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a;
  PolyFp y = b;
  while (!y.is_zero()) {
    PolyFp r = x.mod(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t p = f.prime();
  const PolyFp x = PolyFp::x(p);
  PolyFp power = x.mod(f);
  for (int i = 1; i <= n / 2; ++i) {
    power = power.pow_mod(p, f);
    if (poly_gcd(f, power - x).degree() != 0) return false;
  }
  return true;
}

}  // namespace knotcode
