#include "knotcode/laurent_poly.hpp"

#include <stdexcept>

namespace knotcode {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::from_coeffs(std::int64_t min_deg, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.min_deg_ = min_deg;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t exp) {
  return from_coeffs(exp, {c});
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_deg_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) min_deg_ = 0;
}

Integer LaurentPoly::coeff(std::int64_t exp) const {
  if (is_zero() || exp < min_deg_ || exp > max_deg()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_deg_)];
}

std::size_t LaurentPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t lo = std::min(min_deg_, o.min_deg_);
  const std::int64_t hi = std::max(max_deg(), o.max_deg());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_deg_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  min_deg_ += o.min_deg_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t s) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.min_deg_ += s;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t b) const {
  if (b == 0) throw std::invalid_argument("substitute_power: exponent must be nonzero");
  LaurentPoly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) r += monomial(coeffs_[i], (min_deg_ + static_cast<std::int64_t>(i)) * b);
  return r;
}

Integer LaurentPoly::evaluate(const Integer& t) const {
  if (is_zero()) return 0;
  if (min_deg_ < 0 && t != 1 && t != -1)
    throw std::domain_error("evaluate: negative exponent at a non-unit integer");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  if (min_deg_ >= 0) return acc * ipow(t, static_cast<unsigned long>(min_deg_));
  // t = +-1: t^-k = t^k
  return acc * ipow(t, static_cast<unsigned long>(-min_deg_));
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (is_zero()) return LaurentPoly();
  // Both coefficient vectors start with a nonzero entry, so plain polynomial
  // long division of the shifted parts decides divisibility in the Laurent ring.
  const std::size_t da = coeffs_.size() - 1;
  const std::size_t dd = d.coeffs_.size() - 1;
  if (da < dd) return std::nullopt;
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(da - dd + 1);
  const Integer& lc = d.coeffs_.back();
  for (std::size_t i = da + 1; i-- > dd;) {
    if (rem[i] == 0) continue;
    if (mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t()) == 0) return std::nullopt;
    Integer qi = rem[i] / lc;
    quot[i - dd] = qi;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= qi * d.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return from_coeffs(min_deg_ - d.min_deg_, std::move(quot));
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = shifted(-min_deg_);
  if (r.coeffs_.front() < 0) r = -r;
  return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t e = min_deg_ + static_cast<std::int64_t>(k);
    const bool neg = c < 0;
    const Integer mag = abs_value(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

Integer content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& v : c) g = gcd(g, v);
  return g;
}

std::vector<Integer> primitive_part(std::vector<Integer> c) {
  Integer g = content(c);
  if (g == 0) return c;
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return c;
}

void strip(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Pseudo-remainder of a by b (both nonempty, b nonzero leading coefficient).
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    strip(a);
  }
  return a;
}

}  // namespace

LaurentPoly int_poly_content_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Integer g = gcd(content(a.coeffs()), content(b.coeffs()));
  std::vector<Integer> x = primitive_part(a.shifted(-a.min_deg()).coeffs());
  std::vector<Integer> y = primitive_part(b.shifted(-b.min_deg()).coeffs());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(std::move(r));
  }
  for (auto& v : x) v *= g;
  return LaurentPoly::from_coeffs(0, std::move(x)).normalized();
}

}  // namespace knotcode
