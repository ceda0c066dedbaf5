#include "knotcode/finite_field.hpp"

#include <stdexcept>

namespace knotcode {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 32U;
constexpr std::uint64_t kMaxLogTableSize = std::uint64_t{1} << 20U;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// Discrete log / antilog tables for extension fields of moderate size.
struct FqField::Tables {
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
};

FqField FqField::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxFieldSize) throw std::invalid_argument("field too large");
  FqField f;
  f.p_ = p;
  f.degree_ = 1;
  f.q_ = p;
  f.modulus_ = {0, 1};
  return f;
}

FqField FqField::make(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  const PolyFp m(p, modulus);
  if (m.degree() < 1) throw std::invalid_argument("field modulus must have degree at least 1");
  if (m.leading() != 1 || m.coeffs().size() != modulus.size())
    throw std::invalid_argument("field modulus must be monic (ascending coefficients, last = 1)");
  if (!is_irreducible(m)) throw std::invalid_argument("field modulus " + m.to_string("x") + " is reducible over F_" + std::to_string(p));
  FqField f;
  f.p_ = p;
  f.degree_ = static_cast<unsigned>(m.degree());
  f.modulus_ = m.coeffs();
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < f.degree_; ++i) {
    q *= p;
    if (q >= kMaxFieldSize) throw std::invalid_argument("field too large");
  }
  f.q_ = static_cast<std::uint64_t>(q);
  if (f.degree_ > 1 && f.q_ <= kMaxLogTableSize) {
    auto tables = std::make_shared<Tables>();
    const auto q1 = f.q_ - 1;
    const auto factors = prime_factors(q1);
    FqElem g{0};
    for (std::uint64_t c = 2; c < f.q_; ++c) {
      bool primitive = true;
      for (auto r : factors) {
        FqElem acc = f.one();
        FqElem base{c};
        std::uint64_t e = q1 / r;
        while (e > 0) {
          if (e & 1U) acc = f.mul_slow(acc, base);
          base = f.mul_slow(base, base);
          e >>= 1U;
        }
        if (acc == f.one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = FqElem{c};
        break;
      }
    }
    tables->exp.resize(q1);
    tables->log.assign(f.q_, 0);
    FqElem cur = f.one();
    for (std::uint64_t i = 0; i < q1; ++i) {
      tables->exp[i] = static_cast<std::uint32_t>(cur.code);
      tables->log[cur.code] = static_cast<std::uint32_t>(i);
      cur = f.mul_slow(cur, g);
    }
    f.tables_ = std::move(tables);
  }
  return f;
}

FqElem FqField::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((v % sp) + sp) % sp)};
}

FqElem FqField::from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
  const PolyFp reduced = PolyFp(p_, coeffs).mod(PolyFp(p_, modulus_));
  std::uint64_t code = 0;
  for (std::size_t i = reduced.coeffs().size(); i-- > 0;) code = code * p_ + reduced.coeffs()[i];
  return {code};
}

std::vector<std::uint64_t> FqField::coeffs(FqElem a) const {
  std::vector<std::uint64_t> out(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = a.code % p_;
    a.code /= p_;
  }
  return out;
}

FqElem FqField::generator_x() const { return from_coeffs({0, 1}); }

FqElem FqField::add(FqElem a, FqElem b) const {
  if (degree_ == 1) return {(a.code + b.code) % p_};
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    code += ((a.code % p_ + b.code % p_) % p_) * scale;
    a.code /= p_;
    b.code /= p_;
    scale *= p_;
  }
  return {code};
}

FqElem FqField::neg(FqElem a) const {
  if (degree_ == 1) return {(p_ - a.code) % p_};
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    code += ((p_ - a.code % p_) % p_) * scale;
    a.code /= p_;
    scale *= p_;
  }
  return {code};
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::mul_slow(FqElem a, FqElem b) const {
  const PolyFp prod = PolyFp(p_, coeffs(a)) * PolyFp(p_, coeffs(b));
  return from_coeffs(prod.coeffs());
}

FqElem FqField::mul(FqElem a, FqElem b) const {
  if (degree_ == 1) return {mul_mod(a.code, b.code, p_)};
  if (a.code == 0 || b.code == 0) return zero();
  if (tables_) {
    const std::uint64_t q1 = q_ - 1;
    return {tables_->exp[(tables_->log[a.code] + static_cast<std::uint64_t>(tables_->log[b.code])) % q1]};
  }
  return mul_slow(a, b);
}

FqElem FqField::inv(FqElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  if (degree_ == 1) return {inv_mod(a.code, p_)};
  if (tables_) {
    const std::uint64_t q1 = q_ - 1;
    return {tables_->exp[(q1 - tables_->log[a.code]) % q1]};
  }
  return pow(a, static_cast<std::int64_t>(q_ - 2));
}

FqElem FqField::pow(FqElem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FqElem r = one();
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1U) r = mul(r, a);
    a = mul(a, a);
    ue >>= 1U;
  }
  return r;
}

std::uint64_t FqField::order(FqElem a) const {
  if (a.code == 0) throw std::domain_error("order of zero is undefined");
  std::uint64_t ord = q_ - 1;
  for (auto r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
  }
  return ord;
}

std::string FqField::to_string(FqElem a) const {
  if (degree_ == 1) return std::to_string(a.code);
  return PolyFp(p_, coeffs(a)).to_string("a");
}

}  // namespace knotcode
