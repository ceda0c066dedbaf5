#include "knotcode/cable.hpp"

#include <numeric>
#include <stdexcept>

#include "knotcode/coloring.hpp"
#include "knotcode/fq_linalg.hpp"

namespace knotcode {

namespace {

LaurentPoly t_power_minus_one(long e) { return LaurentPoly::monomial(1, e) - LaurentPoly(1); }

}  // namespace

LaurentPoly torus_alexander(long a, long b) {
  if (a == 0 || b == 0) throw std::invalid_argument("torus parameters must be nonzero");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  if (std::gcd(a, b) != 1) throw std::invalid_argument("torus parameters must be coprime");
  const LaurentPoly num = t_power_minus_one(a * b) * t_power_minus_one(1);
  const LaurentPoly den = t_power_minus_one(a) * t_power_minus_one(b);
  const auto q = num.exact_divide(den);
  if (!q) throw std::logic_error("torus Alexander quotient is not exact");
  return q->normalized();
}

LaurentPoly cable_alexander(const LaurentPoly& base, long a, long b) {
  const LaurentPoly torus = torus_alexander(a, b);
  return (torus * base.substitute_power(b < 0 ? -b : b)).normalized();
}

std::size_t EvaluatedIdealSeq::dimension() const {
  std::size_t k = 0;
  while (!at(k)) ++k;
  return k;
}

std::string EvaluatedIdealSeq::to_string() const {
  std::string out;
  for (bool b : flags) out += b ? 'T' : 'F';
  return out + "...";
}

EvaluatedIdealSeq ideal_seq_from_diagram(const Diagram& d, const FqField& f, FqElem t) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  if (d.is_trivial()) return unknot_ideal_seq(f, t);
  const FqMatrix m = evaluate(f, fox_matrix(d).entries, t);
  const std::size_t n = m.cols();
  const std::size_t r = rank(f, m);
  EvaluatedIdealSeq s{f, t, {}};
  for (std::size_t k = 0; k <= n; ++k) s.flags.push_back(k >= n - r);
  return s;
}

EvaluatedIdealSeq unknot_ideal_seq(const FqField& f, FqElem t) { return {f, t, {false, true}}; }

EvaluatedIdealSeq cable_ideal_seq(const EvaluatedIdealSeq& base, long a, long b, FqElem t) {
  const FqField& f = base.field;
  if (!f.contains(t) || t.code == 0) throw std::invalid_argument("t must be a nonzero field element");
  const FqElem expected = f.pow(t, b < 0 ? -b : b);
  if (base.t != expected)
    throw std::invalid_argument("companion sequence was evaluated at " + f.to_string(base.t) + ", expected t^" +
                                std::to_string(b < 0 ? -b : b) + " = " + f.to_string(expected));
  const bool delta_nonzero = evaluate(f, torus_alexander(a, b), t).code != 0;
  EvaluatedIdealSeq out{f, t, {}};
  for (std::size_t k = 0; k <= base.flags.size(); ++k) {
    const bool lower = k > 0 && base.at(k - 1);
    out.flags.push_back((delta_nonzero && base.at(k)) || lower);
  }
  return out;
}

std::vector<CableStep> iterated_cable(const std::function<EvaluatedIdealSeq(FqElem)>& base_at,
                                      const std::vector<std::pair<long, long>>& pairs, const FqField& f, FqElem t) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  const std::size_t m = pairs.size();
  // args[i] is where the knot after i cablings is evaluated; args[m] = t
  std::vector<FqElem> args(m + 1);
  args[m] = t;
  for (std::size_t i = m; i-- > 0;) {
    const long b = pairs[i].second;
    args[i] = f.pow(args[i + 1], b < 0 ? -b : b);
  }
  EvaluatedIdealSeq cur = base_at(args[0]);
  std::vector<CableStep> steps;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = pairs[i];
    CableStep s;
    s.a = a;
    s.b = b;
    s.t = args[i + 1];
    s.t_base = args[i];
    s.delta = evaluate(f, torus_alexander(a, b), s.t);
    s.dim_before = cur.dimension();
    cur = cable_ideal_seq(cur, a, b, s.t);
    s.dim_after = cur.dimension();
    s.seq = cur;
    steps.push_back(s);
  }
  return steps;
}

std::uint64_t iterated_cable_length(std::uint64_t p, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::uint64_t n = 3;
  for (unsigned i = 1; i < m; ++i) n = 4 * n + p;
  return n;
}

}  // namespace knotcode
