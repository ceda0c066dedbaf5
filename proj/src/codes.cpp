#include "knotcode/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace knotcode {

namespace {

FqMatrix zero_rows(std::size_t n) { return FqMatrix(0, n); }

void require_same_length(const LinearCode& c, const FqVector& x) {
  if (x.size() != c.n) throw std::invalid_argument("vector length does not match the code length");
}

// Splits [0, total) into contiguous chunks, runs `work(lo, hi)` on each and
// returns the per-chunk results in chunk order.
template <class Acc, class Work>
std::vector<Acc> run_chunks(std::uint64_t total, Work work) {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, 16U);
  if (total < (1U << 14)) threads = 1;
  std::vector<Acc> out(threads);
  if (threads == 1) {
    out[0] = work(0, total);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = total / threads * i + std::min<std::uint64_t>(i, total % threads);
    const std::uint64_t hi = lo + total / threads + (i < total % threads ? 1 : 0);
    pool.emplace_back([&out, &work, i, lo, hi] { out[i] = work(lo, hi); });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::uint64_t checked_count(const LinearCode& c, std::uint64_t budget) {
  const Integer count = message_count(c);
  if (count > Integer(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("q^k = " + count.get_str() + " messages exceeds the enumeration budget of " +
                         std::to_string(budget));
  return count.get_ui();
}

std::optional<std::size_t> lowest_nonzero_weight(const WeightEnumerator& w) {
  for (std::size_t i = 1; i < w.counts.size(); ++i)
    if (w.counts[i] != 0) return i;
  return std::nullopt;
}

}  // namespace

LinearCode code_from_parity(const FqField& f, const FqMatrix& parity) {
  LinearCode c;
  c.field = f;
  c.n = parity.cols();
  c.parity = parity;
  c.generator = kernel_basis(f, parity);
  if (c.generator.rows() == 0) c.generator = zero_rows(c.n);
  return c;
}

LinearCode code_from_generator(const FqField& f, const FqMatrix& gen) {
  LinearCode c;
  c.field = f;
  c.n = gen.cols();
  c.generator = row_basis(f, gen);
  if (c.generator.rows() == 0) c.generator = zero_rows(c.n);
  c.parity = kernel_basis(f, c.generator.rows() == 0 ? FqMatrix(1, c.n, f.zero()) : c.generator);
  return c;
}

LinearCode code_from_diagram(const Diagram& d, const FqField& f, FqElem t, MatrixKind kind) {
  if (!f.contains(t)) throw std::invalid_argument("t is not an element of the field");
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  const Matrix<LaurentPoly> m = kind == MatrixKind::fox ? fox_matrix(d).entries : dehn_matrix(d).entries;
  LinearCode c = code_from_parity(f, evaluate(f, m, t));
  if (d.is_trivial()) {
    // no crossings: one arc (or two regions) and no relations
    c.n = kind == MatrixKind::fox ? 1 : 2;
    c.parity = FqMatrix(0, c.n);
    c.generator = identity_matrix(c.n, f.zero(), f.one());
  }
  if (t == f.one()) c.notes.push_back("t = 1 admits only trivial colorings");
  return c;
}

bool contains(const LinearCode& c, const FqVector& x) {
  require_same_length(c, x);
  for (auto v : mat_vec(c.field, c.parity, x))
    if (v.code != 0) return false;
  return true;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!(a.field == b.field) || a.n != b.n || a.k() != b.k()) return false;
  for (std::size_t r = 0; r < a.k(); ++r) {
    const auto row = a.generator.row(r);
    if (!contains(b, FqVector(row.begin(), row.end()))) return false;
  }
  return true;
}

std::string Distance::to_string() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "inf";
    case Kind::unknown:
      break;
  }
  return "unknown";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("KNOTCODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

Integer message_count(const LinearCode& c) {
  return ipow(Integer(static_cast<unsigned long>(c.field.size())), c.k());
}

void for_each_codeword(const LinearCode& c, std::uint64_t first, std::uint64_t last,
                       const std::function<void(const FqVector&)>& fn) {
  if (first >= last) return;
  const FqField& f = c.field;
  const std::uint64_t q = f.size();
  const std::size_t k = c.k();
  std::vector<std::uint64_t> digit(k, 0);
  std::uint64_t rest = first;
  for (std::size_t i = k; i-- > 0;) {
    digit[i] = rest % q;
    rest /= q;
  }
  if (rest != 0) return;  // first is past q^k
  FqVector word(c.n, f.zero());
  auto add_row = [&](std::size_t i, FqElem scale) {
    const auto g = c.generator.row(i);
    for (std::size_t j = 0; j < c.n; ++j) word[j] = f.add(word[j], f.mul(scale, g[j]));
  };
  for (std::size_t i = 0; i < k; ++i)
    if (digit[i] != 0) add_row(i, FqElem{digit[i]});

  for (std::uint64_t m = first; m < last; ++m) {
    fn(word);
    std::size_t i = k;
    while (i-- > 0) {
      const std::uint64_t old = digit[i];
      const std::uint64_t next = old + 1 == q ? 0 : old + 1;
      add_row(i, f.sub(FqElem{next}, FqElem{old}));
      digit[i] = next;
      if (next != 0) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;  // wrapped around
  }
}

std::size_t weight(const FqVector& x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](FqElem v) { return v.code != 0; }));
}

Distance min_distance(const LinearCode& c, std::uint64_t budget) {
  if (c.k() == 0) return Distance::infinite();
  std::uint64_t total = 0;
  try {
    total = checked_count(c, budget);
  } catch (const BudgetExceeded&) {
    return Distance::unknown();
  }
  const auto parts = run_chunks<std::size_t>(total, [&](std::uint64_t lo, std::uint64_t hi) {
    std::size_t best = c.n + 1;
    for_each_codeword(c, std::max<std::uint64_t>(lo, 1), hi, [&](const FqVector& w) {
      best = std::min(best, weight(w));
    });
    return best;
  });
  return Distance::of(*std::min_element(parts.begin(), parts.end()));
}

Integer WeightEnumerator::total() const {
  Integer s = 0;
  for (const auto& a : counts) s += a;
  return s;
}

std::string WeightEnumerator::to_string() const {
  std::string out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    if (!out.empty()) out += " + ";
    if (w == 0) {
      out += counts[w].get_str();
      continue;
    }
    if (counts[w] != 1) out += counts[w].get_str();
    out += w == 1 ? "T" : "T^" + std::to_string(w);
  }
  return out.empty() ? "0" : out;
}

WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget) {
  const std::uint64_t total = checked_count(c, budget);
  using Tally = std::vector<std::uint64_t>;
  const auto parts = run_chunks<Tally>(total, [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t(c.n + 1, 0);
    for_each_codeword(c, lo, hi, [&](const FqVector& w) { ++t[weight(w)]; });
    return t;
  });
  WeightEnumerator we;
  we.counts.assign(c.n + 1, 0);
  for (const auto& t : parts)
    for (std::size_t w = 0; w <= c.n; ++w) we.counts[w] += static_cast<unsigned long>(t[w]);
  return we;
}

LinearCode dual(const LinearCode& c) {
  LinearCode out;
  out.field = c.field;
  out.n = c.n;
  out.parity = c.generator;
  out.generator = row_basis(c.field, c.parity);
  if (out.generator.rows() == 0) out.generator = zero_rows(c.n);
  return out;
}

LinearCode subcode_last_zero(const LinearCode& c, std::size_t pos) {
  if (pos >= c.n) throw std::invalid_argument("coordinate out of range");
  FqMatrix parity = c.parity;
  FqVector e(c.n, c.field.zero());
  e[pos] = c.field.one();
  parity.append_row(e);
  return code_from_parity(c.field, parity);
}

LinearCode sum_code(const LinearCode& c1, std::size_t pos1, const LinearCode& c2, std::size_t pos2) {
  if (!(c1.field == c2.field)) throw std::invalid_argument("sum_code: codes live over different fields");
  if (pos1 >= c1.n || pos2 >= c2.n) throw std::invalid_argument("sum_code: coordinate out of range");
  const FqField& f = c1.field;
  const std::size_t n = c1.n + c2.n;
  FqMatrix parity(0, n);
  FqVector row(n);
  for (std::size_t r = 0; r < c1.parity.rows(); ++r) {
    std::fill(row.begin(), row.end(), f.zero());
    std::copy(c1.parity.row(r).begin(), c1.parity.row(r).end(), row.begin());
    parity.append_row(row);
  }
  for (std::size_t r = 0; r < c2.parity.rows(); ++r) {
    std::fill(row.begin(), row.end(), f.zero());
    std::copy(c2.parity.row(r).begin(), c2.parity.row(r).end(), row.begin() + static_cast<std::ptrdiff_t>(c1.n));
    parity.append_row(row);
  }
  std::fill(row.begin(), row.end(), f.zero());
  row[pos1] = f.one();
  row[c1.n + pos2] = f.neg(f.one());
  parity.append_row(row);
  return code_from_parity(f, parity);
}

Distance sum_min_distance(const LinearCode& c, const LinearCode& c_sub, const LinearCode& d,
                          const LinearCode& d_sub, std::uint64_t budget) {
  const WeightEnumerator wc = weight_enumerator(c, budget);
  const WeightEnumerator wcs = weight_enumerator(c_sub, budget);
  const WeightEnumerator wd = weight_enumerator(d, budget);
  const WeightEnumerator wds = weight_enumerator(d_sub, budget);
  // smallest weight in C \ C': a weight class that C' does not exhaust
  auto lowest_outside = [](const WeightEnumerator& all, const WeightEnumerator& sub) -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < all.counts.size(); ++w)
      if (all.counts[w] > sub.counts[w]) return w;
    return std::nullopt;
  };
  std::optional<std::size_t> best = lowest_nonzero_weight(wcs);
  if (const auto v = lowest_nonzero_weight(wds); v && (!best || *v < *best)) best = v;
  const auto v = lowest_outside(wc, wcs);
  const auto w = lowest_outside(wd, wds);
  if (v && w && (!best || *v + *w < *best)) best = *v + *w;
  return best ? Distance::of(*best) : Distance::infinite();
}

WeightEnumerator sum_weight_enumerator(const WeightEnumerator& c, const WeightEnumerator& c_sub,
                                       const WeightEnumerator& d, const WeightEnumerator& d_sub, std::uint64_t q) {
  if (c.counts.size() != c_sub.counts.size() || d.counts.size() != d_sub.counts.size())
    throw std::invalid_argument("subcode enumerators must have the length of their codes");
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  const std::size_t len = c.counts.size() + d.counts.size() - 1;
  std::vector<Integer> same(len, 0);
  std::vector<Integer> cross(len, 0);
  for (std::size_t i = 0; i < c.counts.size(); ++i)
    for (std::size_t j = 0; j < d.counts.size(); ++j) {
      same[i + j] += c_sub.counts[i] * d_sub.counts[j];
      cross[i + j] += (c.counts[i] - c_sub.counts[i]) * (d.counts[j] - d_sub.counts[j]);
    }
  const Integer unit = Integer(static_cast<unsigned long>(q)) - 1;
  WeightEnumerator out;
  for (std::size_t w = 0; w < len; ++w) {
    if (cross[w] % unit != 0) throw std::logic_error("weight enumerator cross term is not divisible by q - 1");
    out.counts.push_back(same[w] + cross[w] / unit);
  }
  return out;
}

LdpcProfile ldpc_profile(const LinearCode& c) {
  LdpcProfile p;
  const FqMatrix& h = c.parity;
  p.row_weights.assign(h.rows(), 0);
  p.col_weights.assign(h.cols(), 0);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(r, j).code != 0) {
        ++p.row_weights[r];
        ++p.col_weights[j];
      }
  auto constant = [](const std::vector<std::size_t>& v) -> std::optional<std::size_t> {
    if (v.empty() || std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return std::nullopt;
    return v.front();
  };
  if (h.rows() > 0) {
    p.row_regular = constant(p.row_weights);
    p.col_regular = constant(p.col_weights);
  }
  if (p.row_regular && p.col_regular)
    p.verdict = "(" + std::to_string(*p.row_regular) + "," + std::to_string(*p.col_regular) + ")-doubly-regular";
  else if (p.row_regular)
    p.verdict = "right " + std::to_string(*p.row_regular) + "-regular";
  else if (p.col_regular)
    p.verdict = "left " + std::to_string(*p.col_regular) + "-regular";
  else
    p.verdict = "irregular";
  return p;
}

DualFeasibility dual_knot_feasibility(const LinearCode& c, const Provenance& prov) {
  DualFeasibility out;
  const std::uint64_t p = c.field.characteristic();
  const std::size_t n = prov.n;
  {
    FeasibilityRule r{"divisibility", n % p != 0, ""};
    r.detail = std::to_string(p) + (r.ruled_out ? " does not divide " : " divides ") + std::to_string(n);
    out.rules.push_back(r);
  }
  {
    // k < (n - 1) / 2 without fractions
    FeasibilityRule r{"dimension", 2 * c.k() + 1 < n, ""};
    r.detail = "k = " + std::to_string(c.k()) + ", (n - 1)/2 = " + std::to_string(n > 0 ? n - 1 : 0) + "/2";
    out.rules.push_back(r);
  }
  {
    FeasibilityRule r{"summands", prov.component_count >= 4, ""};
    r.detail = std::to_string(prov.component_count) + " connected summand(s)";
    out.rules.push_back(r);
  }
  out.ruled_out = std::any_of(out.rules.begin(), out.rules.end(), [](const auto& r) { return r.ruled_out; });
  return out;
}

std::size_t dimension_via_ideals(const Diagram& d, const FqField& f, FqElem t) {
  if (t.code == 0) throw std::invalid_argument("t must be nonzero");
  if (d.is_trivial()) return 1;
  const FqMatrix m = evaluate(f, fox_matrix(d).entries, t);
  const std::size_t n = m.cols();
  const std::size_t r = rank(f, m);
  // E_k(M(t)) is the whole field exactly when k >= n - r
  const std::size_t k = n - r;
  if (kernel_basis(f, m).rows() != k) throw std::logic_error("elementary ideal and kernel dimensions disagree");
  return k;
}

std::size_t pretzel_predicted_dimension(const PretzelSpec& s, const FqField& f) {
  const auto p = static_cast<long>(f.characteristic());
  std::size_t shared = 0;
  for (long x : s.twists)
    if (x % p == 0) ++shared;
  if (shared > 0) return shared;
  const Integer det = knot_determinant(pretzel_diagram(s));
  return det % p == 0 ? 2 : 1;
}

}  // namespace knotcode
