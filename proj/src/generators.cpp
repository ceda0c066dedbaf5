#include "knotcode/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace knotcode {

namespace {

// Compass slots, counterclockwise. In the usual diagonal drawing of a crossing
// E is the north-east end, N north-west, W south-west and S south-east.
enum Dir : int { E = 0, N = 1, W = 2, S = 3 };

// Unoriented planar 4-valent graph; orientation and edge numbers are found by
// walking the knot.
class PlanarBuilder {
 public:
  // ew_over: the E-W strand passes over the N-S strand.
  std::size_t add(bool ew_over) {
    ew_over_.push_back(ew_over);
    link_.push_back({});
    return ew_over_.size() - 1;
  }

  void connect(std::size_t a, Dir sa, std::size_t b, Dir sb) {
    auto& x = link_[a][sa];
    auto& y = link_[b][sb];
    if (x || y) throw std::logic_error("planar builder: slot connected twice");
    x = End{b, sb};
    y = End{a, sa};
  }

  // outer: the region in the sector counterclockwise after slot outer_slot at outer_junction.
  Diagram build(std::size_t outer_junction, Dir outer_slot) const {
    const std::size_t n = ew_over_.size();
    if (n == 0) return unknot_diagram();
    for (const auto& l : link_)
      for (const auto& e : l)
        if (!e) throw std::logic_error("planar builder: dangling slot");

    struct Pass {
      EdgeId in = 0, out = 0;
      Dir in_dir = E, out_dir = E;
      bool seen = false;
    };
    std::vector<std::array<Pass, 2>> pass(n);  // [0] = E-W strand, [1] = N-S strand
    // which edge touches each slot, and whether it enters there
    std::vector<std::array<std::pair<EdgeId, bool>, 4>> at(n);

    const Dir start = ew_over_[0] ? N : E;
    std::size_t j = 0;
    Dir leave = start;
    EdgeId e = 0;
    std::size_t visits = 0;
    while (true) {
      const End nxt = *link_[j][leave];
      const std::size_t k = nxt.junction;
      const Dir in_dir = nxt.slot;
      const Dir out_dir = static_cast<Dir>((in_dir + 2) % 4);
      const std::size_t strand = (in_dir == E || in_dir == W) ? 0 : 1;
      at[j][leave] = {e, false};
      at[k][in_dir] = {e, true};
      Pass& p = pass[k][strand];
      if (p.seen) throw std::invalid_argument("diagram has more than one component");
      p.seen = true;
      p.in = e;
      p.in_dir = in_dir;
      p.out_dir = out_dir;
      ++visits;
      const EdgeId next = static_cast<EdgeId>((visits == 2 * n) ? 0 : e + 1);
      p.out = next;
      j = k;
      leave = out_dir;
      e = next;
      if (visits == 2 * n) break;
      if (j == 0 && leave == start) break;
    }
    if (visits != 2 * n || !(j == 0 && leave == start))
      throw std::invalid_argument("diagram has more than one component");

    Diagram d;
    for (std::size_t k = 0; k < n; ++k) {
      const Pass& over = pass[k][ew_over_[k] ? 0 : 1];
      const Pass& under = pass[k][ew_over_[k] ? 1 : 0];
      Crossing c;
      c.under_in = under.in;
      c.under_out = under.out;
      c.over_in = over.in;
      c.over_out = over.out;
      c.sign = (under.out_dir == (over.out_dir + 1) % 4) ? 1 : -1;
      d.crossings.push_back(c);
    }
    const auto [edge, enters] = at[outer_junction][outer_slot];
    d.outer = {edge, enters ? Side::right : Side::left};
    require_valid(d);
    return d;
  }

 private:
  struct End {
    std::size_t junction;
    Dir slot;
  };
  std::vector<bool> ew_over_;
  std::vector<std::array<std::optional<End>, 4>> link_;
};

long gcd_long(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

std::vector<std::string> builtin_names() { return {"trefoil", "figure_eight", "unknot"}; }

Diagram builtin(const std::string& name) {
  if (name == "unknot") return unknot_diagram();
  if (name == "trefoil") {
    Diagram d;
    d.crossings = {{3, 4, 0, 1, 1}, {5, 0, 2, 3, 1}, {1, 2, 4, 5, 1}};
    d.outer = {0, Side::left};
    return d;
  }
  if (name == "figure_eight") {
    return diagram_from_visits({{2, true}, {0, false}, {3, true}, {1, false}, {0, true}, {2, false}, {1, true}, {3, false}},
                               {1, -1, 1, -1}, {0, Side::left});
  }
  throw std::invalid_argument("unknown built-in diagram '" + name + "'");
}

Diagram torus_diagram(const TorusSpec& s) {
  if (s.a == 0 || s.b == 0) throw std::invalid_argument("torus parameters must be nonzero");
  if (gcd_long(s.a, s.b) != 1) throw std::invalid_argument("torus parameters must be coprime");
  const long strands = s.a < 0 ? -s.a : s.a;
  const long reps = s.b < 0 ? -s.b : s.b;
  if (strands == 1) return unknot_diagram();
  const bool positive = (s.a > 0) == (s.b > 0);

  PlanarBuilder pb;
  struct End {
    std::size_t junction;
    Dir slot;
  };
  std::vector<std::optional<End>> bottom(static_cast<std::size_t>(strands));
  std::vector<std::optional<End>> top(static_cast<std::size_t>(strands));
  std::optional<std::size_t> first_s1;
  for (long r = 0; r < reps; ++r) {
    for (long i = 0; i + 1 < strands; ++i) {
      const std::size_t c = pb.add(positive);
      if (!first_s1 && i == 0) first_s1 = c;
      const auto lo = static_cast<std::size_t>(i);
      const auto hi = lo + 1;
      for (auto [pos, slot] : {std::pair{lo, W}, std::pair{hi, S}}) {
        if (top[pos])
          pb.connect(top[pos]->junction, top[pos]->slot, c, slot);
        else
          bottom[pos] = End{c, slot};
      }
      top[lo] = End{c, N};
      top[hi] = End{c, E};
    }
  }
  // closure strands run around the right-hand side
  for (std::size_t pos = 0; pos < top.size(); ++pos) pb.connect(top[pos]->junction, top[pos]->slot, bottom[pos]->junction, bottom[pos]->slot);
  // T(2,b): the unbounded region is one of the bigons between successive crossings;
  // otherwise it is the region left of the braid
  if (strands == 2) return pb.build(0, E);
  return pb.build(*first_s1, N);
}

bool is_pretzel_knot(const PretzelSpec& s) {
  const std::size_t m = s.twists.size();
  if (m == 0) return false;
  std::size_t even = 0;
  for (long p : s.twists)
    if (p % 2 == 0) ++even;
  if (even == 1) return true;
  return even == 0 && m % 2 == 1;
}

Diagram pretzel_diagram(const PretzelSpec& s) {
  for (long p : s.twists)
    if (p == 0) throw std::invalid_argument("pretzel twist counts must be nonzero");
  if (!is_pretzel_knot(s)) throw std::invalid_argument("pretzel parameters describe a link with more than one component");
  PlanarBuilder pb;
  struct Box {
    std::size_t first, last;
  };
  std::vector<Box> boxes;
  for (long p : s.twists) {
    const long count = p < 0 ? -p : p;
    std::size_t prev = 0;
    Box b{};
    for (long j = 0; j < count; ++j) {
      const std::size_t c = pb.add(p > 0);
      if (j == 0)
        b.first = c;
      else {
        pb.connect(prev, W, c, N);
        pb.connect(prev, S, c, E);
      }
      prev = c;
    }
    b.last = prev;
    boxes.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    pb.connect(boxes[i].first, E, boxes[i + 1].first, N);
    pb.connect(boxes[i].last, S, boxes[i + 1].last, W);
  }
  pb.connect(boxes.front().first, N, boxes.back().first, E);
  pb.connect(boxes.front().last, W, boxes.back().last, S);
  return pb.build(boxes.front().first, N);
}

Diagram connected_sum(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2) {
  require_valid(d1);
  require_valid(d2);
  const ArcMap arcs1 = arcs(d1);
  const ArcMap arcs2 = arcs(d2);
  if (a1 >= arcs1.count || a2 >= arcs2.count) throw std::invalid_argument("connected_sum: arc index out of range");
  return connected_sum_at_edges(d1, arcs1.first_edge[a1], d2, arcs2.first_edge[a2]);
}

Diagram connected_sum_at_edges(const Diagram& d1, EdgeId e1, const Diagram& d2, EdgeId e2) {
  require_valid(d1);
  require_valid(d2);
  if (e1 >= std::max<std::size_t>(d1.edge_count(), 1) || e2 >= std::max<std::size_t>(d2.edge_count(), 1))
    throw std::invalid_argument("connected_sum: edge index out of range");
  if (d2.is_trivial()) return d1;
  if (d1.is_trivial()) return d2;
  const auto shift = static_cast<EdgeId>(d1.edge_count());
  Diagram out = d1;
  for (Crossing c : d2.crossings) {
    c.under_in += shift;
    c.under_out += shift;
    c.over_in += shift;
    c.over_out += shift;
    out.crossings.push_back(c);
  }
  e2 += shift;
  // swap the heads of e1 and e2
  for (Crossing& c : out.crossings) {
    if (c.under_in == e1)
      c.under_in = e2;
    else if (c.under_in == e2)
      c.under_in = e1;
    if (c.over_in == e1)
      c.over_in = e2;
    else if (c.over_in == e2)
      c.over_in = e1;
  }
  require_valid(out);
  return out;
}

}  // namespace knotcode
