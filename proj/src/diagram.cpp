#include "knotcode/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <queue>
#include <tuple>

namespace knotcode {

namespace {

// An edge end at a crossing: the edge and whether it enters there.
struct Slot {
  EdgeId edge;
  bool in;
};

std::array<Slot, 4> ccw_slots(const Crossing& c) {
  if (c.sign > 0) return {{{c.under_in, true}, {c.over_out, false}, {c.under_out, false}, {c.over_in, true}}};
  return {{{c.under_in, true}, {c.over_in, true}, {c.under_out, false}, {c.over_out, false}}};
}

// Structural checks that must pass before faces can be traced.
std::vector<std::string> structural_violations(const Diagram& d) {
  std::vector<std::string> out;
  const std::size_t m = d.edge_count();
  if (d.is_trivial()) {
    if (d.outer.edge != 0) out.emplace_back("outer marker names a missing edge");
    return out;
  }
  std::vector<int> ins(m, 0);
  std::vector<int> outs(m, 0);
  bool range_ok = true;
  for (std::size_t k = 0; k < d.n(); ++k) {
    const Crossing& c = d.crossings[k];
    if (c.sign != 1 && c.sign != -1) out.push_back("crossing " + std::to_string(k) + " has sign other than +1/-1");
    for (EdgeId e : {c.under_in, c.under_out, c.over_in, c.over_out})
      if (e >= m) {
        out.push_back("crossing " + std::to_string(k) + " uses edge " + std::to_string(e) + " outside 0.." +
                      std::to_string(m - 1));
        range_ok = false;
      }
    if (!range_ok) continue;
    ++ins[c.under_in];
    ++ins[c.over_in];
    ++outs[c.under_out];
    ++outs[c.over_out];
  }
  if (!range_ok) return out;
  for (std::size_t e = 0; e < m; ++e)
    if (ins[e] != 1 || outs[e] != 1) {
      out.push_back("edge not a matching: edge " + std::to_string(e) + " appears " + std::to_string(ins[e]) +
                    " times as incoming and " + std::to_string(outs[e]) + " times as outgoing");
      return out;
    }
  if (d.outer.edge >= m) out.emplace_back("outer marker names a missing edge");
  return out;
}

}  // namespace

Diagram unknot_diagram() { return Diagram{{}, EdgeSide{0, Side::right}}; }

EdgeEnds edge_ends(const Diagram& d) {
  const std::size_t m = d.edge_count();
  EdgeEnds ends;
  ends.tail.assign(m, 0);
  ends.head.assign(m, 0);
  ends.tail_over.assign(m, false);
  ends.head_over.assign(m, false);
  for (std::size_t k = 0; k < d.n(); ++k) {
    const Crossing& c = d.crossings[k];
    ends.head[c.under_in] = k;
    ends.head[c.over_in] = k;
    ends.head_over[c.over_in] = true;
    ends.tail[c.under_out] = k;
    ends.tail[c.over_out] = k;
    ends.tail_over[c.over_out] = true;
  }
  return ends;
}

std::vector<Visit> traversal(const Diagram& d, EdgeId start) {
  std::vector<Visit> out;
  if (d.is_trivial()) return out;
  const EdgeEnds ends = edge_ends(d);
  EdgeId e = start;
  do {
    const std::size_t k = ends.head[e];
    const bool over = ends.head_over[e];
    out.push_back({e, k, over});
    e = over ? d.crossings[k].over_out : d.crossings[k].under_out;
  } while (e != start && out.size() <= d.edge_count());
  return out;
}

ArcMap arcs(const Diagram& d) {
  ArcMap out;
  if (d.is_trivial()) {
    out.of_edge = {0};
    out.count = 1;
    out.first_edge = {0};
    return out;
  }
  const std::size_t m = d.edge_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : d.crossings) {
    const std::size_t a = find(c.over_in);
    const std::size_t b = find(c.over_out);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // roots are the smallest members, so scanning edges in order numbers arcs by first edge
  std::vector<std::optional<ArcId>> id_of_root(m);
  out.of_edge.assign(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t r = find(e);
    if (!id_of_root[r]) {
      id_of_root[r] = static_cast<ArcId>(out.count++);
      out.first_edge.push_back(static_cast<EdgeId>(e));
    }
    out.of_edge[e] = *id_of_root[r];
  }
  return out;
}

RegionMap regions(const Diagram& d) {
  RegionMap out;
  if (d.is_trivial()) {
    out.left = {0};
    out.right = {1};
    out.count = 2;
    out.boundary = {{{0, Side::left}}, {{0, Side::right}}};
    out.outer = out.at(d.outer);
    return out;
  }
  const std::size_t m = d.edge_count();
  const EdgeEnds ends = edge_ends(d);
  constexpr RegionId kUnset = ~RegionId{0};
  out.left.assign(m, kUnset);
  out.right.assign(m, kUnset);
  for (EdgeId e0 = 0; e0 < m; ++e0) {
    for (bool fwd0 : {true, false}) {
      auto& slot0 = fwd0 ? out.left[e0] : out.right[e0];
      if (slot0 != kUnset) continue;
      const auto id = static_cast<RegionId>(out.count++);
      out.boundary.emplace_back();
      EdgeId e = e0;
      bool fwd = fwd0;
      while (true) {
        auto& slot = fwd ? out.left[e] : out.right[e];
        if (slot != kUnset) break;
        slot = id;
        out.boundary.back().push_back({e, fwd ? Side::left : Side::right});
        // arrive at the far end of the traversed edge, turn to the clockwise neighbour
        const std::size_t k = fwd ? ends.head[e] : ends.tail[e];
        const auto slots = ccw_slots(d.crossings[k]);
        std::size_t i = 0;
        while (!(slots[i].edge == e && slots[i].in == fwd)) ++i;
        const Slot next = slots[(i + 3) % 4];
        e = next.edge;
        fwd = !next.in;
      }
    }
  }
  out.outer = out.at(d.outer);
  return out;
}

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport rep;
  rep.violations = structural_violations(d);
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  if (d.is_trivial()) {
    rep.arc_count = 1;
    rep.region_count = 2;
    return rep;
  }
  const auto walk = traversal(d, 0);
  if (walk.size() != d.edge_count())
    rep.violations.push_back("edge slots do not form one closed cycle (component through edge 0 has " +
                             std::to_string(walk.size()) + " of " + std::to_string(d.edge_count()) + " edges)");
  rep.arc_count = arcs(d).count;
  rep.region_count = regions(d).count;
  if (rep.region_count != d.n() + 2)
    rep.violations.push_back("face count " + std::to_string(rep.region_count) + " differs from n+2 = " +
                             std::to_string(d.n() + 2) + " (rotation system is not planar)");
  if (rep.violations.empty() && rep.arc_count != d.n())
    rep.violations.push_back("arc count " + std::to_string(rep.arc_count) + " differs from n");
  rep.ok = rep.violations.empty();
  return rep;
}

void require_valid(const Diagram& d) {
  const auto rep = validate_diagram(d);
  if (!rep.ok) throw InvalidDiagram("invalid diagram: " + rep.violations.front());
}

std::vector<std::int64_t> region_index(const Diagram& d) {
  const RegionMap r = regions(d);
  std::vector<std::optional<std::int64_t>> idx(r.count);
  // adjacency: left(e) -> right(e) costs -1
  std::vector<std::vector<std::pair<RegionId, std::int64_t>>> adj(r.count);
  const std::size_t m = d.is_trivial() ? 1 : d.edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    adj[r.left[e]].push_back({r.right[e], -1});
    adj[r.right[e]].push_back({r.left[e], +1});
  }
  std::queue<RegionId> todo;
  idx[r.outer] = 0;
  todo.push(r.outer);
  while (!todo.empty()) {
    const RegionId u = todo.front();
    todo.pop();
    for (auto [v, step] : adj[u]) {
      const std::int64_t want = *idx[u] + step;
      if (!idx[v]) {
        idx[v] = want;
        todo.push(v);
      } else if (*idx[v] != want) {
        throw InvalidDiagram("inconsistent region index: orientation data is corrupt");
      }
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(r.count);
  for (auto& v : idx) {
    if (!v) throw InvalidDiagram("region not reachable from the unbounded region");
    out.push_back(*v);
  }
  return out;
}

std::vector<Shade> checkerboard(const Diagram& d) {
  std::vector<Shade> out;
  for (auto v : region_index(d)) out.push_back(v % 2 == 0 ? Shade::white : Shade::black);
  return out;
}

Diagram diagram_from_visits(const std::vector<std::pair<std::size_t, bool>>& visits, const std::vector<int>& signs,
                            EdgeSide outer) {
  const std::size_t n = signs.size();
  if (visits.size() != 2 * n) throw InvalidDiagram("visit sequence length must be twice the crossing count");
  Diagram d;
  d.crossings.assign(n, Crossing{});
  std::vector<int> seen_over(n, 0);
  std::vector<int> seen_under(n, 0);
  const auto L = static_cast<EdgeId>(visits.size());
  for (EdgeId j = 0; j < L; ++j) {
    const auto [k, over] = visits[j];
    if (k >= n) throw InvalidDiagram("visit names a missing crossing");
    Crossing& c = d.crossings[k];
    if (over) {
      c.over_in = j;
      c.over_out = (j + 1) % L;
      ++seen_over[k];
    } else {
      c.under_in = j;
      c.under_out = (j + 1) % L;
      ++seen_under[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (seen_over[k] != 1 || seen_under[k] != 1)
      throw InvalidDiagram("crossing " + std::to_string(k) + " must be visited once over and once under");
    d.crossings[k].sign = signs[k];
  }
  d.outer = outer;
  return d;
}

namespace {

using Key = std::vector<std::int64_t>;

Key key_of(const Diagram& d) {
  Key k;
  k.reserve(d.n() * 5 + 2);
  for (const Crossing& c : d.crossings)
    k.insert(k.end(), {c.under_in, c.under_out, c.over_in, c.over_out, c.sign});
  k.push_back(d.outer.edge);
  k.push_back(static_cast<std::int64_t>(d.outer.side));
  return k;
}

}  // namespace

Diagram canonical_form(const Diagram& d) {
  require_valid(d);
  if (d.is_trivial()) return unknot_diagram();
  const RegionMap reg = regions(d);
  const auto& outer_tokens = reg.boundary[reg.outer];
  std::optional<Diagram> best;
  Key best_key;
  for (EdgeId s = 0; s < d.edge_count(); ++s) {
    const auto walk = traversal(d, s);
    std::vector<EdgeId> label(d.edge_count());
    std::vector<std::size_t> order;
    std::vector<bool> placed(d.n(), false);
    for (std::size_t j = 0; j < walk.size(); ++j) {
      label[walk[j].in_edge] = static_cast<EdgeId>(j);
      if (!placed[walk[j].crossing]) {
        placed[walk[j].crossing] = true;
        order.push_back(walk[j].crossing);
      }
    }
    Diagram c;
    for (std::size_t k : order) {
      const Crossing& x = d.crossings[k];
      c.crossings.push_back({label[x.under_in], label[x.under_out], label[x.over_in], label[x.over_out], x.sign});
    }
    c.outer = {label[outer_tokens.front().edge], outer_tokens.front().side};
    for (const EdgeSide& t : outer_tokens) c.outer = std::min(c.outer, EdgeSide{label[t.edge], t.side});
    Key k = key_of(c);
    if (!best || k < best_key) {
      best = std::move(c);
      best_key = std::move(k);
    }
  }
  return *best;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n()) return false;
  return canonical_form(a) == canonical_form(b);
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (Crossing& c : m.crossings) {
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
  }
  return m;
}

}  // namespace knotcode
