#include "knotcode/reidemeister.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

namespace knotcode {

namespace {

enum Dir : int { E = 0, N = 1, W = 2, S = 3 };

// Point the in-slot of `old_edge` at its head crossing to `fresh`.
void redirect_head(Diagram& d, EdgeId old_edge, EdgeId fresh) {
  for (Crossing& c : d.crossings) {
    if (c.under_in == old_edge) {
      c.under_in = fresh;
      return;
    }
    if (c.over_in == old_edge) {
      c.over_in = fresh;
      return;
    }
  }
  throw std::logic_error("edge has no head crossing");
}

struct Pass {
  EdgeId in;
  EdgeId out;
  Dir out_dir;
};

Crossing make_crossing(const Pass& over, const Pass& under) {
  const int sign = under.out_dir == (over.out_dir + 1) % 4 ? 1 : -1;
  return {under.in, under.out, over.in, over.out, sign};
}

}  // namespace

Diagram r1_add(const Diagram& d, EdgeId e, TwistSide side, bool first_over) {
  require_valid(d);
  const int sign = (side == TwistSide::left) == !first_over ? 1 : -1;
  if (d.is_trivial()) {
    if (e != 0) throw std::invalid_argument("r1_add: the unknot has only edge 0");
    Diagram out;
    // edge 0 runs around the circle, edge 1 is the loop
    out.crossings.push_back(first_over ? Crossing{1, 0, 0, 1, sign} : Crossing{0, 1, 1, 0, sign});
    out.outer = d.outer;
    require_valid(out);
    return out;
  }
  if (e >= d.edge_count()) throw std::invalid_argument("r1_add: edge out of range");
  Diagram out = d;
  const auto loop = static_cast<EdgeId>(d.edge_count());
  const EdgeId rest = loop + 1;
  redirect_head(out, e, rest);
  out.crossings.push_back(first_over ? Crossing{loop, rest, e, loop, sign} : Crossing{e, loop, loop, rest, sign});
  require_valid(out);
  return out;
}

Diagram r1_add_on_arc(const Diagram& d, ArcId a, TwistSide side, bool first_over) {
  const ArcMap am = arcs(d);
  if (a >= am.count) throw std::invalid_argument("r1_add: arc out of range");
  return r1_add(d, am.first_edge[a], side, first_over);
}

std::vector<std::size_t> r1_candidates(const Diagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < d.n(); ++k) {
    const Crossing& c = d.crossings[k];
    if (c.over_out == c.under_in || c.under_out == c.over_in) out.push_back(k);
  }
  return out;
}

Diagram r1_remove(const Diagram& d, std::size_t crossing) {
  require_valid(d);
  const auto cand = r1_candidates(d);
  if (std::find(cand.begin(), cand.end(), crossing) == cand.end())
    throw std::invalid_argument("crossing " + std::to_string(crossing) + " is not a Reidemeister I twist");
  return remove_crossings(d, {crossing});
}

Diagram remove_crossings(const Diagram& d, const std::vector<std::size_t>& doomed_list) {
  require_valid(d);
  std::vector<bool> doomed(d.n(), false);
  for (auto k : doomed_list) {
    if (k >= d.n()) throw std::invalid_argument("crossing index out of range");
    doomed[k] = true;
  }
  const auto walk = traversal(d, 0);
  const std::size_t L = walk.size();
  std::vector<std::size_t> keep;  // surviving visit positions
  for (std::size_t j = 0; j < L; ++j)
    if (!doomed[walk[j].crossing]) keep.push_back(j);
  if (keep.empty()) return unknot_diagram();

  // chain i ends with the in-edge of visit keep[i] and starts after visit keep[i-1]
  const std::size_t m = keep.size();
  std::vector<std::size_t> chain_of_edge(d.edge_count());
  std::vector<EdgeId> chain_min(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = keep[(i + m - 1) % m];
    std::size_t j = (prev + 1) % L;
    EdgeId lo = walk[j].in_edge;
    while (true) {
      chain_of_edge[walk[j].in_edge] = i;
      lo = std::min(lo, walk[j].in_edge);
      if (j == keep[i]) break;
      j = (j + 1) % L;
    }
    chain_min[i] = lo;
  }
  std::vector<EdgeId> sorted = chain_min;
  std::sort(sorted.begin(), sorted.end());
  std::vector<EdgeId> new_id(m);
  for (std::size_t i = 0; i < m; ++i)
    new_id[i] = static_cast<EdgeId>(std::lower_bound(sorted.begin(), sorted.end(), chain_min[i]) - sorted.begin());

  Diagram out;
  for (std::size_t k = 0; k < d.n(); ++k) {
    if (doomed[k]) continue;
    Crossing c;
    c.sign = d.crossings[k].sign;
    for (std::size_t i = 0; i < m; ++i) {
      const Visit& v = walk[keep[i]];
      if (v.crossing != k) continue;
      const EdgeId in = new_id[i];
      const EdgeId outgoing = new_id[(i + 1) % m];
      if (v.over) {
        c.over_in = in;
        c.over_out = outgoing;
      } else {
        c.under_in = in;
        c.under_out = outgoing;
      }
    }
    out.crossings.push_back(c);
  }

  // outer marker: nearest region (from the old outer one) bordered by an edge that keeps an endpoint
  const RegionMap reg = regions(d);
  const EdgeEnds ends = edge_ends(d);
  auto survives = [&](EdgeId e) { return !doomed[ends.tail[e]] || !doomed[ends.head[e]]; };
  std::vector<bool> seen(reg.count, false);
  std::queue<RegionId> todo;
  todo.push(reg.outer);
  seen[reg.outer] = true;
  bool placed = false;
  while (!todo.empty() && !placed) {
    const RegionId r = todo.front();
    todo.pop();
    for (const EdgeSide& t : reg.boundary[r]) {
      if (survives(t.edge)) {
        out.outer = {new_id[chain_of_edge[t.edge]], t.side};
        placed = true;
        break;
      }
    }
    for (const EdgeSide& t : reg.boundary[r]) {
      const RegionId other = reg.at({t.edge, opposite(t.side)});
      if (!seen[other]) {
        seen[other] = true;
        todo.push(other);
      }
    }
  }
  require_valid(out);
  return out;
}

Diagram r2_add(const Diagram& d, EdgeSide a, EdgeSide b, bool a_over) {
  require_valid(d);
  if (d.is_trivial()) throw std::invalid_argument("r2_add: the unknot has a single edge");
  if (a.edge >= d.edge_count() || b.edge >= d.edge_count()) throw std::invalid_argument("r2_add: edge out of range");
  if (a.edge == b.edge) throw std::invalid_argument("r2_add: the two tokens must name different edges");
  const RegionMap reg = regions(d);
  if (reg.at(a) != reg.at(b)) throw std::invalid_argument("r2_add: the two tokens lie on different regions");

  const auto n = static_cast<EdgeId>(d.edge_count());
  const EdgeId a1 = n;
  const EdgeId a2 = n + 1;
  const EdgeId b1 = n + 2;
  const EdgeId b2 = n + 3;
  const bool swap_ns = a.side == Side::right;
  auto dir = [&](Dir x) {
    if (!swap_ns) return x;
    if (x == N) return S;
    if (x == S) return N;
    return x;
  };
  const bool westward = a.side == b.side;
  // finger of a: up through X1, back down through X2
  const Pass a_x1{a.edge, a1, dir(N)};
  const Pass a_x2{a1, a2, dir(S)};
  Pass b_x1{};
  Pass b_x2{};
  if (westward) {
    b_x2 = {b.edge, b1, W};
    b_x1 = {b1, b2, W};
  } else {
    b_x1 = {b.edge, b1, E};
    b_x2 = {b1, b2, E};
  }
  Diagram out = d;
  redirect_head(out, a.edge, a2);
  redirect_head(out, b.edge, b2);
  out.crossings.push_back(a_over ? make_crossing(a_x1, b_x1) : make_crossing(b_x1, a_x1));
  out.crossings.push_back(a_over ? make_crossing(a_x2, b_x2) : make_crossing(b_x2, a_x2));
  require_valid(out);
  return out;
}

Diagram r2_add_on_arcs(const Diagram& d, ArcId a, ArcId b, RegionId region, bool a_over) {
  require_valid(d);
  const ArcMap am = arcs(d);
  const RegionMap reg = regions(d);
  if (a >= am.count || b >= am.count) throw std::invalid_argument("r2_add: arc out of range");
  if (region >= reg.count) throw std::invalid_argument("r2_add: region out of range");
  auto find = [&](ArcId arc, std::optional<EdgeId> avoid) -> std::optional<EdgeSide> {
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
      if (am.of_edge[e] != arc || (avoid && *avoid == e)) continue;
      if (reg.left[e] == region) return EdgeSide{e, Side::left};
      if (reg.right[e] == region) return EdgeSide{e, Side::right};
    }
    return std::nullopt;
  };
  const auto ta = find(a, std::nullopt);
  if (!ta) throw std::invalid_argument("r2_add: arc does not border the region");
  const auto tb = find(b, ta->edge);
  if (!tb) throw std::invalid_argument("r2_add: arc does not border the region");
  return r2_add(d, *ta, *tb, a_over);
}

std::vector<std::pair<std::size_t, std::size_t>> r2_candidates(const Diagram& d) {
  std::set<std::pair<std::size_t, std::size_t>> found;
  if (d.is_trivial()) return {};
  const RegionMap reg = regions(d);
  const EdgeEnds ends = edge_ends(d);
  for (const auto& face : reg.boundary) {
    if (face.size() != 2) continue;
    const EdgeId f = face[0].edge;
    const EdgeId g = face[1].edge;
    if (f == g) continue;
    const std::size_t x = ends.tail[f];
    const std::size_t y = ends.head[f];
    if (x == y) continue;
    if (std::set<std::size_t>{x, y} != std::set<std::size_t>{ends.tail[g], ends.head[g]}) continue;
    const bool f_over = ends.tail_over[f] && ends.head_over[f];
    const bool f_under = !ends.tail_over[f] && !ends.head_over[f];
    const bool g_over = ends.tail_over[g] && ends.head_over[g];
    const bool g_under = !ends.tail_over[g] && !ends.head_over[g];
    if ((f_over && g_under) || (f_under && g_over)) found.insert({std::min(x, y), std::max(x, y)});
  }
  return {found.begin(), found.end()};
}

Diagram r2_remove(const Diagram& d, std::size_t c1, std::size_t c2) {
  require_valid(d);
  const auto cand = r2_candidates(d);
  const std::pair<std::size_t, std::size_t> key{std::min(c1, c2), std::max(c1, c2)};
  if (std::find(cand.begin(), cand.end(), key) == cand.end())
    throw std::invalid_argument("crossings " + std::to_string(c1) + " and " + std::to_string(c2) +
                                " do not bound a Reidemeister II bigon");
  return remove_crossings(d, {c1, c2});
}

}  // namespace knotcode
