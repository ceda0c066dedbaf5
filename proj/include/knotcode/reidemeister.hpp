#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "knotcode/diagram.hpp"

namespace knotcode {

enum class TwistSide { left, right };

/// Reidemeister I: put a small kink into edge `e` with its loop on the given
/// side of the strand. first_over chooses whether the strand passes over or
/// under on its first pass through the new crossing. Edge e keeps its id up
/// to the new crossing; the loop is edge 2n and the rest of e is edge 2n+1.
Diagram r1_add(const Diagram& d, EdgeId e, TwistSide side, bool first_over = false);
/// Same, on the first edge of an arc.
Diagram r1_add_on_arc(const Diagram& d, ArcId a, TwistSide side, bool first_over = false);

/// Crossings removable by inverse Reidemeister I (one edge leaves and re-enters them).
std::vector<std::size_t> r1_candidates(const Diagram& d);
/// Throws std::invalid_argument if `crossing` is not a kink.
Diagram r1_remove(const Diagram& d, std::size_t crossing);

/// Reidemeister II: push a finger of edge a.edge across edge b.edge through
/// the region named by both tokens (a.side of a.edge, b.side of b.edge).
/// a_over puts the finger over the other strand. The two new crossings are
/// appended as crossings n and n+1. Throws std::invalid_argument if the
/// tokens are not on one region or name the same edge.
Diagram r2_add(const Diagram& d, EdgeSide a, EdgeSide b, bool a_over);
/// Same, choosing the first edges of arcs a and b that border `region`.
Diagram r2_add_on_arcs(const Diagram& d, ArcId a, ArcId b, RegionId region, bool a_over);

/// Crossing pairs bounding a bigon where one strand is over at both corners.
std::vector<std::pair<std::size_t, std::size_t>> r2_candidates(const Diagram& d);
/// Throws std::invalid_argument if the pair is not such a bigon.
Diagram r2_remove(const Diagram& d, std::size_t c1, std::size_t c2);

/// Drop a set of crossings whose removal is a legal simplification and renumber.
/// The remaining crossings keep their relative order; merged edges take the
/// rank of their smallest old id.
Diagram remove_crossings(const Diagram& d, const std::vector<std::size_t>& doomed);

}  // namespace knotcode
