#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcode {

using EdgeId = std::uint32_t;
using ArcId = std::uint32_t;
using RegionId = std::uint32_t;

enum class Side : std::uint8_t { left = 0, right = 1 };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

/// One side of an oriented edge; names the region lying there.
struct EdgeSide {
  EdgeId edge = 0;
  Side side = Side::left;
  friend auto operator<=>(const EdgeSide&, const EdgeSide&) = default;
};

/// A crossing: the under strand runs under_in -> under_out, the over strand
/// over_in -> over_out. sign is +1 when the under direction is the over
/// direction turned a quarter counterclockwise.
///
/// Counterclockwise order of the four edge ends:
///   sign +1: under_in, over_out, under_out, over_in
///   sign -1: under_in, over_in, under_out, over_out
/// An edge may appear twice at one crossing (the loop of a Reidemeister I twist).
struct Crossing {
  EdgeId under_in = 0;
  EdgeId under_out = 0;
  EdgeId over_in = 0;
  EdgeId over_out = 0;
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented single-component knot diagram. Edges are dense 0..2n-1; each
/// edge leaves one crossing (out slot) and enters one (in slot). `outer` names
/// the unbounded region. The 0-crossing unknot has one virtual edge 0 and its
/// unbounded region is on the right of it.
struct Diagram {
  std::vector<Crossing> crossings;
  EdgeSide outer{0, Side::left};

  std::size_t n() const { return crossings.size(); }
  std::size_t edge_count() const { return 2 * crossings.size(); }
  bool is_trivial() const { return crossings.empty(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram unknot_diagram();

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::size_t arc_count = 0;
  std::size_t region_count = 0;
};

ValidationReport validate_diagram(const Diagram& d);
/// Throws InvalidDiagram naming the first violation.
void require_valid(const Diagram& d);

/// Where each edge starts and ends.
struct EdgeEnds {
  std::vector<std::size_t> tail;  // crossing the edge leaves
  std::vector<std::size_t> head;  // crossing the edge enters
  std::vector<bool> tail_over;    // edge leaves as the over strand
  std::vector<bool> head_over;    // edge enters as the over strand
};
EdgeEnds edge_ends(const Diagram& d);

struct ArcMap {
  std::vector<ArcId> of_edge;
  std::size_t count = 0;
  /// Smallest edge of each arc.
  std::vector<EdgeId> first_edge;
};
/// Arcs numbered by their smallest edge.
ArcMap arcs(const Diagram& d);

struct RegionMap {
  std::vector<RegionId> left;   // region on the left of each edge
  std::vector<RegionId> right;  // region on the right of each edge
  std::size_t count = 0;
  RegionId outer = 0;
  /// Boundary tokens of each region in tracing order.
  std::vector<std::vector<EdgeSide>> boundary;
  RegionId at(EdgeSide s) const { return s.side == Side::left ? left[s.edge] : right[s.edge]; }
};
/// Faces from the rotation system, numbered in tracing order (edge 0 left
/// first). Does not check the face count; see validate_diagram.
RegionMap regions(const Diagram& d);

/// Index of every region: the unbounded one is 0, and stepping across a strand
/// from its left side to its right side lowers the index by one.
std::vector<std::int64_t> region_index(const Diagram& d);

enum class Shade : std::uint8_t { white = 0, black = 1 };
/// Proper 2-coloring of regions with the unbounded region white.
std::vector<Shade> checkerboard(const Diagram& d);

/// One pass through a crossing while walking the knot.
struct Visit {
  EdgeId in_edge = 0;
  std::size_t crossing = 0;
  bool over = false;
};
/// Visits in knot order starting with the head of edge `start`.
std::vector<Visit> traversal(const Diagram& d, EdgeId start = 0);

/// Build a diagram from a visit sequence: visit j enters through edge j and
/// leaves through edge j+1 (mod length). `signs` is indexed by crossing.
Diagram diagram_from_visits(const std::vector<std::pair<std::size_t, bool>>& visits,
                            const std::vector<int>& signs, EdgeSide outer);

/// Canonical relabeling: edges renumbered along the knot from the start that
/// gives the lexicographically smallest result; crossings ordered by first
/// visit; outer marker replaced by the smallest token of its region.
Diagram canonical_form(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

/// Mirror image: every crossing switches over and under.
Diagram mirror(const Diagram& d);

}  // namespace knotcode
