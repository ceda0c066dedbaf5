#pragma once

#include <string>
#include <vector>

#include "knotcode/diagram.hpp"

namespace knotcode {

/// "trefoil", "figure_eight" or "unknot". Throws std::invalid_argument otherwise.
Diagram builtin(const std::string& name);
std::vector<std::string> builtin_names();

struct TorusSpec {
  long a = 2;
  long b = 3;
};
/// Closure of the braid (s_1 ... s_{|a|-1})^|b|, mirrored when a*b < 0.
/// |b|(|a|-1) crossings; |a| = 1 gives the unknot. Throws on non-coprime input.
Diagram torus_diagram(const TorusSpec& s);

struct PretzelSpec {
  std::vector<long> twists;
};
/// Knot (rather than link) iff all entries and m are odd, or exactly one entry is even.
bool is_pretzel_knot(const PretzelSpec& s);
/// Side-by-side vertical twist boxes; a positive count puts the top-right strand over.
/// Throws std::invalid_argument for links or zero entries.
Diagram pretzel_diagram(const PretzelSpec& s);

/// Splice d2 into d1 at the first edges of the given arcs. d2's edges are
/// shifted by 2*n1 and its crossings appended after d1's.
Diagram connected_sum(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2);

/// Same splice at arbitrary edges. Which side of an over crossing the cut
/// falls on changes the resulting Fox matrix, not the knot.
Diagram connected_sum_at_edges(const Diagram& d1, EdgeId e1, const Diagram& d2, EdgeId e2);

}  // namespace knotcode
