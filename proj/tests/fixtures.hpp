// Diagram sources shared by the test suites.
#pragma once

#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "knotcode/diagram.hpp"
#include "knotcode/generators.hpp"
#include "knotcode/reidemeister.hpp"

namespace fixture {

using knotcode::Diagram;

inline std::vector<std::pair<std::string, Diagram>> named_diagrams() {
  using namespace knotcode;
  return {
      {"trefoil", builtin("trefoil")},
      {"figure_eight", builtin("figure_eight")},
      {"T(2,5)", torus_diagram({2, 5})},
      {"T(2,7)", torus_diagram({2, 7})},
      {"T(3,4)", torus_diagram({3, 4})},
      {"T(3,5)", torus_diagram({3, 5})},
      {"T(-2,5)", torus_diagram({-2, 5})},
      {"P(3,3,3)", pretzel_diagram({{3, 3, 3}})},
      {"P(3,2,3,5)", pretzel_diagram({{3, 2, 3, 5}})},
      {"P(-3,5,7)", pretzel_diagram({{-3, 5, 7}})},
      {"trefoil#figure_eight", connected_sum(builtin("trefoil"), 0, builtin("figure_eight"), 0)},
  };
}

// One random Reidemeister I/II move (addition or, when possible, removal).
inline Diagram random_move(const Diagram& d, std::mt19937& rng) {
  using namespace knotcode;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int attempt = 0; attempt < 20; ++attempt) {
    switch (pick(d.n() > 8 ? 4 : 3)) {
      case 0: {
        const std::size_t edges = d.is_trivial() ? 1 : d.edge_count();
        return r1_add(d, static_cast<EdgeId>(pick(edges)), pick(2) ? TwistSide::left : TwistSide::right, pick(2) == 1);
      }
      case 1: {
        if (d.is_trivial()) continue;
        const RegionMap reg = regions(d);
        const auto& face = reg.boundary[pick(reg.count)];
        const EdgeSide a = face[pick(face.size())];
        const EdgeSide b = face[pick(face.size())];
        if (a.edge == b.edge) continue;
        return r2_add(d, a, b, pick(2) == 1);
      }
      default: {
        const auto r1 = r1_candidates(d);
        const auto r2 = r2_candidates(d);
        if (!r2.empty() && pick(2)) {
          const auto [x, y] = r2[pick(r2.size())];
          return r2_remove(d, x, y);
        }
        if (!r1.empty()) return r1_remove(d, r1[pick(r1.size())]);
        continue;
      }
    }
  }
  return d;
}

inline Diagram random_walk(Diagram d, std::mt19937& rng, int steps) {
  for (int i = 0; i < steps; ++i) d = random_move(d, rng);
  return d;
}

// A random generated knot: torus, pretzel or a built-in, possibly summed.
inline Diagram random_knot(std::mt19937& rng, std::size_t max_crossings = 12) {
  using namespace knotcode;
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  while (true) {
    Diagram d;
    switch (pick(0, 3)) {
      case 0: {
        const long a = pick(2, 4);
        const long b = pick(2, 7) * (pick(0, 1) ? 1 : -1);
        if (std::gcd(a, b < 0 ? -b : b) != 1) continue;
        d = torus_diagram({a, b});
        break;
      }
      case 1: {
        std::vector<long> tw;
        const long m = pick(0, 1) ? 3 : 5;
        for (long i = 0; i < m; ++i) tw.push_back((2 * pick(0, 2) + 1) * (pick(0, 3) ? 1 : -1));
        if (!is_pretzel_knot({tw})) continue;
        d = pretzel_diagram({tw});
        break;
      }
      case 2:
        d = builtin(pick(0, 1) ? "trefoil" : "figure_eight");
        break;
      default: {
        const Diagram a = builtin(pick(0, 1) ? "trefoil" : "figure_eight");
        const Diagram b = torus_diagram({2, pick(0, 1) ? 3 : 5});
        d = connected_sum(a, static_cast<ArcId>(pick(0, 2)), b, static_cast<ArcId>(pick(0, 2)));
        break;
      }
    }
    if (d.n() <= max_crossings) return d;
  }
}

}  // namespace fixture
