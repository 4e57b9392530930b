#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgraph/graph.hpp"

namespace rgraph {

// Same diagram with the over/under passage at crossing c flipped.
Diagram crossing_change(const Diagram& d, std::uint32_t c);

// Valence in the graph enriched with crossing-change edges: v(d) plus the
// number of symmetry orbits of crossings.
std::uint64_t blown_valence(const Diagram& d);

struct GBallEdge {
  std::uint32_t a = 0, b = 0;
  bool crossing_change = false;
  MoveKind kind = MoveKind::R1plus;  // meaningful when !crossing_change
  std::uint32_t multiplicity = 1;
};

struct GordianBall {
  Mode mode = Mode::Sphere;
  std::string center;
  std::uint32_t radius = 0;
  std::vector<BallNode> nodes;
  std::vector<GBallEdge> edges;
  bool truncated = false;
};

GordianBall gordian_ball(const Diagram& seed, std::uint32_t radius,
                         const BallBudget& budget = {});

struct MixedTriangleReport {
  std::uint64_t triangles = 0;        // triangles with a crossing-change edge
  std::uint64_t kink_kink_change = 0; // two kink edges closing over a change
  std::uint64_t other = 0;            // logged, not failed
  std::vector<std::string> notes;
};

MixedTriangleReport mixed_triangles(const GordianBall& b);

// Whether key -> mirror-key is an automorphism of the ball: a bijection on
// nodes preserving edges, kinds and multiplicities.
bool mirror_is_automorphism(const GordianBall& b);

}  // namespace rgraph
