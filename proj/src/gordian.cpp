#include "rgraph/gordian.hpp"

namespace rgraph {

Diagram crossing_change(const Diagram& d, std::uint32_t c) {
  if (c >= d.crossings())
    throw invalid_diagram("crossing_change: no such crossing");
  Diagram r = d;
  r.over[c] ^= 1u;
  return r;
}

std::uint64_t blown_valence(const Diagram& d) {
  throw unsupported_operation("blown_valence: not implemented");
}

GordianBall gordian_ball(const Diagram& seed, std::uint32_t radius,
                         const BallBudget& budget) {
  (void)seed;
  (void)radius;
  (void)budget;
  throw unsupported_operation("gordian_ball: not implemented");
}

MixedTriangleReport mixed_triangles(const GordianBall& b) {
  (void)b;
  throw unsupported_operation("mixed_triangles: not implemented");
}

bool mirror_is_automorphism(const GordianBall& b) {
  (void)b;
  throw unsupported_operation("mirror_is_automorphism: not implemented");
}

}  // namespace rgraph
