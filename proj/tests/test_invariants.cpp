#include "doctest.h"
#include "rgraph/invariants.hpp"

using namespace rgraph;

TEST_CASE("smoothing a curl links nothing") {
  CHECK(smooth_and_link(torus2(1), 0) == 0);
  CHECK(smooth_and_link(mirror(torus2(1)), 0) == 0);
}

TEST_CASE("trefoil smoothings all link once") {
  const Diagram t = torus2(3);
  const int expect = writhe(t) > 0 ? 1 : -1;
  for (std::uint32_t c = 0; c < 3; ++c) CHECK(smooth_and_link(t, c) == expect);
}

TEST_CASE("ilk of the basic diagrams") {
  IlkValue curl = ilk(torus2(1));
  CHECK(curl.xs == std::map<int, std::int64_t>{{0, 1}});
  CHECK(curl.ys.empty());

  IlkValue anti = ilk(mirror(torus2(1)));
  CHECK(anti.xs.empty());
  CHECK(anti.ys == std::map<int, std::int64_t>{{0, 1}});

  const Diagram t = torus2(3);
  IlkValue tre = ilk(t);
  if (writhe(t) > 0) {
    CHECK(tre.xs == std::map<int, std::int64_t>{{1, 3}});
    CHECK(tre.ys.empty());
  } else {
    CHECK(tre.ys == std::map<int, std::int64_t>{{-1, 3}});
    CHECK(tre.xs.empty());
  }
}

TEST_CASE("mirror swaps the two symbol families with negated indices") {
  for (const Diagram& d : {torus2(3), torus2(5), twist_knot(2), twist_knot(3)}) {
    const IlkValue a = ilk(d);
    const IlkValue b = ilk(mirror(d));
    std::map<int, std::int64_t> flipped_xs, flipped_ys;
    for (const auto& [k, v] : a.xs) flipped_ys[-k] = v;
    for (const auto& [k, v] : a.ys) flipped_xs[-k] = v;
    CHECK(b.xs == flipped_xs);
    CHECK(b.ys == flipped_ys);
  }
}

TEST_CASE("self-touch tuples of small diagrams") {
  CHECK(si_tuple(unknot(Mode::Sphere)) == SiTuple{0, 0});
  // Curl: only the two-sided face holds two corners of the crossing.
  CHECK(si_tuple(torus2(1)) == SiTuple{0, 0, 1});
  // Alternating trefoil: every face meets each crossing in one corner.
  CHECK(si_tuple(torus2(3)) == SiTuple{0, 0, 0, 0, 0});
}
