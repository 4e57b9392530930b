#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "rgraph/diagram.hpp"
#include "test_support.hpp"

using namespace rgraph;
using testsupport::brute_automorphisms;
using testsupport::random_relabel;

namespace {

void check_face_properties(const Diagram& d) {
  const Faces f = faces(d);
  std::vector<char> seen(d.darts(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < f.faces.size(); ++i) {
    const auto& orbit = f.faces[i];
    total += orbit.size();
    if (!orbit.empty())
      CHECK(orbit.front() == *std::min_element(orbit.begin(), orbit.end()));
    for (Dart x : orbit) {
      REQUIRE(x < d.darts());
      CHECK(!seen[x]);
      seen[x] = 1;
      CHECK(f.face_of[x] == i);
    }
  }
  CHECK(total == d.darts());
  if (!d.crossingless()) {
    CHECK(f.faces.size() == d.crossings() + 2);
    for (Dart x = 0; x < d.darts(); ++x)
      CHECK(f.face_of[Diagram::sigma(d.theta[x])] == f.face_of[x]);
  }
  if (d.mode == Mode::Planar && !d.crossingless())
    CHECK(f.outer_face == f.face_of[d.outer]);
}

std::vector<std::uint32_t> sorted_face_sizes(const Diagram& d) {
  std::vector<std::uint32_t> sizes;
  for (const auto& face : faces(d).faces)
    sizes.push_back(static_cast<std::uint32_t>(face.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Diagram> small_corpus() {
  std::vector<Diagram> out;
  out.push_back(torus2(1));
  out.push_back(torus2(3));
  out.push_back(torus2(5));
  out.push_back(torus2(7));
  out.push_back(twist_knot(1));
  out.push_back(twist_knot(2));
  out.push_back(twist_knot(3));
  out.push_back(torus2(1, Mode::Planar));
  out.push_back(torus2(3, Mode::Planar));
  out.push_back(twist_knot(2, Mode::Planar));
  return out;
}

}  // namespace

TEST_CASE("crossingless unknot basics") {
  const Diagram s = unknot(Mode::Sphere);
  const Diagram p = unknot(Mode::Planar);
  CHECK(validate(s).ok);
  CHECK(validate(p).ok);
  CHECK(s.crossingless());
  CHECK(canonical_key(s) == "O:S");
  CHECK(canonical_key(p) == "O:P");
  CHECK(pk_vector(s).at(0) == 2);
  CHECK(faces(s).faces.size() == 2);
  CHECK(faces(p).outer_face == 0);
  CHECK(writhe(s) == 0);
  CHECK_THROWS_AS((void)symmetry(s), unsupported_operation);
  CHECK_FALSE(is_isotopic(s, torus2(1)));
  CHECK_THROWS_AS((void)is_isotopic(s, p), mode_mismatch);
}

TEST_CASE("builders validate and have the right sizes") {
  for (const auto& d : small_corpus()) {
    const auto rep = validate(d);
    CAPTURE(rep.errors.empty() ? std::string("ok") : rep.errors.front());
    CHECK(rep.ok);
    check_face_properties(d);
  }
  CHECK(torus2(3).crossings() == 3);
  CHECK(twist_knot(1).crossings() == 3);
  CHECK(twist_knot(2).crossings() == 4);
  CHECK(twist_knot(15).crossings() == 17);
  CHECK_THROWS_AS((void)torus2(2), std::invalid_argument);
  CHECK_THROWS_AS((void)torus2(0), std::invalid_argument);
  CHECK_THROWS_AS((void)twist_knot(0), std::invalid_argument);
}

TEST_CASE("one-crossing curl invariants") {
  const Diagram c = torus2(1);
  CHECK(c.crossings() == 1);
  CHECK(sorted_face_sizes(c) == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(crossing_sign(c, 0) == 1);
  CHECK(writhe(c) == 1);
  CHECK(symmetry(c).aut_plus_order == 2);
  CHECK(writhe(mirror(c)) == -1);
  CHECK_FALSE(is_isotopic(c, mirror(c)));
}

TEST_CASE("trefoil invariants") {
  const Diagram t = torus2(3);
  const PkVector pk = pk_vector(t);
  CHECK(pk.at(2) == 3);
  CHECK(pk.at(3) == 2);
  CHECK(sorted_face_sizes(t) == std::vector<std::uint32_t>{2, 2, 2, 3, 3});
  CHECK(symmetry(t).aut_plus_order == 6);
  CHECK(symmetry(t).period == 6);
  const int w = writhe(t);
  CHECK(std::abs(w) == 3);
  CHECK(w == 3 * crossing_sign(t, 0));
  CHECK_FALSE(is_isotopic(t, mirror(t)));
  CHECK(is_isotopic(mirror(mirror(t)), t));
}

TEST_CASE("planar trefoil stabilizers depend on the outer face") {
  // Rotations fixing a 3-gon give order 3; fixing a 2-gon gives order 2.
  Diagram t = torus2(3, Mode::Planar);
  const Faces f = faces(torus2(3));
  std::set<std::uint64_t> orders;
  std::set<std::string> keys;
  for (const auto& face : f.faces) {
    Diagram v = t;
    v.outer = face.front();
    normalize_outer(v);
    REQUIRE(validate(v).ok);
    orders.insert(symmetry(v).aut_plus_order);
    keys.insert(canonical_key(v));
  }
  CHECK(orders == std::set<std::uint64_t>{2, 3});
  // One class per face-size class under the symmetry group: the 2-gons are
  // one orbit, the 3-gons another.
  CHECK(keys.size() == 2);
}

TEST_CASE("canonical key is a relabelling invariant") {
  std::mt19937_64 rng(20260816u);
  for (const auto& d : small_corpus()) {
    const std::string k = canonical_key(d);
    for (int i = 0; i < 5; ++i) {
      const Diagram r = random_relabel(d, rng);
      REQUIRE(validate(r).ok);
      CHECK(canonical_key(r) == k);
      CHECK(is_isotopic(r, d));
    }
  }
}

TEST_CASE("distinct knots get distinct keys") {
  std::set<std::string> keys;
  keys.insert(canonical_key(unknot(Mode::Sphere)));
  keys.insert(canonical_key(torus2(1)));
  keys.insert(canonical_key(mirror(torus2(1))));
  keys.insert(canonical_key(torus2(3)));
  keys.insert(canonical_key(mirror(torus2(3))));
  keys.insert(canonical_key(torus2(5)));
  keys.insert(canonical_key(twist_knot(2)));
  keys.insert(canonical_key(twist_knot(3)));
  CHECK(keys.size() == 8);
}

TEST_CASE("automorphism group matches a brute-force search") {
  for (const auto& d : small_corpus()) {
    if (d.crossingless()) continue;
    auto got = canonical_form(d).automorphisms;
    auto want = brute_automorphisms(d);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CAPTURE(d.crossings());
    CHECK(got == want);
    CHECK(symmetry(d).aut_plus_order == want.size());
  }
}

TEST_CASE("alignment marks every dart exactly once per direction") {
  for (const auto& d : small_corpus()) {
    const auto aligned = alignment(d);
    // Each edge {x, theta(x)} is traversed once; exactly one of its two
    // darts is the outgoing one at its crossing... per passage: each
    // crossing has two outgoing and two incoming darts.
    for (std::uint32_t c = 0; c < d.crossings(); ++c) {
      int outgoing = 0;
      for (std::uint32_t p = 0; p < 4; ++p) outgoing += aligned[4 * c + p];
      CHECK(outgoing == 2);
    }
    for (Dart x = 0; x < d.darts(); ++x) {
      // One end of each arc is outgoing, the other incoming.
      CHECK(static_cast<int>(aligned[x]) + aligned[d.theta[x]] == 1);
    }
  }
}

TEST_CASE("crossing signs are orientation independent") {
  const Diagram t = twist_knot(2);
  for (std::uint32_t c = 0; c < t.crossings(); ++c) {
    const int s = crossing_sign(t, c);
    CHECK((s == 1 || s == -1));
  }
  CHECK(writhe(mirror(t)) == -writhe(t));
}

TEST_CASE("double occurrence realisation builds a trefoil") {
  const std::vector<std::pair<std::uint32_t, bool>> word{
      {0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}};
  const Diagram d = from_double_occurrence(word);
  REQUIRE(validate(d).ok);
  CHECK(d.crossings() == 3);
  const bool plus = is_isotopic(d, torus2(3));
  const bool minus = is_isotopic(d, mirror(torus2(3)));
  CHECK((plus || minus));
}

TEST_CASE("validation rejects malformed data") {
  Diagram d = torus2(3);
  Diagram broken = d;
  broken.theta[0] = 0;  // fixed point
  CHECK_FALSE(validate(broken).ok);
  CHECK_THROWS_AS(require_valid(broken), invalid_diagram);

  broken = d;
  broken.theta[0] = broken.theta[1];  // not an involution
  CHECK_FALSE(validate(broken).ok);

  broken = d;
  broken.over.pop_back();
  CHECK_FALSE(validate(broken).ok);

  broken = d;
  broken.mode = Mode::Planar;  // planar needs an outer dart
  CHECK_FALSE(validate(broken).ok);
}

TEST_CASE("fingerprint tracks structural identity") {
  const Diagram a = torus2(3);
  Diagram b = a;
  CHECK(fingerprint(a) == fingerprint(b));
  b.over[0] ^= 1u;
  CHECK(fingerprint(a) != fingerprint(b));
  CHECK(fingerprint(torus2(3)) != fingerprint(torus2(3, Mode::Planar)));
}
