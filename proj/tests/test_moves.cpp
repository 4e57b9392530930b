#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "rgraph/diagram.hpp"
#include "rgraph/json_io.hpp"
#include "rgraph/moves.hpp"

using namespace rgraph;

namespace {

std::map<MoveKind, std::size_t> count_by_kind(const std::vector<MoveSite>& v) {
  std::map<MoveKind, std::size_t> out;
  for (const auto& m : v) ++out[m.kind];
  return out;
}

const MoveSite* find_kind(const std::vector<MoveSite>& v, MoveKind k) {
  for (const auto& m : v)
    if (m.kind == k) return &m;
  return nullptr;
}

Diagram fold_of(const Diagram& d) {
  const auto sites = enumerate_moves(d);
  const MoveSite* m = find_kind(sites, MoveKind::RTplus);
  REQUIRE(m != nullptr);
  return apply_move(d, *m);
}

bool same_site(const MoveSite& a, const MoveSite& b) {
  return a.kind == b.kind && a.sign == b.sign && a.loc == b.loc &&
         a.outer_half == b.outer_half;
}

std::vector<std::uint32_t> sorted_face_sizes(const Diagram& d) {
  std::vector<std::uint32_t> sizes;
  for (const auto& face : faces(d).faces)
    sizes.push_back(static_cast<std::uint32_t>(face.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Diagram changed_trefoil(Mode m = Mode::Sphere) {
  Diagram d = torus2(3, m);
  d.over[0] ^= 1u;
  return d;
}

std::vector<Diagram> move_corpus() {
  std::vector<Diagram> out;
  out.push_back(unknot(Mode::Sphere));
  out.push_back(unknot(Mode::Planar));
  out.push_back(torus2(1));
  out.push_back(torus2(1, Mode::Planar));
  out.push_back(torus2(3));
  out.push_back(torus2(3, Mode::Planar));
  out.push_back(twist_knot(2));
  out.push_back(changed_trefoil());
  out.push_back(changed_trefoil(Mode::Planar));
  out.push_back(fold_of(unknot(Mode::Sphere)));
  out.push_back(fold_of(unknot(Mode::Planar)));
  out.push_back(fold_of(torus2(3)));
  return out;
}

}  // namespace

TEST_CASE("kind names and crossing deltas") {
  const std::vector<MoveKind> all{
      MoveKind::R1plus,  MoveKind::R1minus, MoveKind::R2plus, MoveKind::RTplus,
      MoveKind::R2minus, MoveKind::RTminus, MoveKind::R3};
  for (MoveKind k : all) CHECK(kind_from_name(kind_name(k)) == k);
  CHECK(delta_crossings(MoveKind::R1plus) == 1);
  CHECK(delta_crossings(MoveKind::R1minus) == -1);
  CHECK(delta_crossings(MoveKind::R2plus) == 2);
  CHECK(delta_crossings(MoveKind::RTplus) == 2);
  CHECK(delta_crossings(MoveKind::R2minus) == -2);
  CHECK(delta_crossings(MoveKind::RTminus) == -2);
  CHECK(delta_crossings(MoveKind::R3) == 0);
  CHECK_THROWS((void)kind_from_name("nonsense"));
}

TEST_CASE("crossingless sphere unknot has exactly three sites") {
  const auto sites = enumerate_moves(unknot(Mode::Sphere));
  REQUIRE(sites.size() == 3);
  const auto counts = count_by_kind(sites);
  CHECK(counts.at(MoveKind::R1plus) == 2);
  CHECK(counts.at(MoveKind::RTplus) == 1);
  std::set<int> kink_signs;
  for (const auto& m : sites) {
    CHECK(m.loc[0] == kNoDart);
    if (m.kind == MoveKind::R1plus) kink_signs.insert(m.sign);
  }
  CHECK(kink_signs == std::set<int>{-1, 1});
}

TEST_CASE("crossingless planar unknot has exactly eight sites") {
  const auto sites = enumerate_moves(unknot(Mode::Planar));
  REQUIRE(sites.size() == 8);
  const auto counts = count_by_kind(sites);
  CHECK(counts.at(MoveKind::R1plus) == 4);
  CHECK(counts.at(MoveKind::RTplus) == 4);
  std::set<std::tuple<int, int, bool>> combos;
  for (const auto& m : sites)
    combos.insert({static_cast<int>(m.kind), m.sign, m.outer_half});
  CHECK(combos.size() == 8);  // sign x half x kind, all distinct
}

TEST_CASE("kinks on the unknot build the two curls") {
  const auto sites = enumerate_moves(unknot(Mode::Sphere));
  std::set<std::string> keys;
  for (const auto& m : sites) {
    if (m.kind != MoveKind::R1plus) continue;
    const Diagram t = apply_move(unknot(Mode::Sphere), m);
    CHECK(t.crossings() == 1);
    CHECK(crossing_sign(t, 0) == m.sign);
    keys.insert(canonical_key(t));
  }
  CHECK(keys.size() == 2);
  CHECK(keys.count(canonical_key(torus2(1))) == 1);
  CHECK(keys.count(canonical_key(mirror(torus2(1)))) == 1);
}

TEST_CASE("the fold of the unknot") {
  const Diagram t = fold_of(unknot(Mode::Sphere));
  CHECK(t.crossings() == 2);
  CHECK(writhe(t) == 0);  // the two fold crossings have opposite signs
  CHECK(sorted_face_sizes(t) == std::vector<std::uint32_t>{1, 1, 2, 4});
  CHECK(is_isotopic(t, mirror(t)));

  const auto census = tentacle_census(t);
  CHECK(census.p1 == 2);
  CHECK(census.heights == std::map<std::uint32_t, std::uint64_t>{{1, 1}});
  CHECK(census.n_of_d == 3);
  CHECK(census.near_misses == 0);

  const auto counts = count_by_kind(enumerate_moves(t));
  CHECK(counts.at(MoveKind::R1minus) == 2);
  CHECK(counts.at(MoveKind::RTminus) == 1);
  CHECK(counts.count(MoveKind::R2minus) == 0);
  CHECK(counts.count(MoveKind::R3) == 0);
}

TEST_CASE("census of basic diagrams") {
  const auto curl = tentacle_census(torus2(1));
  CHECK(curl.p1 == 2);
  CHECK(curl.heights.empty());
  CHECK(curl.n_of_d == 2);
  CHECK(curl.near_misses == 0);

  const auto tre = tentacle_census(torus2(3));
  CHECK(tre.p1 == 0);
  CHECK(tre.n_of_d == 0);

  // A fold on a tentacle-free dart adds a kink face and a height-1 tower.
  const auto folded = tentacle_census(fold_of(torus2(3)));
  CHECK(folded.p1 == 1);
  CHECK(folded.heights == std::map<std::uint32_t, std::uint64_t>{{1, 1}});
  CHECK(folded.n_of_d == 2);
}

TEST_CASE("hardness detection") {
  CHECK(is_hard(unknot(Mode::Sphere)));
  CHECK(is_hard(torus2(3)));
  CHECK_FALSE(is_hard(torus2(1)));
  CHECK_FALSE(is_hard(fold_of(unknot(Mode::Sphere))));
  CHECK_FALSE(is_hard(changed_trefoil()));
}

TEST_CASE("trefoil enumeration breakdown") {
  const auto counts = count_by_kind(enumerate_moves(torus2(3)));
  CHECK(counts.at(MoveKind::R1plus) == 24);
  CHECK(counts.at(MoveKind::RTplus) == 24);
  CHECK(counts.at(MoveKind::R2plus) == 18);
  CHECK(counts.count(MoveKind::R1minus) == 0);
  CHECK(counts.count(MoveKind::R2minus) == 0);
  CHECK(counts.count(MoveKind::R3) == 0);

  // Changing one crossing opens two strand-over-strand bigons and makes
  // both trigons slidable.
  const auto changed = count_by_kind(enumerate_moves(changed_trefoil()));
  CHECK(changed.at(MoveKind::R1plus) == 24);
  CHECK(changed.at(MoveKind::RTplus) == 24);
  CHECK(changed.at(MoveKind::R2plus) == 18);
  CHECK(changed.at(MoveKind::R2minus) == 2);
  CHECK(changed.at(MoveKind::R3) == 2);
}

TEST_CASE("planar enumeration excludes the outer polygon and doubles pushes") {
  const Diagram t = torus2(3, Mode::Planar);
  const auto counts = count_by_kind(enumerate_moves(t));
  const std::uint32_t k = pk_vector(t).k_ext;
  CHECK(counts.at(MoveKind::R1plus) == 24);
  CHECK(counts.at(MoveKind::RTplus) == 24);
  CHECK(counts.at(MoveKind::R2plus) == 18 + k * (k - 1));

  const Diagram c = changed_trefoil(Mode::Planar);
  const Faces f = faces(c);
  std::size_t internal_trigons_expected = 0;
  // Both trigons are slidable on the sphere; planar mode drops the outer one.
  for (std::size_t i = 0; i < f.faces.size(); ++i)
    if (f.faces[i].size() == 3 && i != f.outer_face)
      ++internal_trigons_expected;
  const auto cc = count_by_kind(enumerate_moves(c));
  const std::size_t got_r3 = cc.count(MoveKind::R3) ? cc.at(MoveKind::R3) : 0;
  CHECK(got_r3 == internal_trigons_expected);
}

TEST_CASE("every enumerated move applies, validates, and undoes") {
  for (const Diagram& d : move_corpus()) {
    const std::string key = canonical_key(d);
    const auto sites = enumerate_moves(d);
    for (const auto& m : sites) {
      const std::string kn = kind_name(m.kind);
      CAPTURE(kn);
      CAPTURE(d.crossings());
      CAPTURE(m.sign);
      CAPTURE(m.loc[0]);
      CAPTURE(m.loc[1]);
      CAPTURE(m.outer_half);
      const Diagram t = apply_move(d, m);
      REQUIRE(validate(t).ok);
      CHECK(t.mode == d.mode);
      CHECK(static_cast<int>(t.crossings()) ==
            static_cast<int>(d.crossings()) + delta_crossings(m.kind));

      const MoveSite rev = reverse_site(d, m, t);
      CHECK(delta_crossings(rev.kind) == -delta_crossings(m.kind));
      const auto tsites = enumerate_moves(t);
      bool found = false;
      for (const auto& s : tsites)
        if (same_site(s, rev)) {
          found = true;
          break;
        }
      CHECK(found);
      const Diagram back = apply_move(t, rev);
      CHECK(canonical_key(back) == key);
    }
  }
}

TEST_CASE("kink sites report post-move region sizes") {
  for (const Diagram& d : {torus2(3), fold_of(unknot(Mode::Sphere))}) {
    const Dart base = static_cast<Dart>(d.darts());
    for (const auto& m : enumerate_moves(d)) {
      if (m.kind != MoveKind::R1plus && m.kind != MoveKind::RTplus) continue;
      const Diagram t = apply_move(d, m);
      const Faces f = faces(t);
      auto size_of = [&](Dart x) {
        return static_cast<std::uint32_t>(f.faces[f.face_of[x]].size());
      };
      CHECK(m.regions[0] == size_of(base + 1));
      CHECK(m.regions[1] == size_of(base + 0));
      if (m.kind == MoveKind::R1plus) {
        CHECK(size_of(base + 2) == 1);
      } else {
        CHECK(size_of(base + 6) == 1);  // tip
        CHECK(size_of(base + 2) == 2);  // pocket
      }
    }
  }
}

TEST_CASE("push sites report post-move region sizes") {
  for (const Diagram& d : {torus2(3), fold_of(unknot(Mode::Sphere))}) {
    const Dart base = static_cast<Dart>(d.darts());
    for (const auto& m : enumerate_moves(d)) {
      if (m.kind != MoveKind::R2plus) continue;
      CAPTURE(m.loc[0]);
      CAPTURE(m.loc[1]);
      const Diagram t = apply_move(d, m);
      const Faces f = faces(t);
      auto size_of = [&](Dart x) {
        return static_cast<std::uint32_t>(f.faces[f.face_of[x]].size());
      };
      CHECK(size_of(base + 1) == 2);  // the new lens
      // The far side of each pushed arc is the face of its theta partner.
      CHECK(m.regions[0] == size_of(d.theta[m.loc[0]]));
      CHECK(m.regions[3] == size_of(d.theta[m.loc[1]]));
      const std::multiset<std::uint32_t> pieces{m.regions[1], m.regions[2]};
      const std::multiset<std::uint32_t> got{size_of(m.loc[0]),
                                             size_of(m.loc[1])};
      CHECK(pieces == got);
    }
  }
}

TEST_CASE("slides preserve the face census") {
  const Diagram d = changed_trefoil();
  for (const auto& m : enumerate_moves(d)) {
    if (m.kind != MoveKind::R3) continue;
    const Diagram t = apply_move(d, m);
    CHECK(t.crossings() == d.crossings());
    CHECK(pk_vector(t) == pk_vector(d));
    CHECK(writhe(t) == writhe(d));
  }
  const auto* r2 = find_kind(enumerate_moves(d), MoveKind::R2minus);
  REQUIRE(r2 != nullptr);
  CHECK(apply_move(d, *r2).crossings() == 1);
}

TEST_CASE("tentacle towers grow by pocket-creating pushes") {
  const Diagram t1 = fold_of(unknot(Mode::Sphere));
  CHECK(classify_tentacle(unknot(Mode::Sphere),
                          *find_kind(enumerate_moves(unknot(Mode::Sphere)),
                                     MoveKind::RTplus)));

  // Pushing the strand below the pocket adds a split-piece pocket plus the
  // new lens: the tower deepens by two.
  auto grow = [](const Diagram& d, std::uint32_t want_height) -> Diagram {
    for (const auto& m : enumerate_moves(d)) {
      if (m.kind != MoveKind::R2plus) continue;
      if (!classify_tentacle(d, m)) continue;
      const Diagram t = apply_move(d, m);
      const auto census = tentacle_census(t);
      auto it = census.heights.find(want_height);
      if (it != census.heights.end() && it->second == 1 &&
          census.heights.size() == 1)
        return t;
    }
    REQUIRE(false);
    return d;
  };

  const Diagram t3 = grow(t1, 3);
  const auto c3 = tentacle_census(t3);
  CHECK(c3.p1 == 2);
  CHECK(c3.n_of_d == 5);

  // Removing the tip kink lowers the tower by one: the even heights.
  auto shrink = [](const Diagram& d, std::uint32_t want_height) -> Diagram {
    for (const auto& m : enumerate_moves(d)) {
      if (m.kind != MoveKind::R1minus) continue;
      const Diagram t = apply_move(d, m);
      const auto census = tentacle_census(t);
      auto it = census.heights.find(want_height);
      if (it != census.heights.end() && it->second == 1 &&
          census.heights.size() == 1)
        return t;
    }
    REQUIRE(false);
    return d;
  };

  const Diagram t2 = shrink(t3, 2);
  const auto c2 = tentacle_census(t2);
  CHECK(t2.crossings() == 3);
  CHECK(c2.p1 == 2);
  CHECK(c2.n_of_d == 4);

  // Not every push on the fold makes a tentacle pocket.
  bool some_false = false;
  for (const auto& m : enumerate_moves(t1))
    if (m.kind == MoveKind::R2plus && !classify_tentacle(t1, m))
      some_false = true;
  CHECK(some_false);

  // Pushes on the trefoil never do: there is no kink face to top a tower.
  for (const auto& m : enumerate_moves(torus2(3)))
    if (m.kind == MoveKind::R2plus)
      CHECK_FALSE(classify_tentacle(torus2(3), m));
}

TEST_CASE("classification outside the pair taxonomy throws") {
  const Diagram d = torus2(3);
  const auto sites = enumerate_moves(d);
  const auto* kink = find_kind(sites, MoveKind::R1plus);
  REQUIRE(kink != nullptr);
  CHECK_THROWS_AS((void)classify_tentacle(d, *kink), unsupported_operation);
}

TEST_CASE("stale and invalid sites are rejected") {
  const Diagram d = torus2(3);
  const auto sites = enumerate_moves(d);
  REQUIRE(!sites.empty());
  CHECK_THROWS_AS((void)apply_move(twist_knot(2), sites.front()), stale_site);

  MoveSite bad;
  bad.kind = MoveKind::R1minus;
  bad.loc = {0, kNoDart, kNoDart};
  bad.source = fingerprint(d);
  CHECK_THROWS_AS((void)apply_move(d, bad), invalid_diagram);

  bad.kind = MoveKind::R2minus;
  bad.loc = {0, 5, kNoDart};
  CHECK_THROWS_AS((void)apply_move(d, bad), invalid_diagram);

  bad.kind = MoveKind::R3;
  bad.loc = {0, 1, 2};
  CHECK_THROWS_AS((void)apply_move(d, bad), invalid_diagram);
}

TEST_CASE("move records round trip through json") {
  for (const Diagram& d : {torus2(3), unknot(Mode::Sphere)}) {
    for (const auto& m : enumerate_moves(d)) {
      const MoveSite back = site_from_json(site_to_json(m));
      CHECK(back.kind == m.kind);
      CHECK(back.sign == m.sign);
      CHECK(back.over_choice == m.over_choice);
      CHECK(back.matched == m.matched);
      CHECK(back.outer_half == m.outer_half);
      CHECK(back.loc == m.loc);
      CHECK(back.regions == m.regions);
      CHECK(back.source == m.source);
    }
  }
}
