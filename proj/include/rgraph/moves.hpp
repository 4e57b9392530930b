#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rgraph/diagram.hpp"

namespace rgraph {

enum class MoveKind : std::uint8_t {
  R1plus,   // add a kink
  R1minus,  // remove a kink
  R2plus,   // push one strand over another across a face
  RTplus,   // self-fold: the tentacle-creating R2plus
  R2minus,  // pull two strands apart at a bigon
  RTminus,  // remove a tentacle pocket: the tentacle R2minus
  R3,       // slide a strand across a crossing (triangle flip)
};

const char* kind_name(MoveKind k);
MoveKind kind_from_name(const std::string& name);
int delta_crossings(MoveKind k);

// One applicable move, anchored to the exact dart labelling of the diagram it
// was enumerated on (source fingerprint guards against stale reuse).
//
// loc per kind: R1plus/RTplus {attachment dart}; R1minus {the 1-gon dart};
// R2plus {over dart, under dart}; R2minus/RTminus {the two bigon darts};
// R3 {the three trigon darts, sorted}.  Crossingless-unknot sites use kNoDart.
// regions holds the post-move sizes of the touched faces: R1plus/RTplus
// {a, b}; R2plus {a, b, c, d} with b, c the two split pieces of the common
// face; other kinds leave it zero.
struct MoveSite {
  MoveKind kind = MoveKind::R1plus;
  int sign = 0;
  bool over_choice = false;  // R2plus/R2minus: loc[0] strand is the over one
  std::array<Dart, 3> loc = {kNoDart, kNoDart, kNoDart};
  bool matched = false;      // R2 kinds: strands run parallel along the face
  bool outer_half = false;   // planar: move routed through the outer region
  std::array<std::uint32_t, 4> regions = {0, 0, 0, 0};
  std::uint64_t source = 0;
};

// Tentacle census.  A tentacle of height h is a chain of h+1 crossings: a tip
// carrying a 1-gon plus h pocket bigons below it, consecutive crossing signs
// alternating and every pocket a removable bigon.  heights[h] counts maximal
// tentacles of height h >= 1 (a closed-up tower walked from both of its tips
// is one tentacle); near_misses counts chain walks stopped by a pocket-shaped
// bigon that fails the sign or removability condition.
struct TentacleCensus {
  std::map<std::uint32_t, std::uint64_t> heights;
  std::uint64_t p1 = 0;
  std::uint64_t n_of_d = 0;  // p1 + sum over h of h * heights[h]
  std::uint64_t near_misses = 0;
};

// Every applicable move site, in a deterministic order.  Planar mode skips
// decreasing and R3 sites whose active polygon is the outer face and doubles
// R2plus sites on the outer face via outer_half.
std::vector<MoveSite> enumerate_moves(const Diagram& d);

// Applies m to d.  Throws stale_site if m was enumerated on a different
// labelling, invalid_diagram if the site does not describe a legal move.
Diagram apply_move(const Diagram& d, const MoveSite& m);

// The site on target = apply_move(d, m) that undoes m.
MoveSite reverse_site(const Diagram& d, const MoveSite& m, const Diagram& target);

TentacleCensus tentacle_census(const Diagram& d);

// For R2plus: whether the move creates a tentacle pocket (its lens bigon is a
// pocket of a tentacle of the target).  For R2minus/RTminus: whether the
// destroyed bigon is a tentacle pocket of d.  RTplus sites are tentacle
// creating by construction.  Other kinds are outside the move-pair taxonomy.
bool classify_tentacle(const Diagram& d, const MoveSite& m);

// No decreasing move and no R3 available.
bool is_hard(const Diagram& d);

}  // namespace rgraph
