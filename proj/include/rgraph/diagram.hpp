#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgraph {

// A dart is one of the four edge-ends around a crossing.  Dart d lives at
// crossing d >> 2 in counterclockwise position d & 3.  The vertex rotation
// sigma is therefore implicit; only the edge pairing theta is stored.
using Dart = std::uint32_t;
inline constexpr Dart kNoDart = 0xffffffffu;

enum class Mode : std::uint8_t { Sphere, Planar };

struct invalid_diagram : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct mode_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct stale_site : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_operation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Knot diagram as a 4-valent map.  theta is a fixed-point-free involution
// pairing darts into edges (arcs).  over[c] == 1 means the strand through
// positions {1,3} passes over at crossing c, over[c] == 0 means {0,2} does.
// Planar diagrams additionally remember which face is the outer one, via any
// dart on it (normalised to the smallest dart of that face orbit).
struct Diagram {
  std::vector<Dart> theta;
  std::vector<std::uint8_t> over;
  Mode mode = Mode::Sphere;
  Dart outer = kNoDart;

  std::size_t crossings() const { return over.size(); }
  std::size_t darts() const { return theta.size(); }
  bool crossingless() const { return theta.empty(); }

  static constexpr Dart sigma(Dart d) { return (d & ~3u) | ((d + 1) & 3u); }
  static constexpr Dart sigma_inv(Dart d) { return (d & ~3u) | ((d + 3) & 3u); }
  static constexpr Dart opp(Dart d) { return d ^ 2u; }
  static constexpr std::uint32_t crossing_of(Dart d) { return d >> 2; }
  static constexpr std::uint32_t pos_of(Dart d) { return d & 3u; }

  // True when the strand using dart d goes over at its crossing.
  bool over_flag(Dart d) const {
    return ((d & 1u) != 0) == (over[d >> 2] != 0);
  }

  bool operator==(const Diagram& o) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
};

// Face-size census.  counts[k] is the number of k-sided regions, outer face
// included; k_ext is the size of the outer region (0 in sphere mode).
struct PkVector {
  std::map<std::uint32_t, std::uint64_t> counts;
  std::uint32_t k_ext = 0;

  std::uint64_t at(std::uint32_t k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  bool operator==(const PkVector& o) const = default;
};

// Face decomposition.  Faces are orbits of phi(d) = sigma(theta(d)); the face
// of a dart is the region to the right when travelling d -> theta(d).
struct Faces {
  std::vector<std::vector<Dart>> faces;    // each orbit, starting at min dart
  std::vector<std::uint32_t> face_of;      // dart -> face index
  std::uint32_t outer_face = 0xffffffffu;  // index, planar only
};

// Canonical form of a diagram.  key is a byte string, equal for two diagrams
// exactly when they are isotopic (in the same mode).  to_canonical relabels
// darts into the canonical labelling; automorphisms lists every label
// preserving dart bijection (the orientation-preserving symmetry group).
struct CanonicalForm {
  std::string key;
  std::vector<Dart> to_canonical;
  std::vector<std::vector<Dart>> automorphisms;
  std::uint64_t period = 1;  // == automorphisms.size() when cr >= 1
};

struct SymmetryInfo {
  std::uint64_t aut_plus_order = 1;
  std::vector<std::vector<Dart>> generators;
  std::uint64_t period = 1;
};

ValidationReport validate(const Diagram& d);
void require_valid(const Diagram& d);  // throws invalid_diagram

Faces faces(const Diagram& d);
PkVector pk_vector(const Diagram& d);

// Crossing signs use the orientation induced by the traversal orbit of dart 0;
// the sign of a crossing does not depend on that choice.
int crossing_sign(const Diagram& d, std::uint32_t c);
int writhe(const Diagram& d);

// Marks the darts of the traversal orbit of dart 0.  aligned[x] says whether
// leaving along dart x follows the chosen orientation.
std::vector<std::uint8_t> alignment(const Diagram& d);

Diagram mirror(const Diagram& d);

CanonicalForm canonical_form(const Diagram& d);
std::string canonical_key(const Diagram& d);
bool is_isotopic(const Diagram& a, const Diagram& b);  // throws mode_mismatch
SymmetryInfo symmetry(const Diagram& d);  // cr >= 1 required

std::string key_hex(const std::string& key);

// Builders.
Diagram unknot(Mode m);
// Standard (2,q) torus closure, q odd >= 1; q == 1 is the one-crossing curl.
Diagram torus2(std::uint32_t q, Mode m = Mode::Sphere);
// Twist knot with n twist crossings plus a two-crossing clasp (n >= 1).
Diagram twist_knot(std::uint32_t n, Mode m = Mode::Sphere);
// Realises an alternating-style double occurrence code.  word[i] = {crossing,
// over?}; tries all crossing handedness assignments and returns the valid
// sphere diagram with the smallest canonical key.
Diagram from_double_occurrence(
    const std::vector<std::pair<std::uint32_t, bool>>& word);

// Normalises d.outer to the minimum dart of its face orbit (planar only).
void normalize_outer(Diagram& d);

// Cheap structural fingerprint used to detect stale move sites.
std::uint64_t fingerprint(const Diagram& d);

}  // namespace rgraph
