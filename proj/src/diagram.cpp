#include "rgraph/diagram.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

namespace rgraph {

namespace {

// Appends a 32-bit value big endian so byte strings compare like int tuples.
void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>((v >> 24) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

std::vector<Dart> face_orbit_of(const Diagram& d, Dart start) {
  std::vector<Dart> orbit;
  Dart x = start;
  do {
    orbit.push_back(x);
    x = Diagram::sigma(d.theta[x]);
  } while (x != start);
  return orbit;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.errors.push_back(std::move(msg));
  };

  const std::size_t nd = d.theta.size();
  if (nd != 4 * d.over.size()) {
    fail("dart count does not match crossing count");
    return rep;
  }
  if (d.crossingless()) {
    if (d.mode == Mode::Planar && d.outer != kNoDart)
      fail("crossingless planar diagram cannot name an outer dart");
    return rep;
  }

  for (Dart x = 0; x < nd; ++x) {
    if (d.theta[x] >= nd) {
      fail("theta value out of range");
      return rep;
    }
  }
  for (Dart x = 0; x < nd; ++x) {
    if (d.theta[x] == x) fail("theta has a fixed point at dart " + std::to_string(x));
    if (d.theta[d.theta[x]] != x) {
      fail("theta is not an involution at dart " + std::to_string(x));
      return rep;
    }
  }
  if (!rep.ok) return rep;

  // A knot (single curve) traverses its 2n arcs twice, once per direction:
  // the successor map opp(theta(x)) must have exactly two orbits, each of
  // length 2n.
  std::vector<std::uint8_t> seen(nd, 0);
  std::size_t orbits = 0;
  bool lengths_ok = true;
  for (Dart x = 0; x < nd; ++x) {
    if (seen[x]) continue;
    ++orbits;
    std::size_t len = 0;
    Dart y = x;
    do {
      seen[y] = 1;
      ++len;
      y = Diagram::opp(d.theta[y]);
    } while (y != x);
    if (len != nd / 2) lengths_ok = false;
  }
  if (orbits != 2 || !lengths_ok)
    fail("edge pairing does not trace a single closed curve");

  // Genus zero: exactly n + 2 face orbits.
  std::fill(seen.begin(), seen.end(), 0);
  std::size_t nfaces = 0;
  for (Dart x = 0; x < nd; ++x) {
    if (seen[x]) continue;
    ++nfaces;
    Dart y = x;
    do {
      seen[y] = 1;
      y = Diagram::sigma(d.theta[y]);
    } while (y != x);
  }
  if (nfaces != d.crossings() + 2)
    fail("face count is not n + 2; the diagram does not embed in the sphere");

  if (d.mode == Mode::Planar) {
    if (d.outer >= nd) fail("planar diagram needs a valid outer dart");
  } else if (d.outer != kNoDart) {
    fail("sphere diagram must not name an outer dart");
  }
  return rep;
}

void require_valid(const Diagram& d) {
  ValidationReport rep = validate(d);
  if (rep.ok) return;
  std::string msg = "invalid diagram:";
  for (const auto& e : rep.errors) msg += " " + e + ";";
  throw invalid_diagram(msg);
}

Faces faces(const Diagram& d) {
  Faces out;
  const std::size_t nd = d.theta.size();
  out.face_of.assign(nd, 0xffffffffu);
  if (d.crossingless()) {
    out.faces = {{}, {}};
    if (d.mode == Mode::Planar) out.outer_face = 0;
    return out;
  }
  for (Dart x = 0; x < nd; ++x) {
    if (out.face_of[x] != 0xffffffffu) continue;
    auto orbit = face_orbit_of(d, x);
    std::uint32_t idx = static_cast<std::uint32_t>(out.faces.size());
    for (Dart y : orbit) out.face_of[y] = idx;
    out.faces.push_back(std::move(orbit));
  }
  if (d.mode == Mode::Planar) out.outer_face = out.face_of[d.outer];
  return out;
}

PkVector pk_vector(const Diagram& d) {
  PkVector pk;
  Faces f = faces(d);
  for (const auto& face : f.faces)
    ++pk.counts[static_cast<std::uint32_t>(face.size())];
  if (d.mode == Mode::Planar && !d.crossingless())
    pk.k_ext = static_cast<std::uint32_t>(f.faces[f.outer_face].size());
  return pk;
}

std::vector<std::uint8_t> alignment(const Diagram& d) {
  std::vector<std::uint8_t> aligned(d.theta.size(), 0);
  if (d.crossingless()) return aligned;
  Dart x = 0;
  do {
    aligned[x] = 1;
    x = Diagram::opp(d.theta[x]);
  } while (x != 0);
  return aligned;
}

namespace {

int sign_from_alignment(const Diagram& d, const std::vector<std::uint8_t>& aligned,
                        std::uint32_t c) {
  Dart over_out = kNoDart, under_out = kNoDart;
  for (Dart x = 4 * c; x < 4 * c + 4; ++x) {
    if (!aligned[x]) continue;
    (d.over_flag(x) ? over_out : under_out) = x;
  }
  if (over_out == kNoDart || under_out == kNoDart)
    throw invalid_diagram("crossing sign needs one over and one under out-dart");
  return Diagram::pos_of(over_out) == ((Diagram::pos_of(under_out) + 1) & 3u)
             ? +1
             : -1;
}

}  // namespace

int crossing_sign(const Diagram& d, std::uint32_t c) {
  return sign_from_alignment(d, alignment(d), c);
}

int writhe(const Diagram& d) {
  if (d.crossingless()) return 0;
  auto aligned = alignment(d);
  int w = 0;
  for (std::uint32_t c = 0; c < d.crossings(); ++c)
    w += sign_from_alignment(d, aligned, c);
  return w;
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& b : m.over) b ^= 1u;
  return m;
}

namespace {

// One BFS labelling rooted at r.  ord[i] is the dart carrying label i; lab is
// its inverse.  Neighbour order is sigma before theta, which fixes the
// labelling uniquely given the root.
void bfs_labelling(const Diagram& d, Dart r, std::vector<Dart>& ord,
                   std::vector<Dart>& lab) {
  const std::size_t nd = d.theta.size();
  ord.assign(nd, kNoDart);
  lab.assign(nd, kNoDart);
  std::uint32_t next = 0;
  auto take = [&](Dart x) {
    if (lab[x] != kNoDart) return;
    lab[x] = next;
    ord[next] = x;
    ++next;
  };
  take(r);
  for (std::uint32_t i = 0; i < nd; ++i) {
    Dart x = ord[i];
    take(Diagram::sigma(x));
    take(d.theta[x]);
  }
}

void serialize_labelling(const Diagram& d, const std::vector<Dart>& ord,
                         const std::vector<Dart>& lab, std::string& out) {
  out.clear();
  out.reserve(ord.size() * 9);
  for (Dart x : ord) {
    put_u32(out, lab[Diagram::sigma(x)]);
    put_u32(out, lab[d.theta[x]]);
    out.push_back(d.over_flag(x) ? '\1' : '\0');
  }
}

}  // namespace

CanonicalForm canonical_form(const Diagram& d) {
  CanonicalForm cf;
  if (d.crossingless()) {
    cf.key = d.mode == Mode::Sphere ? "O:S" : "O:P";
    cf.automorphisms.push_back({});
    cf.period = 1;
    return cf;
  }
  const std::size_t nd = d.theta.size();

  std::string best;
  std::string cur;
  std::vector<Dart> ord, lab;
  std::vector<Dart> winners;
  std::vector<std::vector<Dart>> winner_labs;

  for (Dart r = 0; r < nd; ++r) {
    bfs_labelling(d, r, ord, lab);
    serialize_labelling(d, ord, lab, cur);
    if (winners.empty() || cur < best) {
      best = cur;
      winners.assign(1, r);
      winner_labs.assign(1, lab);
    } else if (cur == best) {
      winners.push_back(r);
      winner_labs.push_back(lab);
    }
  }

  std::string key;
  key.push_back(d.mode == Mode::Sphere ? 'S' : 'P');
  put_u32(key, static_cast<std::uint32_t>(d.crossings()));
  key += best;

  if (d.mode == Mode::Planar) {
    auto outer_orbit = face_orbit_of(d, d.outer);
    std::uint32_t best_marker = 0xffffffffu;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < winners.size(); ++i) {
      std::uint32_t marker = 0xffffffffu;
      for (Dart x : outer_orbit) marker = std::min(marker, winner_labs[i][x]);
      if (marker < best_marker) {
        best_marker = marker;
        kept.assign(1, i);
      } else if (marker == best_marker) {
        kept.push_back(i);
      }
    }
    key.push_back('#');
    put_u32(key, best_marker);
    std::vector<Dart> w2;
    std::vector<std::vector<Dart>> l2;
    for (std::size_t i : kept) {
      w2.push_back(winners[i]);
      l2.push_back(winner_labs[i]);
    }
    winners.swap(w2);
    winner_labs.swap(l2);
  }

  cf.key = std::move(key);
  cf.to_canonical = winner_labs.front();

  // Automorphism taking the first winning root to each other winning root:
  // g(x) = ord_r[lab_r0(x)].
  const std::vector<Dart>& lab0 = winner_labs.front();
  for (std::size_t i = 0; i < winners.size(); ++i) {
    bfs_labelling(d, winners[i], ord, lab);
    std::vector<Dart> g(nd);
    for (Dart x = 0; x < nd; ++x) g[x] = ord[lab0[x]];
    cf.automorphisms.push_back(std::move(g));
  }
  cf.period = cf.automorphisms.size();
  return cf;
}

std::string canonical_key(const Diagram& d) { return canonical_form(d).key; }

bool is_isotopic(const Diagram& a, const Diagram& b) {
  if (a.mode != b.mode)
    throw mode_mismatch("cannot compare sphere and planar diagrams");
  return canonical_key(a) == canonical_key(b);
}

SymmetryInfo symmetry(const Diagram& d) {
  if (d.crossingless())
    throw unsupported_operation("symmetry of the crossingless unknot is not defined");
  CanonicalForm cf = canonical_form(d);
  SymmetryInfo s;
  s.aut_plus_order = cf.automorphisms.size();
  s.generators = cf.automorphisms;
  s.period = cf.period;
  return s;
}

std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

Diagram unknot(Mode m) {
  Diagram d;
  d.mode = m;
  return d;
}

Diagram torus2(std::uint32_t q, Mode m) {
  if (q == 0 || q % 2 == 0)
    throw std::invalid_argument("torus2 needs odd q >= 1");
  Diagram d;
  d.mode = Mode::Sphere;
  d.theta.assign(4 * q, kNoDart);
  d.over.assign(q, 0);
  auto pair = [&d](Dart a, Dart b) {
    d.theta[a] = b;
    d.theta[b] = a;
  };
  for (std::uint32_t i = 0; i < q; ++i) {
    std::uint32_t j = (i + 1) % q;
    pair(4 * i + 0, 4 * j + 1);
    pair(4 * i + 3, 4 * j + 2);
  }
  require_valid(d);
  if (m == Mode::Planar) {
    d.mode = Mode::Planar;
    d.outer = 0;
    normalize_outer(d);
  }
  return d;
}

Diagram from_double_occurrence(
    const std::vector<std::pair<std::uint32_t, bool>>& word) {
  std::uint32_t n = 0;
  for (const auto& [c, o] : word) n = std::max(n, c + 1);
  if (word.size() != 2 * n)
    throw std::invalid_argument("double occurrence word must have length 2n");

  Diagram best;
  std::string best_key;
  // Position roles per handedness: an under pass always enters at 0 and
  // leaves at 2; an over pass enters at 1 and leaves at 3 on a positive
  // crossing and the other way round on a negative one.
  for (std::uint64_t signs = 0; signs < (1ull << n); ++signs) {
    Diagram d;
    d.theta.assign(4 * n, kNoDart);
    d.over.assign(n, 1);
    bool legal = true;
    std::vector<Dart> ins(word.size()), outs(word.size());
    std::vector<int> used(4 * n, 0);
    for (std::size_t i = 0; i < word.size() && legal; ++i) {
      auto [c, over_pass] = word[i];
      bool positive = (signs >> c) & 1u;
      Dart in, out;
      if (!over_pass) {
        in = 4 * c + 0;
        out = 4 * c + 2;
      } else if (positive) {
        in = 4 * c + 1;
        out = 4 * c + 3;
      } else {
        in = 4 * c + 3;
        out = 4 * c + 1;
      }
      if (used[in]++ || used[out]++) legal = false;
      ins[i] = in;
      outs[i] = out;
    }
    if (!legal) continue;
    for (std::size_t i = 0; i < word.size(); ++i) {
      Dart a = outs[i];
      Dart b = ins[(i + 1) % word.size()];
      d.theta[a] = b;
      d.theta[b] = a;
    }
    if (!validate(d).ok) continue;
    std::string key = canonical_key(d);
    if (best_key.empty() || key < best_key) {
      best_key = key;
      best = std::move(d);
    }
  }
  if (best_key.empty())
    throw invalid_diagram("double occurrence word admits no sphere realisation");
  return best;
}

Diagram twist_knot(std::uint32_t n, Mode m) {
  if (n == 0) throw std::invalid_argument("twist_knot needs n >= 1");
  // Closed walk: down through the n twist crossings, through the clasp pair,
  // back up the twists, then through the clasp again.  Over/under alternates
  // along the whole walk.
  std::vector<std::pair<std::uint32_t, bool>> word;
  auto parity = [&word]() { return word.size() % 2 == 0; };
  for (std::uint32_t i = 0; i < n; ++i) word.push_back({i, parity()});
  std::uint32_t a = n, b = n + 1;
  word.push_back({a, parity()});
  word.push_back({b, parity()});
  for (std::uint32_t i = n; i-- > 0;) word.push_back({i, parity()});
  if (n % 2 == 1) {
    word.push_back({a, parity()});
    word.push_back({b, parity()});
  } else {
    word.push_back({b, parity()});
    word.push_back({a, parity()});
  }
  Diagram d = from_double_occurrence(word);
  if (m == Mode::Planar) {
    d.mode = Mode::Planar;
    d.outer = 0;
    normalize_outer(d);
  }
  return d;
}

void normalize_outer(Diagram& d) {
  if (d.mode != Mode::Planar || d.crossingless() || d.outer == kNoDart) return;
  Dart best = d.outer;
  for (Dart x : face_orbit_of(d, d.outer)) best = std::min(best, x);
  d.outer = best;
}

std::uint64_t fingerprint(const Diagram& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(d.mode == Mode::Sphere ? 1 : 2);
  mix(d.theta.size());
  for (Dart x : d.theta) mix(x);
  for (auto b : d.over) mix(b);
  mix(d.outer);
  return h;
}

}  // namespace rgraph
