#include "rgraph/moves.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <utility>

namespace rgraph {

namespace {

constexpr Dart sg(Dart d) { return Diagram::sigma(d); }
constexpr Dart sgi(Dart d) { return Diagram::sigma_inv(d); }
constexpr Dart op(Dart d) { return Diagram::opp(d); }
constexpr std::uint32_t cr(Dart d) { return Diagram::crossing_of(d); }

Dart phi(const Diagram& d, Dart x) { return sg(d.theta[x]); }

// One-crossing curl; over == 0 puts the {0,2} strand on top, which makes the
// crossing positive.  Loop arc {0,1}, kink 1-gon {1}, tail 1-gon {3}.
Diagram make_curl(int sign) {
  Diagram d;
  d.theta = {1, 0, 3, 2};
  d.over = {static_cast<std::uint8_t>(sign > 0 ? 0 : 1)};
  return d;
}

// Kinks the arc {p, theta(p)}, carving the new 1-gon out of face_of(p).
// New crossing darts W0..W3 = 4n..4n+3, loop arc {W1, W2}, 1-gon {W2};
// face_of(p) gains {W1, W3}, face_of(theta(p)) gains {W0}.  The over bit is
// set so the new crossing has the requested sign.
Diagram kink_at(const Diagram& d, Dart p, int sign) {
  Diagram t = d;
  const Dart w0 = static_cast<Dart>(t.theta.size());
  const Dart w1 = w0 + 1, w2 = w0 + 2, w3 = w0 + 3;
  const Dart pb = t.theta[p];
  t.theta.resize(w0 + 4);
  t.theta[p] = w0;
  t.theta[w0] = p;
  t.theta[pb] = w3;
  t.theta[w3] = pb;
  t.theta[w1] = w2;
  t.theta[w2] = w1;
  t.over.push_back(0);
  if (crossing_sign(t, w0 >> 2) != sign) t.over.back() = 1;
  return t;
}

struct Removal {
  Diagram target;
  std::vector<Dart> dmap;  // old dart -> new dart, kNoDart when removed
  std::vector<char> gone;  // old crossing -> removed?
};

// First surviving dart along the strand through x.
Dart chase(const Diagram& d, const std::vector<char>& gone, Dart x) {
  while (gone[cr(x)]) x = d.theta[op(x)];
  return x;
}

// Deletes a set of crossings and reconnects every strand that ran through
// them, compacting dart labels.
Removal remove_crossings(const Diagram& d,
                         const std::vector<std::uint32_t>& removed) {
  Removal r;
  r.gone.assign(d.crossings(), 0);
  for (auto c : removed) r.gone[c] = 1;
  std::vector<std::uint32_t> cmap(d.crossings(), 0xffffffffu);
  std::uint32_t k = 0;
  for (std::uint32_t c = 0; c < d.crossings(); ++c)
    if (!r.gone[c]) cmap[c] = k++;
  r.dmap.assign(d.darts(), kNoDart);
  for (Dart x = 0; x < d.darts(); ++x)
    if (!r.gone[cr(x)]) r.dmap[x] = 4 * cmap[cr(x)] + (x & 3u);
  r.target.mode = d.mode;
  r.target.outer = kNoDart;
  if (k == 0) return r;
  r.target.theta.assign(4 * k, 0);
  r.target.over.assign(k, 0);
  for (Dart x = 0; x < d.darts(); ++x) {
    if (r.gone[cr(x)]) continue;
    r.target.theta[r.dmap[x]] = r.dmap[chase(d, r.gone, d.theta[x])];
  }
  for (std::uint32_t c = 0; c < d.crossings(); ++c)
    if (!r.gone[c]) r.target.over[cmap[c]] = d.over[c];
  return r;
}

// The outer region survives a removal: either some dart of the old outer
// face sits at a surviving crossing, or the whole face dies and the region
// merges into the face reached by following the strand out of it.
void fix_outer_after_removal(const Diagram& d, Removal& r) {
  if (d.mode != Mode::Planar) return;
  if (r.target.crossingless()) return;
  const Dart o = d.outer;
  Dart pick = kNoDart;
  if (!r.gone[cr(o)]) {
    pick = o;
  } else {
    Dart x = o;
    do {
      if (!r.gone[cr(x)]) {
        pick = x;
        break;
      }
      x = phi(d, x);
    } while (x != o);
    if (pick == kNoDart) pick = chase(d, r.gone, o);
  }
  r.target.outer = r.dmap[pick];
  normalize_outer(r.target);
}

// Pushes the strand of p over the strand of q across their common face.
// New crossings X (on the p side, darts 4n..4n+3) and Y (4n+4..4n+7); the
// pushing strand runs p, X2 | X0, Y0 | Y2, theta(p) and stays on top, the
// target strand runs q, Y1 | Y3, X1 | X3, theta(q).  Lens bigon {X1, Y0}.
Diagram push_over(const Diagram& d, Dart p, Dart q, bool outer_half) {
  Diagram t = d;
  const Dart x0 = static_cast<Dart>(t.theta.size());
  const Dart x1 = x0 + 1, x2 = x0 + 2, x3 = x0 + 3;
  const Dart y0 = x0 + 4, y1 = x0 + 5, y2 = x0 + 6, y3 = x0 + 7;
  const Dart pb = t.theta[p], qb = t.theta[q];
  t.theta.resize(x0 + 8);
  t.theta[p] = x2;
  t.theta[x2] = p;
  t.theta[q] = y1;
  t.theta[y1] = q;
  t.theta[pb] = y2;
  t.theta[y2] = pb;
  t.theta[qb] = x3;
  t.theta[x3] = qb;
  t.theta[x0] = y0;
  t.theta[y0] = x0;
  t.theta[x1] = y3;
  t.theta[y3] = x1;
  t.over.push_back(0);
  t.over.push_back(0);
  if (d.mode == Mode::Planar) {
    const Faces f = faces(d);
    if (f.face_of[d.outer] == f.face_of[p]) t.outer = outer_half ? q : p;
    normalize_outer(t);
  }
  return t;
}

// Slides the triangle {e1, e2, e3} to the other side of its three crossings.
// The new trigon is {opp(e_i)} with arcs opp(e_i) -- sigma(e_{i+1}); strands
// attached at the old outward ports sigma(e_j) / opp(e_j) re-attach at
// sigma_inv(e_j) / e_j.  Over bits are untouched: each crossing keeps the
// same pair of strands in the same passages.
Diagram slide_triangle(const Diagram& d, const std::array<Dart, 3>& e) {
  auto at_trigon = [&](Dart x) {
    return cr(x) == cr(e[0]) || cr(x) == cr(e[1]) || cr(x) == cr(e[2]);
  };
  std::map<Dart, Dart> remap;  // old port -> re-attachment dart
  for (int i = 0; i < 3; ++i) {
    remap[sg(e[i])] = sgi(e[i]);
    remap[op(e[i])] = e[i];
  }
  std::vector<std::pair<Dart, Dart>> pairs;
  for (int i = 0; i < 3; ++i) pairs.emplace_back(op(e[i]), sg(e[(i + 1) % 3]));
  for (const auto& [port, land] : remap) {
    const Dart far = d.theta[port];
    auto it = remap.find(far);
    pairs.emplace_back(land, it == remap.end() ? far : it->second);
  }
  Diagram t = d;
  for (const auto& [a, b] : pairs) {
    t.theta[a] = b;
    t.theta[b] = a;
  }
  if (d.mode == Mode::Planar) {
    const Dart o = d.outer;
    if (at_trigon(o)) {
      Dart far_pick = kNoDart, port_pick = kNoDart;
      Dart x = o;
      do {
        if (!at_trigon(x)) {
          far_pick = x;
          break;
        }
        if (port_pick == kNoDart && remap.count(x)) port_pick = x;
        x = phi(d, x);
      } while (x != o);
      t.outer = far_pick != kNoDart ? far_pick : remap.at(port_pick);
    }
    normalize_outer(t);
  }
  return t;
}

struct CensusDetail {
  TentacleCensus pub;
  std::set<std::uint32_t> pocket_face_ids;
};

// Walks down from every 1-gon: a pocket candidate is the face opposite the
// current crossing; it must be a bigon joining a new crossing of opposite
// sign through a removable passage.
CensusDetail census_detail(const Diagram& d, const Faces& f) {
  CensusDetail out;
  if (d.crossingless()) return out;
  std::vector<int> sign(d.crossings());
  for (std::uint32_t c = 0; c < d.crossings(); ++c)
    sign[c] = crossing_sign(d, c);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t fi = 0; fi < f.faces.size(); ++fi) {
    if (f.faces[fi].size() != 1) continue;
    ++out.pub.p1;
    const Dart tip = f.faces[fi][0];
    std::vector<std::uint32_t> chain = {cr(tip)};
    std::vector<std::uint32_t> pockets;
    Dart z = tip;
    for (;;) {
      const Dart a = op(z);
      const std::uint32_t cf = f.face_of[a];
      if (f.faces[cf].size() != 2) break;
      const Dart z1 = f.faces[cf][0] == a ? f.faces[cf][1] : f.faces[cf][0];
      if (cr(z1) == cr(a)) break;
      if (std::find(chain.begin(), chain.end(), cr(z1)) != chain.end()) break;
      const bool alternating = sign[cr(z1)] == -sign[cr(a)];
      const bool movable = d.over_flag(a) == d.over_flag(d.theta[a]);
      if (!alternating || !movable) {
        ++out.pub.near_misses;
        break;
      }
      pockets.push_back(cf);
      chain.push_back(cr(z1));
      z = z1;
    }
    if (chain.size() >= 2) {
      std::vector<std::uint32_t> key = chain;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second)
        out.pub.heights[static_cast<std::uint32_t>(chain.size() - 1)] += 1;
      for (auto pf : pockets) out.pocket_face_ids.insert(pf);
    }
  }
  out.pub.n_of_d = out.pub.p1;
  for (const auto& [h, a] : out.pub.heights) out.pub.n_of_d += h * a;
  return out;
}

void check_dart(const Diagram& d, Dart x, const char* what) {
  if (x >= d.darts()) throw invalid_diagram(std::string(what) + ": dart out of range");
}

}  // namespace

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1plus: return "R1plus";
    case MoveKind::R1minus: return "R1minus";
    case MoveKind::R2plus: return "R2plus";
    case MoveKind::RTplus: return "RTplus";
    case MoveKind::R2minus: return "R2minus";
    case MoveKind::RTminus: return "RTminus";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind kind_from_name(const std::string& name) {
  for (MoveKind k : {MoveKind::R1plus, MoveKind::R1minus, MoveKind::R2plus,
                     MoveKind::RTplus, MoveKind::R2minus, MoveKind::RTminus,
                     MoveKind::R3})
    if (name == kind_name(k)) return k;
  throw invalid_diagram("unknown move kind: " + name);
}

int delta_crossings(MoveKind k) {
  switch (k) {
    case MoveKind::R1plus: return 1;
    case MoveKind::R1minus: return -1;
    case MoveKind::R2plus:
    case MoveKind::RTplus: return 2;
    case MoveKind::R2minus:
    case MoveKind::RTminus: return -2;
    case MoveKind::R3: return 0;
  }
  return 0;
}

std::vector<MoveSite> enumerate_moves(const Diagram& d) {
  std::vector<MoveSite> out;
  const std::uint64_t fp = fingerprint(d);
  const bool planar = d.mode == Mode::Planar;

  if (d.crossingless()) {
    auto add = [&](MoveKind k, int s, bool oh) {
      MoveSite m;
      m.kind = k;
      m.sign = s;
      m.outer_half = oh;
      m.source = fp;
      out.push_back(m);
    };
    for (int s : {+1, -1}) {
      add(MoveKind::R1plus, s, false);
      if (planar) add(MoveKind::R1plus, s, true);
    }
    if (planar) {
      for (int s : {+1, -1}) {
        add(MoveKind::RTplus, s, false);
        add(MoveKind::RTplus, s, true);
      }
    } else {
      add(MoveKind::RTplus, +1, false);
    }
    return out;
  }

  const Faces f = faces(d);
  const auto aligned = alignment(d);
  const CensusDetail det = census_detail(d, f);
  auto internal = [&](std::uint32_t fi) {
    return !planar || fi != f.outer_face;
  };

  for (std::uint32_t fi = 0; fi < f.faces.size(); ++fi) {
    const auto& orb = f.faces[fi];
    if (!internal(fi)) continue;
    if (orb.size() == 1) {
      MoveSite m;
      m.kind = MoveKind::R1minus;
      m.sign = crossing_sign(d, cr(orb[0]));
      m.loc = {orb[0], kNoDart, kNoDart};
      m.source = fp;
      out.push_back(m);
    } else if (orb.size() == 2) {
      const Dart u = orb[0], v = orb[1];
      if (cr(u) == cr(v)) continue;
      if (d.over_flag(u) != d.over_flag(d.theta[u])) continue;
      MoveSite m;
      m.kind = det.pocket_face_ids.count(fi) ? MoveKind::RTminus
                                             : MoveKind::R2minus;
      m.loc = {u, v, kNoDart};
      m.over_choice = d.over_flag(u);
      m.matched = aligned[u] != aligned[v];
      m.source = fp;
      out.push_back(m);
    } else if (orb.size() == 3) {
      const Dart a = orb[0], b = orb[1], c = orb[2];
      if (cr(a) == cr(b) || cr(a) == cr(c) || cr(b) == cr(c)) continue;
      const bool fa = d.over_flag(d.theta[a]);
      const bool fb = d.over_flag(d.theta[b]);
      const bool fc = d.over_flag(d.theta[c]);
      if (fa == fb && fb == fc) continue;
      MoveSite m;
      m.kind = MoveKind::R3;
      m.loc = {a, b, c};
      m.source = fp;
      out.push_back(m);
    }
  }

  for (Dart p = 0; p < d.darts(); ++p) {
    const auto a2 = static_cast<std::uint32_t>(f.faces[f.face_of[p]].size());
    const auto b2 =
        static_cast<std::uint32_t>(f.faces[f.face_of[d.theta[p]]].size());
    for (int s : {+1, -1}) {
      MoveSite m;
      m.kind = MoveKind::R1plus;
      m.sign = s;
      m.loc = {p, kNoDart, kNoDart};
      m.regions = {a2 + 2, b2 + 1, 0, 0};
      m.source = fp;
      out.push_back(m);
      m.kind = MoveKind::RTplus;
      m.regions = {a2 + 4, b2 + 1, 0, 0};
      out.push_back(m);
    }
  }

  for (std::uint32_t fi = 0; fi < f.faces.size(); ++fi) {
    const auto& orb = f.faces[fi];
    const auto k = static_cast<std::uint32_t>(orb.size());
    if (k < 2) continue;
    const bool ext = planar && fi == f.outer_face;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const Dart p = orb[i], q = orb[j];
        const std::uint32_t l = (i + k - j) % k;  // phi steps q -> p
        MoveSite m;
        m.kind = MoveKind::R2plus;
        m.over_choice = true;
        m.loc = {p, q, kNoDart};
        m.matched = aligned[p] != aligned[q];
        const std::uint32_t fa = f.face_of[d.theta[p]];
        const std::uint32_t fd = f.face_of[d.theta[q]];
        std::uint32_t ra, rd;
        if (fa == fd) {
          ra = rd = static_cast<std::uint32_t>(f.faces[fa].size()) + 4;
        } else {
          ra = static_cast<std::uint32_t>(f.faces[fa].size()) + 2;
          rd = static_cast<std::uint32_t>(f.faces[fd].size()) + 2;
        }
        m.regions = {ra, l + 1, (k - l) + 1, rd};
        m.source = fp;
        out.push_back(m);
        if (ext) {
          m.outer_half = true;
          out.push_back(m);
        }
      }
    }
  }
  return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& m) {
  if (m.source != fingerprint(d))
    throw stale_site("move site was enumerated on a different diagram");
  const bool planar = d.mode == Mode::Planar;
  Diagram t;
  switch (m.kind) {
    case MoveKind::R1plus: {
      if (d.crossingless()) {
        t = make_curl(m.sign);
        t.mode = d.mode;
        if (planar) t.outer = m.outer_half ? 0 : 3;
      } else {
        check_dart(d, m.loc[0], "r1plus");
        t = kink_at(d, m.loc[0], m.sign);
        if (planar) normalize_outer(t);
      }
      break;
    }
    case MoveKind::RTplus: {
      if (d.crossingless()) {
        Diagram c = make_curl(m.sign);
        t = kink_at(c, 0, -m.sign);
        t.mode = d.mode;
        if (planar) t.outer = m.outer_half ? 0 : 3;
      } else {
        check_dart(d, m.loc[0], "rtplus");
        t = kink_at(d, m.loc[0], m.sign);
        t = kink_at(t, static_cast<Dart>(d.darts()) + 1, -m.sign);
        if (planar) normalize_outer(t);
      }
      break;
    }
    case MoveKind::R2plus: {
      check_dart(d, m.loc[0], "r2plus");
      check_dart(d, m.loc[1], "r2plus");
      const Dart p = m.loc[0], q = m.loc[1];
      if (p == q) throw invalid_diagram("r2plus: darts coincide");
      Dart x = phi(d, p);
      while (x != q && x != p) x = phi(d, x);
      if (x != q) throw invalid_diagram("r2plus: darts not on a common face");
      t = push_over(d, p, q, m.outer_half);
      break;
    }
    case MoveKind::R1minus: {
      check_dart(d, m.loc[0], "r1minus");
      const Dart x = m.loc[0];
      if (d.theta[x] != sgi(x)) throw invalid_diagram("r1minus: not a 1-gon");
      if (planar) {
        const Faces f = faces(d);
        if (f.face_of[x] == f.outer_face)
          throw invalid_diagram("r1minus: outer face");
      }
      Removal r = remove_crossings(d, {cr(x)});
      fix_outer_after_removal(d, r);
      t = r.target;
      break;
    }
    case MoveKind::R2minus:
    case MoveKind::RTminus: {
      check_dart(d, m.loc[0], "r2minus");
      check_dart(d, m.loc[1], "r2minus");
      const Dart u = m.loc[0], v = m.loc[1];
      if (phi(d, u) != v || phi(d, v) != u)
        throw invalid_diagram("r2minus: not a bigon");
      if (cr(u) == cr(v))
        throw invalid_diagram("r2minus: bigon at a single crossing");
      if (d.over_flag(u) != d.over_flag(d.theta[u]))
        throw invalid_diagram("r2minus: bigon is not removable");
      if (planar) {
        const Faces f = faces(d);
        if (f.face_of[u] == f.outer_face)
          throw invalid_diagram("r2minus: outer face");
      }
      Removal r = remove_crossings(d, {cr(u), cr(v)});
      fix_outer_after_removal(d, r);
      t = r.target;
      break;
    }
    case MoveKind::R3: {
      for (int i = 0; i < 3; ++i) check_dart(d, m.loc[i], "r3");
      const Dart e1 = m.loc[0];
      const Dart e2 = phi(d, e1);
      const Dart e3 = phi(d, e2);
      if (phi(d, e3) != e1 || e2 == e1 || e3 == e1)
        throw invalid_diagram("r3: not a trigon");
      const std::set<Dart> want = {m.loc[0], m.loc[1], m.loc[2]};
      if (want != std::set<Dart>{e1, e2, e3})
        throw invalid_diagram("r3: darts do not bound one trigon");
      if (cr(e1) == cr(e2) || cr(e1) == cr(e3) || cr(e2) == cr(e3))
        throw invalid_diagram("r3: trigon revisits a crossing");
      const bool f1 = d.over_flag(d.theta[e1]);
      const bool f2 = d.over_flag(d.theta[e2]);
      const bool f3 = d.over_flag(d.theta[e3]);
      if (f1 == f2 && f2 == f3)
        throw invalid_diagram("r3: trigon is not slidable");
      if (planar && (d.outer == e1 || d.outer == e2 || d.outer == e3))
        throw invalid_diagram("r3: outer face");
      t = slide_triangle(d, {e1, e2, e3});
      break;
    }
  }
  t.mode = d.mode;
  require_valid(t);
  return t;
}

MoveSite reverse_site(const Diagram& d, const MoveSite& m,
                      const Diagram& target) {
  MoveSite r;
  r.source = fingerprint(target);
  const Dart n4 = static_cast<Dart>(d.darts());
  switch (m.kind) {
    case MoveKind::R1plus: {
      r.kind = MoveKind::R1minus;
      r.sign = m.sign;
      r.loc = {d.crossingless() ? 1u : n4 + 2, kNoDart, kNoDart};
      break;
    }
    case MoveKind::RTplus: {
      r.kind = MoveKind::RTminus;
      const Dart u = d.crossingless() ? 1u : n4 + 2;
      const Dart v = d.crossingless() ? 4u : n4 + 4;
      r.loc = {u, v, kNoDart};
      r.over_choice = target.over_flag(u);
      const auto al = alignment(target);
      r.matched = al[u] != al[v];
      break;
    }
    case MoveKind::R2plus: {
      const Dart u = n4 + 1, v = n4 + 4;  // lens bigon {X1, Y0}
      const Faces ft = faces(target);
      const CensusDetail det = census_detail(target, ft);
      r.kind = det.pocket_face_ids.count(ft.face_of[u]) ? MoveKind::RTminus
                                                        : MoveKind::R2minus;
      r.loc = {u, v, kNoDart};
      r.over_choice = target.over_flag(u);
      const auto al = alignment(target);
      r.matched = al[u] != al[v];
      break;
    }
    case MoveKind::R1minus: {
      const Dart f = m.loc[0];
      r.sign = crossing_sign(d, cr(f));
      r.kind = MoveKind::R1plus;
      if (target.crossingless()) {
        if (d.mode == Mode::Planar) {
          const Faces fd = faces(d);
          r.outer_half = fd.faces[fd.face_of[d.outer]].size() == 2;
        }
      } else {
        Removal rm = remove_crossings(d, {cr(f)});
        r.loc = {rm.dmap[chase(d, rm.gone, d.theta[op(f)])], kNoDart, kNoDart};
      }
      break;
    }
    case MoveKind::R2minus:
    case MoveKind::RTminus: {
      const Dart u = m.loc[0], v = m.loc[1];
      const Dart od = d.over_flag(u) ? u : v;  // lens dart on the over strand
      if (target.crossingless()) {
        // closed-up tower: the re-fold
        r.kind = MoveKind::RTplus;
        if (d.mode == Mode::Sphere) {
          r.sign = +1;
        } else {
          const Faces fd = faces(d);
          const std::uint32_t of = fd.face_of[d.outer];
          if (fd.faces[of].size() == 4) {
            r.outer_half = true;
            r.sign = crossing_sign(d, cr(v));
          } else if (fd.face_of[op(u)] == of) {
            r.sign = crossing_sign(d, cr(u));
          } else {
            r.sign = crossing_sign(d, cr(v));
          }
        }
      } else if (m.kind == MoveKind::RTminus) {
        // Undoing a pocket removal re-folds the strand below the tower.
        r.kind = MoveKind::RTplus;
        const Faces fd = faces(d);
        const Dart ub =
            fd.faces[fd.face_of[op(u)]].size() == 1 ? v : u;  // below the tip
        r.sign = crossing_sign(d, cr(ub));
        Removal rm = remove_crossings(d, {cr(u), cr(v)});
        r.loc = {rm.dmap[chase(d, rm.gone, d.theta[op(ub)])], kNoDart, kNoDart};
      } else {
        r.kind = MoveKind::R2plus;
        r.over_choice = true;
        Removal rm = remove_crossings(d, {cr(u), cr(v)});
        const Dart x2 = op(d.theta[od]);
        const Dart y1 = sg(od);
        const Dart p0 = chase(d, rm.gone, d.theta[x2]);
        const Dart q0 = chase(d, rm.gone, d.theta[y1]);
        r.loc = {rm.dmap[p0], rm.dmap[q0], kNoDart};
        const auto al = alignment(target);
        r.matched = al[r.loc[0]] != al[r.loc[1]];
        if (d.mode == Mode::Planar) {
          const Faces fd = faces(d);
          r.outer_half = fd.face_of[d.outer] == fd.face_of[op(od)];
        }
      }
      break;
    }
    case MoveKind::R3: {
      r.kind = MoveKind::R3;
      const Dart e1 = m.loc[0];
      const Dart e2 = phi(d, e1);
      const Dart e3 = phi(d, e2);
      std::array<Dart, 3> nt = {op(e1), op(e2), op(e3)};
      const int lo = static_cast<int>(
          std::min_element(nt.begin(), nt.end()) - nt.begin());
      r.loc = {nt[lo], nt[(lo + 1) % 3], nt[(lo + 2) % 3]};
      break;
    }
  }
  return r;
}

TentacleCensus tentacle_census(const Diagram& d) {
  const Faces f = faces(d);
  return census_detail(d, f).pub;
}

bool classify_tentacle(const Diagram& d, const MoveSite& m) {
  switch (m.kind) {
    case MoveKind::RTplus:
      return true;
    case MoveKind::R2minus:
    case MoveKind::RTminus: {
      const Faces f = faces(d);
      const CensusDetail det = census_detail(d, f);
      return det.pocket_face_ids.count(f.face_of[m.loc[0]]) != 0;
    }
    case MoveKind::R2plus: {
      const Diagram t = apply_move(d, m);
      const Dart lens = static_cast<Dart>(d.darts()) + 1;
      const Faces f = faces(t);
      const CensusDetail det = census_detail(t, f);
      return det.pocket_face_ids.count(f.face_of[lens]) != 0;
    }
    default:
      throw unsupported_operation(
          "classify_tentacle: only strand-push sites have a tentacle class");
  }
}

bool is_hard(const Diagram& d) {
  for (const auto& m : enumerate_moves(d)) {
    switch (m.kind) {
      case MoveKind::R1minus:
      case MoveKind::R2minus:
      case MoveKind::RTminus:
      case MoveKind::R3:
        return false;
      default:
        break;
    }
  }
  return true;
}

}  // namespace rgraph
