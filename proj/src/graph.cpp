#include "rgraph/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#if defined(RGRAPH_HAVE_OPENMP)
#include <omp.h>
#endif

namespace rgraph {

namespace {

constexpr std::uint32_t kUnreached = 0xffffffffu;

MoveKind plus_form(MoveKind k) {
  switch (k) {
    case MoveKind::R1minus: return MoveKind::R1plus;
    case MoveKind::R2minus: return MoveKind::R2plus;
    case MoveKind::RTminus: return MoveKind::RTplus;
    default: return k;
  }
}

bool increasing_kind(MoveKind k) { return delta_crossings(k) > 0; }
bool decreasing_kind(MoveKind k) { return delta_crossings(k) < 0; }

// Semantic normal form of a move site.  Two sites of one diagram describe the
// same surgery exactly when their signatures coincide; the signature of a
// site mapped through a label-preserving bijection equals the signature of
// the corresponding site on the relabeled diagram, so minimising over the
// symmetry group yields a canonical orbit id.
struct SiteSig {
  std::uint8_t kind = 0;
  std::int8_t sign = 0;
  std::uint8_t outer = 0;
  std::array<Dart, 3> key = {kNoDart, kNoDart, kNoDart};

  auto operator<=>(const SiteSig&) const = default;
};

Dart map_dart(const std::vector<Dart>& g, Dart x) {
  return x == kNoDart ? kNoDart : g[x];
}

SiteSig site_sig(const MoveSite& m, const std::vector<Dart>* g) {
  auto M = [&](Dart x) { return g ? map_dart(*g, x) : x; };
  SiteSig s;
  s.kind = static_cast<std::uint8_t>(m.kind);
  s.sign = static_cast<std::int8_t>(m.sign);
  s.outer = m.outer_half ? 1 : 0;
  switch (m.kind) {
    case MoveKind::R1plus:
    case MoveKind::RTplus:
    case MoveKind::R1minus:
      s.key[0] = M(m.loc[0]);
      break;
    case MoveKind::R2plus:
      s.key[0] = M(m.loc[0]);
      s.key[1] = M(m.loc[1]);
      break;
    case MoveKind::R2minus:
    case MoveKind::RTminus: {
      // Normalise to (over dart, under dart); symmetries preserve over_flag,
      // so the pair maps onto the normalised pair of the image bigon.
      const Dart over = m.over_choice ? m.loc[0] : m.loc[1];
      const Dart under = m.over_choice ? m.loc[1] : m.loc[0];
      s.key[0] = M(over);
      s.key[1] = M(under);
      break;
    }
    case MoveKind::R3: {
      std::array<Dart, 3> t = {M(m.loc[0]), M(m.loc[1]), M(m.loc[2])};
      std::sort(t.begin(), t.end());
      s.key = t;
      break;
    }
  }
  return s;
}

// One edge strand at a diagram: an orbit of concrete move sites under the
// orientation-preserving symmetry group.
struct Strand {
  MoveKind kind = MoveKind::R1plus;
  std::uint64_t raw = 0;
  MoveSite rep;
  Diagram target;
  CanonicalForm target_cf;
};

std::vector<Strand> strand_list(const Diagram& d, const CanonicalForm& cf) {
  const std::vector<MoveSite> sites = enumerate_moves(d);
  std::map<SiteSig, std::uint32_t> strand_of;
  std::vector<Strand> out;
  for (const MoveSite& m : sites) {
    SiteSig best = site_sig(m, nullptr);
    for (const auto& g : cf.automorphisms) {
      if (g.size() != d.darts()) continue;
      SiteSig cand = site_sig(m, &g);
      if (cand < best) best = cand;
    }
    auto [it, fresh] = strand_of.emplace(best, static_cast<std::uint32_t>(out.size()));
    if (fresh) {
      Strand s;
      s.kind = m.kind;
      s.raw = 1;
      s.rep = m;
      out.push_back(std::move(s));
    } else {
      ++out[it->second].raw;
    }
  }
  for (Strand& s : out) {
    s.target = apply_move(d, s.rep);
    s.target_cf = canonical_form(s.target);
  }
  return out;
}

}  // namespace

ValenceReport edges_of(const Diagram& d) {
  require_valid(d);
  const CanonicalForm cf = canonical_form(d);
  const std::vector<Strand> strands = strand_list(d, cf);

  ValenceReport r;
  r.v = strands.size();
  std::map<std::pair<std::string, std::uint8_t>, EdgeGroup> groups;
  for (const Strand& s : strands) {
    if (increasing_kind(s.kind)) {
      ++r.v_plus;
    } else if (decreasing_kind(s.kind)) {
      ++r.v_minus;
    } else {
      ++r.v_r3;
    }
    ++r.per_kind[kind_name(s.kind)];
    auto key = std::make_pair(s.target_cf.key, static_cast<std::uint8_t>(s.kind));
    auto it = groups.find(key);
    if (it == groups.end()) {
      EdgeGroup g;
      g.target_key = s.target_cf.key;
      g.kind = s.kind;
      g.multiplicity = 1;
      g.raw_sites = s.raw;
      g.site = s.rep;
      groups.emplace(std::move(key), std::move(g));
    } else {
      ++it->second.multiplicity;
      it->second.raw_sites += s.raw;
    }
  }
  r.edges.reserve(groups.size());
  for (auto& [k, g] : groups) r.edges.push_back(std::move(g));
  return r;
}

std::uint64_t valence(const Diagram& d) { return edges_of(d).v; }

std::optional<std::uint32_t> Ball::index_of(const std::string& key) const {
  for (std::uint32_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].key == key) return i;
  return std::nullopt;
}

namespace {

BallNode make_node(Diagram rep, const std::string& key, std::uint64_t period,
                   std::uint32_t dist) {
  BallNode n;
  n.key = key;
  n.rep = std::move(rep);
  n.dist = dist;
  n.info.cr = static_cast<std::uint32_t>(n.rep.crossings());
  n.info.alpha = 2 * n.info.cr;
  n.info.pk = pk_vector(n.rep);
  n.info.period = period;
  n.info.periodic = period > 1;
  n.info.hard = is_hard(n.rep);
  return n;
}

Ball build_ball(const Diagram& seed0, std::uint32_t radius,
                const BallBudget& budget, bool parallel) {
  Diagram seed = seed0;
  require_valid(seed);
  if (seed.mode == Mode::Planar && !seed.crossingless()) normalize_outer(seed);
  (void)parallel;

  Ball b;
  b.mode = seed.mode;
  b.radius = radius;

  CanonicalForm cf0 = canonical_form(seed);
  b.center = cf0.key;

  std::unordered_map<std::string, std::uint32_t> idx;
  std::vector<CanonicalForm> cfs;
  std::vector<std::uint8_t> expanded;
  auto add_node = [&](Diagram rep, CanonicalForm cf, std::uint32_t dist) {
    idx.emplace(cf.key, static_cast<std::uint32_t>(b.nodes.size()));
    b.nodes.push_back(make_node(std::move(rep), cf.key, cf.period, dist));
    cfs.push_back(std::move(cf));
    expanded.push_back(0);
  };
  add_node(seed, cf0, 0);

  // (a, b, kind from the lower-crossing side) -> strand multiplicity.
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint8_t>,
           std::uint32_t>
      edge_mult;

  auto expand_level = [&](std::uint32_t lo, std::uint32_t hi, bool create) {
    std::vector<std::vector<Strand>> results(hi - lo);
#if defined(RGRAPH_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(hi - lo); ++k) {
      results[static_cast<std::size_t>(k)] =
          strand_list(b.nodes[lo + static_cast<std::uint32_t>(k)].rep,
                      cfs[lo + static_cast<std::uint32_t>(k)]);
    }
    for (std::uint32_t i = lo; i < hi; ++i) {
      const std::vector<Strand>& strands = results[i - lo];
      b.nodes[i].info.valence = strands.size();
      const std::uint32_t next_dist = b.nodes[i].dist + 1;
      for (const Strand& s : strands) {
        auto it = idx.find(s.target_cf.key);
        std::uint32_t j;
        if (it == idx.end()) {
          if (!create) continue;
          if (budget.max_crossings != 0 &&
              s.target.crossings() > budget.max_crossings) {
            b.truncated = true;
            continue;
          }
          if (budget.max_nodes != 0 && b.nodes.size() >= budget.max_nodes) {
            b.truncated = true;
            continue;
          }
          j = static_cast<std::uint32_t>(b.nodes.size());
          add_node(s.target, s.target_cf, next_dist);
        } else {
          j = it->second;
        }
        if (expanded[j]) continue;  // edge already recorded from j's side
        const MoveKind lower = increasing_kind(s.kind) || s.kind == MoveKind::R3
                                   ? s.kind
                                   : plus_form(s.kind);
        const std::uint32_t a = std::min(i, j), c = std::max(i, j);
        edge_mult[{a, c, static_cast<std::uint8_t>(lower)}] += 1;
      }
      expanded[i] = 1;
    }
  };

  std::uint32_t lo = 0;
  for (std::uint32_t r = 0; r < radius; ++r) {
    const std::uint32_t hi = static_cast<std::uint32_t>(b.nodes.size());
    if (lo == hi) break;
    expand_level(lo, hi, true);
    lo = hi;
  }
  // Boundary pass: ambient valences of the outermost shell plus the induced
  // edges running inside it.  Neighbours outside the ball are not created.
  {
    const std::uint32_t hi = static_cast<std::uint32_t>(b.nodes.size());
    if (lo < hi) {
      expand_level(lo, hi, false);
    } else if (radius == 0) {
      b.nodes[0].info.valence = edges_of(b.nodes[0].rep).v;
    }
  }

  b.edges.reserve(edge_mult.size());
  for (const auto& [k, mult] : edge_mult) {
    BallEdge e;
    e.a = std::get<0>(k);
    e.b = std::get<1>(k);
    e.kind = static_cast<MoveKind>(std::get<2>(k));
    e.multiplicity = mult;
    b.edges.push_back(e);
  }
  return b;
}

}  // namespace

Ball ball(const Diagram& seed, std::uint32_t radius, const BallBudget& budget) {
  return build_ball(seed, radius, budget, true);
}

Ball ball_serial(const Diagram& seed, std::uint32_t radius,
                 const BallBudget& budget) {
  return build_ball(seed, radius, budget, false);
}

namespace {

// Pair adjacency of a ball with per-pair kind sets and total multiplicities.
struct PairView {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<MoveKind>> kinds;
  std::vector<std::set<std::uint32_t>> nbr;
  std::uint64_t self_edges = 0;

  explicit PairView(const Ball& b) : nbr(b.nodes.size()) {
    for (const BallEdge& e : b.edges) {
      if (e.a == e.b) {
        ++self_edges;
        continue;
      }
      const std::pair<std::uint32_t, std::uint32_t> p{std::min(e.a, e.b),
                                                      std::max(e.a, e.b)};
      kinds[p].insert(e.kind);
      nbr[e.a].insert(e.b);
      nbr[e.b].insert(e.a);
    }
  }
};

std::vector<std::array<std::uint32_t, 3>> node_triples(const PairView& pv) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (const auto& [p, k] : pv.kinds) {
    (void)k;
    const auto [a, b] = p;
    for (std::uint32_t c : pv.nbr[a]) {
      if (c <= b) continue;
      if (pv.nbr[b].count(c)) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace

std::vector<Triangle> triangles(const Ball& b) {
  PairView pv(b);
  std::vector<Triangle> out;
  for (const auto& t : node_triples(pv)) {
    Triangle tr;
    tr.a = t[0];
    tr.b = t[1];
    tr.c = t[2];
    auto kind_of = [&](std::uint32_t x, std::uint32_t y) {
      return *pv.kinds.at({std::min(x, y), std::max(x, y)}).begin();
    };
    tr.kinds = {kind_of(t[1], t[2]), kind_of(t[0], t[2]), kind_of(t[0], t[1])};
    out.push_back(tr);
  }
  return out;
}

TriangleReport check_triangle_theorem(const Ball& b) {
  PairView pv(b);
  TriangleReport r;
  r.self_edges = pv.self_edges;
  if (pv.self_edges)
    r.notes.push_back("self edges present: " + std::to_string(pv.self_edges));

  const auto triples = node_triples(pv);
  r.count = triples.size();
  std::set<std::array<std::uint32_t, 4>> quads;
  for (const auto& t : triples) {
    const std::array<std::pair<std::uint32_t, std::uint32_t>, 3> sides = {
        std::make_pair(t[1], t[2]), std::make_pair(t[0], t[2]),
        std::make_pair(t[0], t[1])};
    // Try to pick one kind per side realising an admissible pattern.
    auto can_pick = [&](MoveKind longk) {
      for (int lg = 0; lg < 3; ++lg) {
        bool ok = pv.kinds.at(sides[lg]).count(longk) > 0;
        for (int s = 0; s < 3 && ok; ++s) {
          if (s == lg) continue;
          ok = pv.kinds.at(sides[s]).count(MoveKind::R1plus) > 0;
        }
        if (ok) return true;
      }
      return false;
    };
    if (can_pick(MoveKind::RTplus)) {
      ++r.commuting;
    } else if (can_pick(MoveKind::R2plus)) {
      ++r.sporadic;
      if (r.notes.size() < 16) {
        r.notes.push_back("sporadic triangle at nodes " + std::to_string(t[0]) +
                          "," + std::to_string(t[1]) + "," +
                          std::to_string(t[2]));
      }
    } else {
      ++r.violations;
      if (r.notes.size() < 16) {
        r.notes.push_back("inadmissible triangle at nodes " +
                          std::to_string(t[0]) + "," + std::to_string(t[1]) +
                          "," + std::to_string(t[2]));
      }
    }
    for (std::uint32_t dnode : pv.nbr[t[0]]) {
      if (dnode <= t[2]) continue;
      if (pv.nbr[t[1]].count(dnode) && pv.nbr[t[2]].count(dnode))
        quads.insert({t[0], t[1], t[2], dnode});
    }
  }
  r.cliques4 = quads.size();
  if (r.cliques4)
    r.notes.push_back("4-cliques present: " + std::to_string(r.cliques4));
  r.ok = r.violations == 0 && r.cliques4 == 0 && r.self_edges == 0;
  return r;
}

namespace {

// ---------------------------------------------------------------------------
// Structure-blind layer.  The procedures below read nothing but adjacency,
// multiplicities, and (for static balls) node distances against the
// advertised radius.  They run against either a fixed Ball or a lazily grown
// graph through one interface.  Every list a procedure reads is guarded by
// complete(): a growing source satisfies the guard by expanding the node, a
// static one reports honestly whether the ball contains the full list, so a
// walk replayed on its own dump takes exactly the same path.

struct NbrEntry {
  std::uint32_t node = 0;
  std::uint32_t mult = 0;
};

struct NbrList {
  std::vector<NbrEntry> at;  // sorted by node; self-loops excluded
  std::uint64_t total = 0;
};

class BlindSource {
 public:
  virtual ~BlindSource() = default;
  virtual std::uint32_t count() = 0;
  virtual const NbrList& neighbors(std::uint32_t v) = 0;
  // Whether neighbors(v) is the full ambient edge list of v.
  virtual bool complete(std::uint32_t v) = 0;
};

bool list_has(const NbrList& l, std::uint32_t node) {
  auto it = std::lower_bound(
      l.at.begin(), l.at.end(), node,
      [](const NbrEntry& e, std::uint32_t n) { return e.node < n; });
  return it != l.at.end() && it->node == node;
}

std::uint32_t list_mult(const NbrList& l, std::uint32_t node) {
  auto it = std::lower_bound(
      l.at.begin(), l.at.end(), node,
      [](const NbrEntry& e, std::uint32_t n) { return e.node < n; });
  return it != l.at.end() && it->node == node ? it->mult : 0;
}

class StaticSource final : public BlindSource {
 public:
  explicit StaticSource(const Ball& b) : radius_(b.radius) {
    lists_.resize(b.nodes.size());
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> agg;
    for (const BallEdge& e : b.edges) {
      if (e.a == e.b) continue;
      agg[{e.a, e.b}] += e.multiplicity;
      agg[{e.b, e.a}] += e.multiplicity;
    }
    for (const auto& [k, m] : agg) {
      lists_[k.first].at.push_back({k.second, m});
      lists_[k.first].total += m;
    }
    dist_.reserve(b.nodes.size());
    for (const BallNode& n : b.nodes) dist_.push_back(n.dist);
  }

  std::uint32_t count() override {
    return static_cast<std::uint32_t>(lists_.size());
  }
  const NbrList& neighbors(std::uint32_t v) override { return lists_[v]; }
  bool complete(std::uint32_t v) override { return dist_[v] < radius_; }

 private:
  std::vector<NbrList> lists_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t radius_;
};

// Lazily grown graph over canonical isotopy classes.  Nodes keep only a
// representative diagram, the canonical key and the period; the full
// canonical form is recomputed when (and only when) a node is expanded.
class GrowSource final : public BlindSource {
 public:
  struct StrandRec {
    std::uint32_t target = 0;
    MoveKind kind = MoveKind::R1plus;  // as performed from this node
    std::uint32_t mult = 0;
  };

  explicit GrowSource(const Diagram& seed0) {
    Diagram seed = seed0;
    require_valid(seed);
    if (seed.mode == Mode::Planar && !seed.crossingless())
      normalize_outer(seed);
    const CanonicalForm cf = canonical_form(seed);
    intern(seed, cf.key, cf.period);
  }

  std::uint32_t count() override {
    return static_cast<std::uint32_t>(nodes_.size());
  }

  const NbrList& neighbors(std::uint32_t v) override {
    expand(v);
    return nodes_[v].nb;
  }

  bool complete(std::uint32_t v) override {
    expand(v);
    return true;
  }

  bool expanded(std::uint32_t v) const { return nodes_[v].expanded; }
  const Diagram& rep(std::uint32_t v) const { return nodes_[v].rep; }
  const std::string& key(std::uint32_t v) const { return nodes_[v].key; }
  std::uint64_t period(std::uint32_t v) const { return nodes_[v].period; }
  const std::vector<StrandRec>& strand_recs(std::uint32_t v) const {
    return nodes_[v].recs;
  }

 private:
  struct GNode {
    Diagram rep;
    std::string key;
    std::uint64_t period = 1;
    bool expanded = false;
    NbrList nb;
    std::vector<StrandRec> recs;
  };

  std::uint32_t intern(Diagram rep, const std::string& key,
                       std::uint64_t period) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    index_.emplace(key, id);
    GNode n;
    n.rep = std::move(rep);
    n.key = key;
    n.period = period;
    nodes_.push_back(std::move(n));
    return id;
  }

  void expand(std::uint32_t v) {
    if (nodes_[v].expanded) return;
    const CanonicalForm cf = canonical_form(nodes_[v].rep);
    const std::vector<Strand> strands = strand_list(nodes_[v].rep, cf);
    std::map<std::pair<std::uint32_t, std::uint8_t>, std::uint32_t> recs;
    std::map<std::uint32_t, std::uint32_t> agg;
    for (const Strand& s : strands) {
      const std::uint32_t j =
          intern(s.target, s.target_cf.key, s.target_cf.period);
      recs[{j, static_cast<std::uint8_t>(s.kind)}] += 1;
      if (j != v) agg[j] += 1;  // blind lists exclude self-loops
    }
    GNode& nd = nodes_[v];
    for (const auto& [k, m] : recs)
      nd.recs.push_back({k.first, static_cast<MoveKind>(k.second), m});
    for (const auto& [j, m] : agg) {
      nd.nb.at.push_back({j, m});
      nd.nb.total += m;
    }
    nd.expanded = true;
  }

  std::deque<GNode> nodes_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// v's own list is known in full.
std::optional<std::uint64_t> val_of(BlindSource& s, std::uint32_t v) {
  if (!s.complete(v)) return std::nullopt;
  return s.neighbors(v).total;
}

// v's list and every neighbour's list are known in full, so triangle
// membership at v can be decided exactly.
bool nbrs_complete(BlindSource& s, std::uint32_t v) {
  if (!s.complete(v)) return false;
  const std::vector<NbrEntry> nb = s.neighbors(v).at;
  for (const NbrEntry& e : nb)
    if (!s.complete(e.node)) return false;
  return true;
}

// Some third node is adjacent to both a and b.  Callers guarantee a's list
// is complete; membership is then a list intersection.
bool pair_in_triangle(BlindSource& s, std::uint32_t a, std::uint32_t b) {
  const std::vector<NbrEntry> na = s.neighbors(a).at;
  const NbrList& lb = s.neighbors(b);
  for (const NbrEntry& e : na) {
    if (e.node == a || e.node == b) continue;
    if (list_has(lb, e.node)) return true;
  }
  return false;
}

// Total multiplicity of v's triangle edges.
std::optional<std::uint64_t> ntr_of(BlindSource& s, std::uint32_t v) {
  if (!nbrs_complete(s, v)) return std::nullopt;
  std::uint64_t t = 0;
  const std::vector<NbrEntry> nb = s.neighbors(v).at;
  for (const NbrEntry& e : nb)
    if (pair_in_triangle(s, v, e.node)) t += e.mult;
  return t;
}

struct M1Label {
  bool fold = false;  // false: kink edge, true: fold edge
  int dir = 0;        // +1 increasing away from the focus node
};

// Classifies the triangle edges at x through valence comparisons.  Fails on
// incomplete data, valence ties, or conflicting assignments.
std::optional<std::map<std::uint32_t, M1Label>> m1_labels_at(BlindSource& s,
                                                             std::uint32_t x) {
  if (!nbrs_complete(s, x)) return std::nullopt;
  const std::uint64_t vx = s.neighbors(x).total;
  const std::vector<NbrEntry> nb = s.neighbors(x).at;
  std::map<std::uint32_t, M1Label> out;
  bool bad = false;
  auto put = [&](std::uint32_t node, bool fold, int dir) {
    auto [it, fresh] = out.emplace(node, M1Label{fold, dir});
    if (!fresh && (it->second.fold != fold || it->second.dir != dir))
      bad = true;
  };
  for (std::size_t i = 0; i < nb.size() && !bad; ++i) {
    for (std::size_t j = i + 1; j < nb.size() && !bad; ++j) {
      const std::uint32_t y = nb[i].node, z = nb[j].node;
      if (!list_has(s.neighbors(y), z)) continue;
      const std::uint64_t vy = s.neighbors(y).total;
      const std::uint64_t vz = s.neighbors(z).total;
      if (vx == vy || vx == vz || vy == vz) return std::nullopt;
      // Order the triangle by valence; position of x decides its two labels.
      if (vx < vy && vx < vz) {
        const std::uint32_t mid = vy < vz ? y : z;
        const std::uint32_t top = vy < vz ? z : y;
        put(mid, false, +1);
        put(top, true, +1);
      } else if (vx > vy && vx > vz) {
        const std::uint32_t bot = vy < vz ? y : z;
        const std::uint32_t mid = vy < vz ? z : y;
        put(bot, true, -1);
        put(mid, false, -1);
      } else {
        const std::uint32_t bot = vy < vz ? y : z;
        const std::uint32_t top = vy < vz ? z : y;
        put(bot, false, -1);
        put(top, false, +1);
      }
    }
  }
  if (bad) return std::nullopt;
  return out;
}

std::optional<std::uint32_t> kink_count(BlindSource& s, std::uint32_t x,
                                        const std::map<std::uint32_t, M1Label>& labs) {
  std::uint64_t c = 0;
  const std::vector<NbrEntry> nb = s.neighbors(x).at;
  for (const NbrEntry& e : nb) {
    auto it = labs.find(e.node);
    if (it != labs.end() && !it->second.fold && it->second.dir > 0)
      c += e.mult;
  }
  if (c == 0 || c % 8 != 0) return std::nullopt;
  return static_cast<std::uint32_t>(c / 8);
}

// Crossing number from adjacency structure alone.  Nonperiodic nodes are
// certified by a mate whose triangle-strand total jumps by exactly 17 (a
// generic kink adds 8 kinks, 8 folds and one tentacle strand); a periodic
// node is read by climbing kink -> fold -> stacked fold, where the added
// tentacle has destroyed all symmetry, and counting kinks up there.
std::optional<std::uint32_t> blind_cr(BlindSource& s, std::uint32_t x,
                                      bool allow_walk = true) {
  const auto nx = ntr_of(s, x);
  if (!nx) return std::nullopt;
  const auto labs = m1_labels_at(s, x);
  if (!labs || labs->empty()) return std::nullopt;

  std::map<std::uint32_t, std::uint64_t> mate_ntr;
  for (const auto& [y, L] : *labs) {
    const auto t = ntr_of(s, y);
    if (!t) return std::nullopt;
    mate_ntr[y] = *t;
    if (!L.fold && L.dir > 0 && *t == *nx + 17) return kink_count(s, x, *labs);
  }
  if (!allow_walk) return std::nullopt;

  // Periodic read.  d2: the heaviest fold target; d1: the heaviest kink
  // target under it; d3: the heaviest diagram completing the stacked
  // double triangle.
  std::uint32_t d2 = 0;
  bool have2 = false;
  std::uint64_t best2 = 0;
  for (const auto& [y, L] : *labs) {
    if (!L.fold || L.dir <= 0) continue;
    if (!have2 || mate_ntr[y] > best2) {
      have2 = true;
      best2 = mate_ntr[y];
      d2 = y;
    }
  }
  if (!have2) return std::nullopt;
  std::uint32_t d1 = 0;
  bool have1 = false;
  std::uint64_t best1 = 0;
  for (const auto& [y, L] : *labs) {
    if (L.fold || L.dir <= 0 || y == d2) continue;
    if (!list_has(s.neighbors(d2), y)) continue;
    if (!have1 || mate_ntr[y] > best1) {
      have1 = true;
      best1 = mate_ntr[y];
      d1 = y;
    }
  }
  if (!have1) return std::nullopt;

  std::optional<std::uint32_t> d3;
  std::uint64_t best3 = 0;
  const std::vector<NbrEntry> n1 = s.neighbors(d1).at;
  for (const NbrEntry& e : n1) {
    const std::uint32_t z = e.node;
    if (z == x || z == d1 || z == d2) continue;
    if (!list_has(s.neighbors(d2), z)) continue;
    const auto t = ntr_of(s, z);
    if (!t) return std::nullopt;
    if (!d3 || *t > best3) {
      d3 = z;
      best3 = *t;
    }
  }
  if (!d3) return std::nullopt;
  const auto labs3 = m1_labels_at(s, *d3);
  if (!labs3) return std::nullopt;
  const auto c3 = kink_count(s, *d3, *labs3);
  if (!c3 || *c3 < 3) return std::nullopt;
  return *c3 - 3;
}

}  // namespace

std::vector<EdgeLabel> label_moves_from_graph(const Ball& b) {
  StaticSource s(b);
  std::vector<EdgeLabel> out(b.edges.size());

  // Pair-level adjacency, blind (edge endpoints and multiplicities only).
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const BallEdge& e : b.edges) {
    if (e.a == e.b) continue;
    pairs.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  }

  struct PairLabel {
    std::string cls;
    int dir = 0;  // +1: first -> second of the (min, max) pair increases
    bool conflict = false;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, PairLabel> lab;
  auto propose = [&](std::uint32_t xa, std::uint32_t xb, const std::string& c,
                     int dir_ab) {
    const std::pair<std::uint32_t, std::uint32_t> p{std::min(xa, xb),
                                                    std::max(xa, xb)};
    const int dir = xa < xb ? dir_ab : -dir_ab;
    auto [it, fresh] = lab.emplace(p, PairLabel{c, dir, false});
    if (!fresh && (it->second.cls != c || it->second.dir != dir))
      it->second.conflict = true;
  };

  // Triangle pass: classify kink and fold edges by valence ordering.
  std::vector<std::array<std::uint32_t, 3>> triples;
  {
    std::vector<std::set<std::uint32_t>> nbr(b.nodes.size());
    for (const auto& p : pairs) {
      nbr[p.first].insert(p.second);
      nbr[p.second].insert(p.first);
    }
    for (const auto& p : pairs) {
      for (std::uint32_t c : nbr[p.first]) {
        if (c <= p.second) continue;
        if (nbr[p.second].count(c)) triples.push_back({p.first, p.second, c});
      }
    }
  }
  for (const auto& t : triples) {
    const auto v0 = val_of(s, t[0]), v1 = val_of(s, t[1]), v2 = val_of(s, t[2]);
    if (!v0 || !v1 || !v2) continue;
    std::array<std::pair<std::uint64_t, std::uint32_t>, 3> byval = {
        std::make_pair(*v0, t[0]), std::make_pair(*v1, t[1]),
        std::make_pair(*v2, t[2])};
    std::sort(byval.begin(), byval.end());
    if (byval[0].first == byval[1].first || byval[1].first == byval[2].first)
      continue;
    const std::uint32_t bot = byval[0].second, mid = byval[1].second,
                        top = byval[2].second;
    propose(bot, mid, "R1", +1);
    propose(mid, top, "R1", +1);
    propose(bot, top, "RT", +1);
  }

  // Crossing-count pass for the remaining edges.
  std::map<std::uint32_t, std::optional<std::uint32_t>> cr_memo;
  auto cr_of = [&](std::uint32_t v) -> std::optional<std::uint32_t> {
    auto it = cr_memo.find(v);
    if (it != cr_memo.end()) return it->second;
    auto r = blind_cr(s, v);
    cr_memo.emplace(v, r);
    return r;
  };
  for (const auto& p : pairs) {
    if (lab.count(p)) continue;  // triangle edge, already treated
    const auto ca = cr_of(p.first), cb = cr_of(p.second);
    if (ca && cb) {
      const std::int64_t delta = static_cast<std::int64_t>(*cb) -
                                 static_cast<std::int64_t>(*ca);
      if (delta == 0) {
        lab.emplace(p, PairLabel{"R3", 0, false});
      } else if (delta == 2 || delta == -2) {
        lab.emplace(p, PairLabel{"R2", delta > 0 ? +1 : -1, false});
      }
      continue;
    }
    // One absolute count plus the partner's triangle-strand total still
    // separates the three possibilities: that total grows by roughly
    // sixteen per crossing.
    std::optional<std::uint32_t> known;
    std::uint32_t other = 0;
    if (ca) {
      known = ca;
      other = p.second;
    } else if (cb) {
      known = cb;
      other = p.first;
    }
    if (!known) continue;
    const auto tn = ntr_of(s, other);
    if (!tn) continue;
    std::int64_t best_delta = 0, best_score = -1, runner_up = -1;
    for (const std::int64_t delta : {-2, 0, 2}) {
      const std::int64_t target_cr = static_cast<std::int64_t>(*known) + delta;
      if (target_cr < 0) continue;
      const std::int64_t score =
          std::abs(static_cast<std::int64_t>(*tn) - 16 * target_cr);
      if (best_score < 0 || score < best_score) {
        runner_up = best_score;
        best_score = score;
        best_delta = delta;
      } else if (runner_up < 0 || score < runner_up) {
        runner_up = score;
      }
    }
    if (best_score < 0 || (runner_up >= 0 && runner_up - best_score < 8))
      continue;
    const int dir_from_known = best_delta > 0 ? +1 : best_delta < 0 ? -1 : 0;
    const int dir = (ca ? +1 : -1) * dir_from_known;
    lab.emplace(p, PairLabel{best_delta == 0 ? "R3" : "R2",
                             best_delta == 0 ? 0 : dir, false});
  }

  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    const BallEdge& e = b.edges[i];
    if (e.a == e.b) continue;
    auto it = lab.find({std::min(e.a, e.b), std::max(e.a, e.b)});
    if (it == lab.end() || it->second.conflict) continue;
    out[i].cls = it->second.cls;
    // Ball edges store a < b, and pair labels are oriented the same way.
    out[i].direction = e.a < e.b ? it->second.dir : -it->second.dir;
  }
  return out;
}

std::uint32_t read_cr_from_graph(const Ball& b, std::uint32_t node) {
  if (node >= b.nodes.size())
    throw std::out_of_range("read_cr_from_graph: node index out of range");
  StaticSource s(b);
  const auto r = blind_cr(s, node);
  if (!r)
    throw budget_exceeded(
        "read_cr_from_graph: ball too small for the crossing-number walk "
        "at this node");
  return *r;
}

Ball walk_neighborhood(const Diagram& seed, bool enable_labels) {
  GrowSource src(seed);
  // Drive the blind read once so every list it consults gets expanded.
  (void)blind_cr(src, 0);
  if (enable_labels) {
    // The crossing-count pass at the center's non-triangle edges reads the
    // triangle-strand totals of those neighbours; expand the lists that
    // takes.
    const auto labs0 = m1_labels_at(src, 0);
    const std::vector<NbrEntry> nb0 = src.neighbors(0).at;
    for (const NbrEntry& e : nb0) {
      if (labs0 && labs0->count(e.node)) continue;
      const std::vector<NbrEntry> ne = src.neighbors(e.node).at;
      for (const NbrEntry& w : ne) (void)src.complete(w.node);
    }
  }

  Ball b;
  b.mode = src.rep(0).mode;
  b.radius = 4;
  b.truncated = true;
  b.center = src.key(0);

  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint8_t>,
           std::uint32_t>
      edge_mult;
  for (std::uint32_t v = 0; v < src.count(); ++v) {
    if (!src.expanded(v)) continue;
    for (const GrowSource::StrandRec& rec : src.strand_recs(v)) {
      const std::uint32_t j = rec.target;
      if (j != v && src.expanded(j) && j < v) continue;
      const MoveKind lower =
          increasing_kind(rec.kind) || rec.kind == MoveKind::R3
              ? rec.kind
              : plus_form(rec.kind);
      edge_mult[{std::min(v, j), std::max(v, j),
                 static_cast<std::uint8_t>(lower)}] += rec.mult;
    }
  }

  for (std::uint32_t v = 0; v < src.count(); ++v) {
    BallNode n = make_node(src.rep(v), src.key(v), src.period(v), 0);
    n.info.valence = src.expanded(v) ? src.neighbors(v).total : 0;
    b.nodes.push_back(std::move(n));
  }
  for (const auto& [k, mult] : edge_mult) {
    BallEdge e;
    e.a = std::get<0>(k);
    e.b = std::get<1>(k);
    e.kind = static_cast<MoveKind>(std::get<2>(k));
    e.multiplicity = mult;
    b.edges.push_back(e);
  }
  // Distances over the dumped edges.  Nodes the walk consulted but never
  // expanded sit at the horizon: their distance is pinned to the radius, so
  // that a static replay sees their neighbour lists as incomplete exactly
  // where the live walk would have expanded further.
  {
    std::vector<std::vector<std::uint32_t>> adj(b.nodes.size());
    for (const BallEdge& e : b.edges) {
      if (e.a == e.b) continue;
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<std::uint32_t> dist(b.nodes.size(), kUnreached);
    std::queue<std::uint32_t> q;
    dist[0] = 0;
    q.push(0);
    while (!q.empty()) {
      const std::uint32_t v = q.front();
      q.pop();
      for (std::uint32_t w : adj[v]) {
        if (dist[w] != kUnreached) continue;
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
    for (std::uint32_t v = 0; v < b.nodes.size(); ++v) {
      if (!src.expanded(v)) {
        b.nodes[v].dist = b.radius;
      } else {
        b.nodes[v].dist = dist[v] == kUnreached ? b.radius : dist[v];
      }
    }
  }
  return b;
}

ValenceChangeReport verify_valence_change(const Diagram& d,
                                          const MoveSite& m) {
  require_valid(d);
  ValenceChangeReport r;
  r.kind = m.kind;
  auto skip = [&](const std::string& why) {
    r.skipped = true;
    r.reason = why;
    return r;
  };
  if (!increasing_kind(m.kind))
    return skip("only increasing moves carry valence-change equations");
  if (d.crossingless())
    return skip("crossingless source has special-cased moves");
  const CanonicalForm cf = canonical_form(d);
  if (cf.period > 1) return skip("periodic source");
  const Diagram t = apply_move(d, m);
  if (canonical_form(t).period > 1) return skip("periodic target");

  const Faces f = faces(d);
  const bool planar = d.mode == Mode::Planar;
  auto is_outer = [&](Dart x) {
    return planar && f.face_of[x] == f.outer_face;
  };

  std::int64_t predicted = 0;
  const std::int64_t a = m.regions[0], b2 = m.regions[1], c = m.regions[2],
                     dd = m.regions[3];
  if (m.kind == MoveKind::R1plus || m.kind == MoveKind::RTplus) {
    const bool a_ext = is_outer(m.loc[0]);
    const bool b_ext = is_outer(d.theta[m.loc[0]]);
    if (a_ext && b_ext) return skip("both touched regions are the outer face");
    r.internal = !a_ext && !b_ext;
    if (m.kind == MoveKind::R1plus) {
      predicted = a_ext ? 2 + 8 * a + 2 * b2
                 : b_ext ? 6 + 4 * a + 4 * b2
                         : 8 + 4 * a + 2 * b2;
    } else {
      predicted = a_ext ? -8 + 16 * a + 2 * b2
                 : b_ext ? 10 + 8 * a + 4 * b2
                         : 12 + 8 * a + 2 * b2;
    }
  } else {  // R2plus
    if (m.outer_half) return skip("outer-routed push not covered");
    const Dart p = m.loc[0], q = m.loc[1];
    if (is_outer(p) || is_outer(q) || is_outer(d.theta[p]) ||
        is_outer(d.theta[q]))
      return skip("push touches the outer face");
    r.internal = true;
    const bool merged = f.face_of[d.theta[p]] == f.face_of[d.theta[q]];
    predicted = merged ? 8 + 4 * (2 * a + b2 + c) - 2 * b2 * c
                       : 16 + 4 * (a + b2 + c + dd) - 2 * b2 * c;
  }
  r.predicted_dvplus = predicted;

  const ValenceReport before = edges_of(d);
  const ValenceReport after = edges_of(t);
  r.v_before = before.v;
  r.v_after = after.v;
  r.vplus_before = before.v_plus;
  r.vplus_after = after.v_plus;
  r.measured_dvplus = static_cast<std::int64_t>(after.v_plus) -
                      static_cast<std::int64_t>(before.v_plus);
  r.epsilon_sum = (static_cast<std::int64_t>(after.v) -
                   static_cast<std::int64_t>(before.v)) -
                  predicted;
  r.ok = r.measured_dvplus == predicted;
  if (m.kind == MoveKind::R1plus) {
    r.ok = r.ok && r.epsilon_sum >= -6 && r.epsilon_sum <= 6 &&
           r.v_after > r.v_before;
  }
  return r;
}

PkVector recover_pk_from_ball(const Ball& b, std::uint32_t node) {
  if (node >= b.nodes.size())
    throw std::out_of_range("recover_pk_from_ball: node index out of range");
  if (b.mode == Mode::Planar)
    throw hypothesis_violated(
        "recover_pk_from_ball: outer-face equation variants are not "
        "blind-readable; use sphere balls");
  // Hypothesis enforcement reads node metadata (the recovery below is
  // structural): every diagram in the 1-ball must be nonperiodic.
  if (b.nodes[node].info.periodic)
    throw hypothesis_violated("recover_pk_from_ball: node is periodic");
  for (const BallEdge& e : b.edges) {
    if (e.a != node && e.b != node) continue;
    const std::uint32_t other = e.a == node ? e.b : e.a;
    if (other != node && b.nodes[other].info.periodic)
      throw hypothesis_violated(
          "recover_pk_from_ball: periodic neighbour in the 1-ball");
  }

  StaticSource s(b);
  if (!s.complete(node))
    throw budget_exceeded(
        "recover_pk_from_ball: need the full 2-neighbourhood of the node");
  const auto vnode = val_of(s, node);
  const std::vector<NbrEntry> nb = s.neighbors(node).at;
  for (const NbrEntry& e : nb) {
    if (!s.complete(e.node))
      throw budget_exceeded(
          "recover_pk_from_ball: neighbour lists outside the ball");
  }

  std::map<std::uint32_t, std::uint64_t> entries;  // face size -> kink count
  std::uint64_t ntri = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const std::uint32_t y = nb[i].node, z = nb[j].node;
      if (!list_has(s.neighbors(y), z)) continue;
      ++ntri;
      const std::uint64_t vy = s.neighbors(y).total;
      const std::uint64_t vz = s.neighbors(z).total;
      if (vy == vz)
        throw hypothesis_violated(
            "recover_pk_from_ball: triangle mates with equal valence");
      if (!(*vnode < vy && *vnode < vz))
        throw hypothesis_violated(
            "recover_pk_from_ball: node is not the bottom of its triangle "
            "(one-sided regions present)");
      const std::uint32_t mid = vy < vz ? y : z;
      const std::uint64_t vmid = std::min(vy, vz), vtop = std::max(vy, vz);
      if (list_mult(s.neighbors(node), mid) != 1)
        throw hypothesis_violated(
            "recover_pk_from_ball: kink multi-edge at a nonperiodic node");
      const std::int64_t gap =
          static_cast<std::int64_t>(vtop) - static_cast<std::int64_t>(vmid) -
          29;
      if (gap < 8 || gap % 4 != 0)
        throw hypothesis_violated(
            "recover_pk_from_ball: triangle valence gap does not fit the "
            "kink equations");
      entries[static_cast<std::uint32_t>(gap / 4)] += 1;
    }
  }
  if (ntri == 0)
    throw hypothesis_violated("recover_pk_from_ball: no kink triangles");
  if (ntri % 8 != 0)
    throw hypothesis_violated(
        "recover_pk_from_ball: triangle count is not a multiple of eight");
  const std::uint64_t cr = ntri / 8;

  PkVector pk;
  std::uint64_t total_faces = 0;
  for (const auto& [a, cnt] : entries) {
    if (cnt % (2ull * a) != 0)
      throw hypothesis_violated(
          "recover_pk_from_ball: kink entries do not divide evenly");
    pk.counts[a] = cnt / (2ull * a);
    total_faces += pk.counts[a];
  }
  if (total_faces != cr + 2)
    throw hypothesis_violated(
        "recover_pk_from_ball: recovered census fails the face count");
  return pk;
}

namespace {

struct SearchOut {
  DeltaSearchResult res;
  FiltrationReport filt;
};

SearchOut bfs_search(const Diagram& seed0, const SearchBudget& budget) {
  Diagram seed = seed0;
  require_valid(seed);
  if (seed.mode == Mode::Planar && !seed.crossingless()) normalize_outer(seed);

  SearchOut out;
  std::set<std::string> seen;
  struct Item {
    Diagram rep;
    CanonicalForm cf;
    std::uint32_t dist;
  };
  std::deque<Item> queue;
  {
    CanonicalForm cf = canonical_form(seed);
    seen.insert(cf.key);
    queue.push_back({std::move(seed), std::move(cf), 0});
  }

  std::uint64_t explored = 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::set<std::string> witnesses;
  std::map<std::uint64_t, std::uint64_t> val_counts;
  std::map<std::uint32_t, std::uint64_t> level_counts;
  double crhat = std::numeric_limits<double>::infinity();
  bool cut = false;
  std::uint32_t first_cut = kUnreached;
  std::uint32_t last_complete_level = 0;
  bool drained = true;

  while (!queue.empty()) {
    if (explored >= budget.max_nodes) {
      drained = false;
      break;
    }
    Item item = std::move(queue.front());
    queue.pop_front();
    const std::vector<Strand> strands = strand_list(item.rep, item.cf);
    ++explored;
    ++level_counts[item.dist];
    last_complete_level = item.dist;
    const std::uint64_t v = strands.size();
    ++val_counts[v];
    if (v < best) {
      best = v;
      witnesses.clear();
    }
    if (v == best && witnesses.size() < 64) witnesses.insert(item.cf.key);
    std::uint64_t kinks = 0;
    for (const Strand& s : strands)
      if (s.kind == MoveKind::R1plus) ++kinks;
    crhat = std::min(crhat, static_cast<double>(kinks) / 8.0);
    for (const Strand& s : strands) {
      if (seen.count(s.target_cf.key)) continue;
      if (budget.max_crossings != 0 &&
          s.target.crossings() > budget.max_crossings) {
        cut = true;
        first_cut = std::min(first_cut, item.dist);
        continue;
      }
      seen.insert(s.target_cf.key);
      queue.push_back({s.target, s.target_cf, item.dist + 1});
    }
  }

  DeltaSearchResult& r = out.res;
  r.best_valence = best == std::numeric_limits<std::uint64_t>::max() ? 0 : best;
  r.witnesses.assign(witnesses.begin(), witnesses.end());
  r.explored = explored;
  // Any diagram with a crossing keeps at least four increasing strands (two
  // kink signs and two fold signs are never related by a symmetry), so a
  // minimum of three is attained by the crossingless diagram alone and
  // nothing unexplored can undercut it.
  r.certified = r.best_valence <= 3 && explored > 0;
  r.search_scope = std::string(seed0.mode == Mode::Sphere ? "sphere" : "planar") +
                   " bfs, cr<=" + std::to_string(budget.max_crossings) +
                   ", nodes<=" + std::to_string(budget.max_nodes) +
                   (drained && !cut ? ", component exhausted"
                    : cut           ? ", crossing budget cut"
                                    : ", node budget reached");

  FiltrationReport& ft = out.filt;
  // Only radii the search enumerated in full are reported: the level being
  // processed when the node budget hit is dropped, and a crossing cut at
  // level L leaves everything past L unreliable.
  std::uint32_t trust_max = kUnreached;
  if (!drained)
    trust_max = last_complete_level == 0 ? 0 : last_complete_level - 1;
  trust_max = std::min(trust_max, first_cut);
  std::uint64_t cum = 0;
  for (const auto& [lvl, cnt] : level_counts) {
    cum += cnt;
    if (lvl <= trust_max) ft.f_values[lvl] = cum;
  }
  std::uint64_t gcum = 0;
  for (const auto& [v, cnt] : val_counts) {
    gcum += cnt;
    ft.g_values[v] = gcum;
  }
  ft.m_lower = r.certified ? r.best_valence : 3;
  ft.cr_hat_upper = explored == 0 ? 0.0 : crhat;
  ft.approximate = !(drained && !cut);
  return out;
}

}  // namespace

DeltaSearchResult delta_search(const Diagram& seed, const SearchBudget& budget) {
  return bfs_search(seed, budget).res;
}

FiltrationReport filtration(const Diagram& seed, const SearchBudget& budget) {
  return bfs_search(seed, budget).filt;
}

struct LazyRGraph::Impl {
  explicit Impl(const Diagram& seed) : src(seed) {}
  GrowSource src;
  std::unordered_map<std::uint32_t, std::vector<Nbr>> memo;
};

LazyRGraph::LazyRGraph(const Diagram& seed) : impl_(new Impl(seed)) {}
LazyRGraph::~LazyRGraph() = default;
LazyRGraph::LazyRGraph(LazyRGraph&&) noexcept = default;
LazyRGraph& LazyRGraph::operator=(LazyRGraph&&) noexcept = default;

const std::vector<LazyRGraph::Nbr>& LazyRGraph::neighbors(std::uint32_t node) {
  auto it = impl_->memo.find(node);
  if (it != impl_->memo.end()) return it->second;
  const NbrList& l = impl_->src.neighbors(node);
  std::vector<Nbr> v;
  v.reserve(l.at.size());
  for (const NbrEntry& e : l.at) v.push_back({e.node, e.mult});
  return impl_->memo.emplace(node, std::move(v)).first->second;
}

std::uint64_t LazyRGraph::valence(std::uint32_t node) {
  return impl_->src.neighbors(node).total;
}

std::uint64_t LazyRGraph::nodes_discovered() const {
  return impl_->src.count();
}

}  // namespace rgraph
