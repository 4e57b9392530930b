#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgraph/diagram.hpp"
#include "rgraph/moves.hpp"

namespace rgraph {

struct hypothesis_violated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One edge of the Reidemeister graph as seen from a fixed source diagram.
// Parallel strands between the same pair of isotopy classes are separate
// edges; an EdgeGroup bundles the strands sharing one target class.
struct EdgeGroup {
  std::string target_key;
  MoveKind kind = MoveKind::R1plus;  // as performed from the source side
  std::uint32_t multiplicity = 1;    // parallel strands to this target
  std::uint64_t raw_sites = 1;       // concrete applications merged in
  MoveSite site;                     // one representative application
};

struct ValenceReport {
  std::uint64_t v = 0;        // total edge strands at the node
  std::uint64_t v_plus = 0;   // increasing strands (R1+, R2+, RT+)
  std::uint64_t v_minus = 0;  // decreasing strands
  std::uint64_t v_r3 = 0;     // slide strands
  std::map<std::string, std::uint64_t> per_kind;
  std::vector<EdgeGroup> edges;
};

// All edges at d, with strand multiplicities.  Sites related by an
// orientation-preserving symmetry of d, or landing on the same concrete
// reverse site of the target, belong to one strand.
ValenceReport edges_of(const Diagram& d);
std::uint64_t valence(const Diagram& d);

struct BallBudget {
  std::uint64_t max_nodes = 0;      // 0 = unbounded
  std::uint32_t max_crossings = 0;  // 0 = unbounded; larger targets are cut
};

// Reporting metadata cached on ball nodes.  Structure-blind procedures
// (label_moves_from_graph, read_cr_from_graph) must not look at it.
struct BallNodeInfo {
  std::uint32_t cr = 0;
  std::uint32_t alpha = 0;
  PkVector pk;
  std::uint64_t period = 1;
  std::uint64_t valence = 0;  // in the ambient graph, not the ball
  bool hard = false;
  bool periodic = false;
};

struct BallNode {
  std::string key;
  Diagram rep;
  std::uint32_t dist = 0;
  BallNodeInfo info;
};

struct BallEdge {
  std::uint32_t a = 0, b = 0;        // node indices, a < b
  MoveKind kind = MoveKind::R1plus;  // named from the lower-crossing side
  std::uint32_t multiplicity = 1;
};

struct Ball {
  Mode mode = Mode::Sphere;
  std::string center;
  std::uint32_t radius = 0;
  std::vector<BallNode> nodes;  // nodes[0] is the center
  std::vector<BallEdge> edges;
  bool truncated = false;  // a budget cut part of the ball off

  std::optional<std::uint32_t> index_of(const std::string& key) const;
};

// Induced subgraph on the diagrams within the given distance of seed.
// ball() may fan frontier expansion out over OpenMP threads; ball_serial()
// is the reference implementation.  Results are identical.
Ball ball(const Diagram& seed, std::uint32_t radius, const BallBudget& budget = {});
Ball ball_serial(const Diagram& seed, std::uint32_t radius, const BallBudget& budget = {});

struct Triangle {
  std::uint32_t a = 0, b = 0, c = 0;  // node indices, sorted
  std::array<MoveKind, 3> kinds;      // kinds of edges bc, ac, ab
};

std::vector<Triangle> triangles(const Ball& b);

struct TriangleReport {
  std::uint64_t count = 0;      // triangles found
  std::uint64_t commuting = 0;  // kink-over-kink pattern (two R1, one RT)
  std::uint64_t sporadic = 0;   // stacked-curl pattern (two R1, one R2)
  std::uint64_t violations = 0;
  std::uint64_t cliques4 = 0;
  std::uint64_t self_edges = 0;
  bool ok = false;
  std::vector<std::string> notes;
};

// Checks that every triangle is of one of the two admissible shapes and
// that no self-edges or 4-cliques occur.
TriangleReport check_triangle_theorem(const Ball& b);

struct EdgeLabel {
  // "R1", "R2", "RT", "R3", or "?" when the edge sits too close to the
  // ball boundary to classify.
  std::string cls = "?";
  int direction = 0;  // +1: a->b increases crossings; -1 decreases; 0: R3
};

// Classifies ball edges from adjacency structure alone (triangle
// membership, valence comparisons, crossing-count walks).  Node metadata
// and stored kinds are never consulted.  Needs radius >= 4 around the
// edges to be labeled; unreachable labels stay "?".
std::vector<EdgeLabel> label_moves_from_graph(const Ball& b);

// Crossing number of a node read off the labeled graph: an eighth of its
// increasing kink strands, corrected through a fold+kink walk when the
// node is periodic.  Uses adjacency structure only.
std::uint32_t read_cr_from_graph(const Ball& b, std::uint32_t node = 0);

// Partial radius-4 ball around seed containing exactly the region the
// crossing-number walk and the center's edge labeling consult.  Full
// radius-4 balls are astronomically large, so this grows nodes on demand
// by running the blind procedures against the live graph; the result is
// always marked truncated.  Valences of nodes the walk never expanded are
// reported as 0.
Ball walk_neighborhood(const Diagram& seed);

struct ValenceChangeReport {
  bool skipped = false;  // periodic endpoint: equation not asserted
  std::string reason;
  MoveKind kind = MoveKind::R1plus;
  bool internal = true;
  std::uint64_t v_before = 0, v_after = 0;
  std::uint64_t vplus_before = 0, vplus_after = 0;
  std::int64_t predicted_dvplus = 0;  // face-size equation
  std::int64_t measured_dvplus = 0;
  std::int64_t epsilon_sum = 0;  // residual of the full-valence identity
  bool ok = false;
};

// Applies the increasing move at m and checks the exact valence-change
// equations on the positive part, plus the bounded residual on the full
// valence for kinks.
ValenceChangeReport verify_valence_change(const Diagram& d, const MoveSite& m);

// Face-size vector of a node recovered from its distance-2 neighborhood:
// each increasing kink edge is paired with the fold edge completing its
// triangle, and the positive-valence jump between the two upper endpoints
// reveals the size of the face the kink grew.  Requires every node in
// sight nonperiodic.
PkVector recover_pk_from_ball(const Ball& b, std::uint32_t node = 0);

struct SearchBudget {
  std::uint64_t max_nodes = 100000;
  std::uint32_t max_crossings = 16;
};

struct DeltaSearchResult {
  std::uint64_t best_valence = 0;
  std::vector<std::string> witnesses;  // keys attaining best_valence
  std::string search_scope;
  std::uint64_t explored = 0;
  bool certified = false;  // lower bounds exclude everything unexplored
};

// Minimum valence over the explored component.  certified is set only
// when the linear lower bound (v >= 4 for any diagram with a crossing)
// already beats every diagram outside the explored set.
DeltaSearchResult delta_search(const Diagram& seed, const SearchBudget& budget = {});

struct FiltrationReport {
  std::map<std::uint32_t, std::uint64_t> f_values;  // radius -> ball size
  std::map<std::uint64_t, std::uint64_t> g_values;  // m -> #{v(D) <= m}
  std::uint64_t m_lower = 0;
  double cr_hat_upper = 0.0;  // min over nodes of (increasing kinks)/8
  bool approximate = true;
};

FiltrationReport filtration(const Diagram& seed, const SearchBudget& budget = {});

// Opaque-identifier view of the graph for structure-blind procedures:
// node 0 is the seed, neighbors are discovered lazily and memoized, and
// nothing about the underlying diagrams leaks out.
class LazyRGraph {
 public:
  explicit LazyRGraph(const Diagram& seed);
  ~LazyRGraph();
  LazyRGraph(LazyRGraph&&) noexcept;
  LazyRGraph& operator=(LazyRGraph&&) noexcept;

  struct Nbr {
    std::uint32_t node = 0;
    std::uint32_t multiplicity = 1;
  };

  std::uint32_t seed() const { return 0; }
  const std::vector<Nbr>& neighbors(std::uint32_t node);
  std::uint64_t valence(std::uint32_t node);
  std::uint64_t nodes_discovered() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rgraph
