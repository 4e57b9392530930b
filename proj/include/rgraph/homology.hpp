#pragma once

#include <cstdint>
#include <vector>

#include "rgraph/graph.hpp"

namespace rgraph {

// 2-complex spanned by a node's radius-1 neighborhood: a 1-cell per
// parallel edge strand, a 2-cell per triangle and choice of strand on
// each side.  Betti numbers over Q, torsion of H1 over Z.
struct LocalComplex {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t triangles = 0;
  std::int64_t b0 = 0, b1 = 0, b2 = 0;
  std::vector<std::uint64_t> torsion;  // nontrivial invariant factors of H1
};

// b must contain the full radius-1 neighborhood of the node.
LocalComplex local_complex(const Ball& b, std::uint32_t node = 0);

// Smith normal form diagonal of an integer matrix (row-major, r x c).
std::vector<std::int64_t> smith_diagonal(std::vector<std::int64_t> m,
                                         std::size_t rows, std::size_t cols);

}  // namespace rgraph
