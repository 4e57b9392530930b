#include "rgraph/homology.hpp"

namespace rgraph {

std::vector<std::int64_t> smith_diagonal(std::vector<std::int64_t> m,
                                         std::size_t rows, std::size_t cols) {
  (void)m;
  (void)rows;
  (void)cols;
  throw unsupported_operation("smith_diagonal: not implemented");
}

LocalComplex local_complex(const Ball& b, std::uint32_t node) {
  (void)b;
  (void)node;
  throw unsupported_operation("local_complex: not implemented");
}

}  // namespace rgraph
