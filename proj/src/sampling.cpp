#include "rgraph/sampling.hpp"

namespace rgraph {

Diagram random_diagram(std::mt19937_64& rng, std::uint32_t cr, Mode mode) {
  (void)rng;
  (void)cr;
  (void)mode;
  throw unsupported_operation("random_diagram: not implemented");
}

Diagram random_walk_from(const Diagram& start, std::mt19937_64& rng,
                         std::uint32_t steps, std::uint32_t max_cr) {
  (void)start;
  (void)rng;
  (void)steps;
  (void)max_cr;
  throw unsupported_operation("random_walk_from: not implemented");
}

std::vector<Diagram> sample_corpus(const SampleConfig& cfg, Mode mode) {
  (void)cfg;
  (void)mode;
  throw unsupported_operation("sample_corpus: not implemented");
}

Diagram reduce(const Diagram& d, std::uint64_t budget) {
  (void)budget;
  throw unsupported_operation("reduce: not implemented");
}

bool reduces_to_crossingless(const Diagram& d, std::uint64_t budget) {
  (void)d;
  (void)budget;
  throw unsupported_operation("reduces_to_crossingless: not implemented");
}

}  // namespace rgraph
