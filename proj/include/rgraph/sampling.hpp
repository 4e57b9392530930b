#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rgraph/diagram.hpp"
#include "rgraph/moves.hpp"

namespace rgraph {

// Random knot diagram with exactly cr crossings, built by a random
// increasing walk from the crossingless diagram.
Diagram random_diagram(std::mt19937_64& rng, std::uint32_t cr, Mode mode);

// Random walk in the move graph from start, rejecting steps that exceed
// max_cr crossings.
Diagram random_walk_from(const Diagram& start, std::mt19937_64& rng,
                         std::uint32_t steps, std::uint32_t max_cr);

struct SampleConfig {
  std::uint64_t seed = 1;
  std::uint32_t count = 100;
  std::uint32_t min_cr = 1;
  std::uint32_t max_cr = 8;
  bool nonperiodic_only = false;
};

// Deterministic corpus of distinct diagrams under the config.
std::vector<Diagram> sample_corpus(const SampleConfig& cfg, Mode mode);

// Greedy-with-backtrack search for a monotone-ish reduction to fewer
// crossings; returns the least-crossing diagram reached within budget.
Diagram reduce(const Diagram& d, std::uint64_t budget);

// Whether d reduces to the crossingless diagram within budget.
bool reduces_to_crossingless(const Diagram& d, std::uint64_t budget);

}  // namespace rgraph
