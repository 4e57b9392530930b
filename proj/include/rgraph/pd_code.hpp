#pragma once

#include <string>

#include "rgraph/diagram.hpp"

namespace rgraph {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads planar diagram code text such as "PD[X[4,2,5,1], X[8,6,1,5], ...]".
// Any grouping of integers into runs of four is accepted; each group lists
// the arc labels around one crossing counterclockwise starting from the
// incoming under strand (the standard planar-diagram convention).  Labels
// must each appear exactly twice overall.
Diagram from_pd(const std::string& text);

}  // namespace rgraph
