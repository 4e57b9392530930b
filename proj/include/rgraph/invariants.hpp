#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rgraph/diagram.hpp"

namespace rgraph {

// Linking number of the two-component projection obtained by the oriented
// smoothing of crossing c: half the signed count of crossings joining the
// two components.
int smooth_and_link(const Diagram& d, std::uint32_t c);

// Element of the free abelian group on symbols X_s, Y_s (s an integer).
// Positive crossings contribute X_{lk}, negative ones Y_{lk}.
struct IlkValue {
  std::map<int, std::int64_t> xs;
  std::map<int, std::int64_t> ys;

  IlkValue& operator+=(const IlkValue& o);
  IlkValue operator-(const IlkValue& o) const;
  bool zero() const { return xs.empty() && ys.empty(); }
  bool operator==(const IlkValue& o) const = default;
};

IlkValue ilk(const Diagram& d);

// Sorted per-face self-touch counts: a crossing counts for a face when the
// face holds at least two of its four corners.
using SiTuple = std::vector<std::uint32_t>;
SiTuple si_tuple(const Diagram& d);

}  // namespace rgraph
