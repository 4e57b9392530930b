#include "rgraph/pd_code.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <vector>

namespace rgraph {

namespace {

// PD entry j of a crossing (counterclockwise from the incoming under strand)
// lands on dart position (4 - j) & 3.  Positions run counterclockwise too,
// but position 0 must be an *outgoing* under dart for the over-bit layout
// used here (over[i] = 1 puts {1,3} over), which reverses the listing.
constexpr std::uint32_t pd_pos(std::uint32_t j) { return (4u - j) & 3u; }

}  // namespace

Diagram from_pd(const std::string& text) {
  std::vector<long> labels;
  bool neg = false;
  bool in_num = false;
  long cur = 0;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + (c - '0');
      in_num = true;
    } else {
      if (in_num) labels.push_back(neg ? -cur : cur);
      cur = 0;
      in_num = false;
      neg = (c == '-');
    }
  }
  if (in_num) labels.push_back(neg ? -cur : cur);

  if (labels.empty()) throw parse_error("pd: no arc labels found");
  if (labels.size() % 4 != 0)
    throw parse_error("pd: label count is not a multiple of four");
  const std::uint32_t n = static_cast<std::uint32_t>(labels.size() / 4);

  // dart for each (crossing, entry) pair; pair up equal labels with theta.
  std::map<long, std::vector<Dart>> where;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) {
      long lab = labels[4 * i + j];
      if (lab < 0) throw parse_error("pd: negative arc label");
      where[lab].push_back(4 * i + pd_pos(j));
    }

  Diagram d;
  d.mode = Mode::Sphere;
  d.theta.assign(4 * n, kNoDart);
  d.over.assign(n, 1);
  for (const auto& [lab, ds] : where) {
    if (ds.size() != 2)
      throw parse_error("pd: arc label " + std::to_string(lab) +
                        " appears " + std::to_string(ds.size()) +
                        " times, expected exactly 2");
    d.theta[ds[0]] = ds[1];
    d.theta[ds[1]] = ds[0];
  }
  for (Dart x = 0; x < 4 * n; ++x)
    if (d.theta[x] == kNoDart || d.theta[x] == x)
      throw parse_error("pd: arc pairing is not a fixed-point-free involution");

  ValidationReport rep = validate(d);
  if (!rep.ok) {
    std::string msg = "pd: decoded diagram invalid";
    for (const auto& e : rep.errors) msg += "; " + e;
    throw invalid_diagram(msg);
  }
  return d;
}

}  // namespace rgraph
