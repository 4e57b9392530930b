#include "rgraph/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace rgraph {

namespace {

struct dsu {
  std::vector<std::uint32_t> p;
  explicit dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(std::uint32_t a, std::uint32_t b) { p[find(a)] = find(b); }
};

}  // namespace

int smooth_and_link(const Diagram& d, std::uint32_t c) {
  const std::uint32_t n = d.crossings();
  if (c >= n) throw invalid_diagram("smooth_and_link: no such crossing");
  const auto aligned = alignment(d);
  dsu uf(d.darts());
  for (Dart x = 0; x < d.darts(); ++x) uf.join(x, d.theta[x]);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (e == c) continue;
    uf.join(4 * e, 4 * e + 2);
    uf.join(4 * e + 1, 4 * e + 3);
  }
  // Oriented smoothing at c: the strand entering on one passage leaves on
  // the other passage's outgoing dart.
  const Dart a_in = aligned[4 * c] ? 4 * c + 2 : 4 * c;
  const Dart a_out = Diagram::opp(a_in);
  const Dart b_in = aligned[4 * c + 1] ? 4 * c + 3 : 4 * c + 1;
  const Dart b_out = Diagram::opp(b_in);
  uf.join(a_in, b_out);
  uf.join(b_in, a_out);

  int sum = 0;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (e == c) continue;
    if (uf.find(4 * e) != uf.find(4 * e + 1))
      sum += crossing_sign(d, e);
  }
  return sum / 2;
}

IlkValue& IlkValue::operator+=(const IlkValue& o) {
  for (const auto& [k, v] : o.xs)
    if ((xs[k] += v) == 0) xs.erase(k);
  for (const auto& [k, v] : o.ys)
    if ((ys[k] += v) == 0) ys.erase(k);
  return *this;
}

IlkValue IlkValue::operator-(const IlkValue& o) const {
  IlkValue r = *this;
  for (const auto& [k, v] : o.xs)
    if ((r.xs[k] -= v) == 0) r.xs.erase(k);
  for (const auto& [k, v] : o.ys)
    if ((r.ys[k] -= v) == 0) r.ys.erase(k);
  return r;
}

IlkValue ilk(const Diagram& d) {
  IlkValue r;
  for (std::uint32_t c = 0; c < d.crossings(); ++c) {
    const int l = smooth_and_link(d, c);
    if (crossing_sign(d, c) > 0)
      ++r.xs[l];
    else
      ++r.ys[l];
  }
  return r;
}

SiTuple si_tuple(const Diagram& d) {
  const Faces f = faces(d);
  std::vector<std::uint32_t> per_face(f.faces.size(), 0);
  for (std::uint32_t c = 0; c < d.crossings(); ++c) {
    std::array<std::uint32_t, 4> corner_face{};
    for (std::uint32_t p = 0; p < 4; ++p)
      corner_face[p] = f.face_of[4 * c + ((p + 1) & 3)];
    for (std::size_t i = 0; i < f.faces.size(); ++i) {
      const auto hits = static_cast<std::uint32_t>(
          std::count(corner_face.begin(), corner_face.end(), i));
      if (hits >= 2) ++per_face[i];
    }
  }
  std::sort(per_face.begin(), per_face.end());
  return per_face;
}

}  // namespace rgraph
