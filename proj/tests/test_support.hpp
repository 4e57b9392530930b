#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <utility>
#include <vector>

#include "rgraph/diagram.hpp"

namespace testsupport {

using rgraph::Dart;
using rgraph::Diagram;

// Relabels crossings by perm and rotates each crossing's dart positions by
// rot[c].  An odd rotation swaps which passage sits at {1,3}, so the over
// bit flips with it.  The result is the same diagram under new labels.
inline Diagram relabel(const Diagram& d, const std::vector<std::uint32_t>& perm,
                       const std::vector<std::uint32_t>& rot) {
  const std::size_t n = d.crossings();
  Diagram r;
  r.mode = d.mode;
  r.theta.assign(d.darts(), 0);
  r.over.assign(n, 0);
  auto m = [&](Dart x) {
    const std::uint32_t c = Diagram::crossing_of(x);
    return static_cast<Dart>(4 * perm[c] + ((Diagram::pos_of(x) + rot[c]) & 3));
  };
  for (Dart x = 0; x < d.darts(); ++x) r.theta[m(x)] = m(d.theta[x]);
  for (std::uint32_t c = 0; c < n; ++c)
    r.over[perm[c]] = d.over[c] ^ static_cast<std::uint8_t>(rot[c] & 1);
  if (d.mode == rgraph::Mode::Planar && !d.crossingless()) {
    r.outer = m(d.outer);
    rgraph::normalize_outer(r);
  }
  return r;
}

inline Diagram random_relabel(const Diagram& d, std::mt19937_64& rng) {
  const std::size_t n = d.crossings();
  std::vector<std::uint32_t> perm(n), rot(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& r : rot) r = static_cast<std::uint32_t>(rng() & 3);
  return relabel(d, perm, rot);
}

// Independent automorphism search: a symmetry is determined by the image of
// dart 0 and must commute with sigma and theta, preserve over flags, and fix
// the outer face in planar mode.
inline std::vector<std::vector<Dart>> brute_automorphisms(const Diagram& d) {
  const std::size_t nd = d.darts();
  std::vector<std::vector<Dart>> out;
  if (nd == 0) {
    out.push_back({});
    return out;
  }
  const auto f = rgraph::faces(d);
  for (Dart r = 0; r < nd; ++r) {
    std::vector<Dart> g(nd, rgraph::kNoDart);
    std::vector<Dart> stack{0};
    g[0] = r;
    bool ok = true;
    while (!stack.empty() && ok) {
      const Dart x = stack.back();
      stack.pop_back();
      const Dart gx = g[x];
      const std::array<std::pair<Dart, Dart>, 2> next{{
          {Diagram::sigma(x), Diagram::sigma(gx)},
          {d.theta[x], d.theta[gx]},
      }};
      for (const auto& [y, gy] : next) {
        if (g[y] == rgraph::kNoDart) {
          g[y] = gy;
          stack.push_back(y);
        } else if (g[y] != gy) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> seen(nd, 0);
    for (Dart x = 0; x < nd && ok; ++x) {
      if (g[x] == rgraph::kNoDart || seen[g[x]]) {
        ok = false;
        break;
      }
      seen[g[x]] = 1;
      if (d.over_flag(g[x]) != d.over_flag(x)) ok = false;
    }
    if (ok && d.mode == rgraph::Mode::Planar)
      ok = f.face_of[g[d.outer]] == f.outer_face;
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testsupport
