// Copyright 2026 The rotlabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "support/oracles.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "rotlabel/exact.h"

namespace rotlabel::testing {
namespace {

using Quad = std::array<Point, 4>;

Quad rotated_corners(const AnchoredLabel& l, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const Point o = l.corner_offset();
  const double xs[4] = {o.x, o.x + l.width, o.x + l.width, o.x};
  const double ys[4] = {o.y, o.y, o.y + l.height, o.y + l.height};
  Quad q;
  for (int k = 0; k < 4; ++k) {
    q[k] = {l.anchor.x + c * xs[k] - s * ys[k], l.anchor.y + s * xs[k] + c * ys[k]};
  }
  return q;
}

std::pair<double, double> project(const Quad& q, double ux, double uy) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : q) {
    const double t = p.x * ux + p.y * uy;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

double nearest(const std::vector<double>& pts, double a) {
  double best = std::numeric_limits<double>::infinity();
  for (const double p : pts) best = std::min(best, circular_distance(p, a));
  return best;
}

}  // namespace

bool rotated_overlap(const AnchoredLabel& a, const AnchoredLabel& b, double alpha) {
  const Quad qa = rotated_corners(a, alpha);
  const Quad qb = rotated_corners(b, alpha);
  // Both rectangles share their edge directions, so two axes suffice.
  const double axes[2][2] = {{std::cos(alpha), std::sin(alpha)},
                             {-std::sin(alpha), std::cos(alpha)}};
  for (const auto& ax : axes) {
    const auto [alo, ahi] = project(qa, ax[0], ax[1]);
    const auto [blo, bhi] = project(qb, ax[0], ax[1]);
    if (!(alo < bhi && blo < ahi)) return false;
  }
  return true;
}

bool rotated_covers(const AnchoredLabel& a, Point p, double alpha) {
  const Quad q = rotated_corners(a, alpha);
  for (int k = 0; k < 4; ++k) {
    const Point u = q[k];
    const Point v = q[(k + 1) % 4];
    const double cross = (v.x - u.x) * (p.y - u.y) - (v.y - u.y) * (p.x - u.x);
    if (!(cross > 0.0)) return false;
  }
  return true;
}

OracleReport compare_with_sampling(const AngularSet& set, const AnchoredLabel& a,
                                   const AnchoredLabel& b, Relation rel,
                                   std::size_t probes, double tol) {
  auto pred = [&](double alpha) {
    return rel == Relation::kSoft ? rotated_overlap(a, b, alpha)
                                  : rotated_covers(a, b.anchor, alpha);
  };
  std::vector<double> endpoints;
  for (const CircularInterval& arc : set.intervals()) {
    if (arc.is_full()) continue;
    endpoints.push_back(arc.start());
    endpoints.push_back(arc.end());
  }

  OracleReport rep;
  for (std::size_t k = 0; k < probes; ++k) {
    const double alpha = (static_cast<double>(k) + 0.5) * kTwoPi /
                         static_cast<double>(probes);
    if (pred(alpha) != set.contains(alpha) && nearest(endpoints, alpha) >= tol) {
      ++rep.probe_mismatches;
    }
  }

  constexpr double kStep = 1e-4;
  const auto steps = static_cast<std::size_t>(std::ceil(kTwoPi / kStep));
  const double h = kTwoPi / static_cast<double>(steps);
  std::vector<double> boundaries;
  bool prev = pred(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double hi_angle = k == steps ? kTwoPi : static_cast<double>(k) * h;
    const bool cur = pred(hi_angle);
    if (cur != prev) {
      double lo = hi_angle - h;
      double hi = hi_angle;
      while (hi - lo > 1e-9) {
        const double mid = (lo + hi) / 2;
        (pred(mid) == prev ? lo : hi) = mid;
      }
      boundaries.push_back((lo + hi) / 2);
    }
    prev = cur;
  }
  for (const double bnd : boundaries) {
    const double d = nearest(endpoints, bnd);
    rep.max_boundary_deviation = std::max(rep.max_boundary_deviation, d);
    if (d > tol) ++rep.boundary_misses;
  }
  for (const double e : endpoints) {
    const double d = nearest(boundaries, e);
    rep.max_boundary_deviation = std::max(rep.max_boundary_deviation, d);
    if (d > tol) ++rep.extra_endpoints;
  }
  return rep;
}

std::pair<AnchoredLabel, AnchoredLabel> random_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dim(0.5, 2.0);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> corner(0, 3);
  AnchoredLabel a;
  AnchoredLabel b;
  a.id = 0;
  b.id = 1;
  a.width = dim(rng);
  a.height = dim(rng);
  b.width = dim(rng);
  b.height = dim(rng);
  a.corner = kAllCorners[corner(rng)];
  b.corner = kAllCorners[corner(rng)];
  a.anchor = {pos(rng), pos(rng)};
  const double reach = a.diagonal() + b.diagonal();
  double dist = 0.0;
  while (dist == 0.0) dist = 1.2 * reach * unit(rng);
  const double dir = kTwoPi * unit(rng);
  b.anchor = {a.anchor.x + dist * std::cos(dir), a.anchor.y + dist * std::sin(dir)};
  return {a, b};
}

Instance random_instance(std::mt19937_64& rng, std::size_t n, double region,
                         double lo, double hi) {
  std::uniform_real_distribution<double> dim(lo, hi);
  std::uniform_real_distribution<double> pos(0.0, region);
  std::uniform_int_distribution<int> corner(0, 3);
  std::vector<AnchoredLabel> labels;
  while (labels.size() < n) {
    AnchoredLabel l;
    l.id = static_cast<int>(labels.size());
    l.anchor = {pos(rng), pos(rng)};
    l.width = dim(rng);
    l.height = dim(rng);
    l.corner = kAllCorners[corner(rng)];
    const bool clash = std::any_of(labels.begin(), labels.end(), [&](const AnchoredLabel& o) {
      return o.anchor == l.anchor;
    });
    if (!clash) labels.push_back(l);
  }
  return Instance(std::move(labels));
}

BruteForceResult brute_force_optimum(const ConflictStructure& cs,
                                     const ModelConfig& cfg) {
  const std::size_t n = cs.label_count();
  const std::vector<double>& ev = cs.events();
  const std::size_t J = ev.size() - 1;
  BruteForceResult best;

  if (cfg.ranges == RangeModel::kZeroOne) {
    std::size_t top = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!(s >> i & 1)) continue;
        if (cfg.hard() && !cs.forbidden(i).empty()) ok = false;
      }
      for (const auto& p : cs.pairs()) {
        if ((s >> p.i & 1) && (s >> p.j & 1)) ok = false;
      }
      if (ok) top = std::max<std::size_t>(top, std::popcount(s));
    }
    best.activity = from_ticks(static_cast<std::int64_t>(top) * to_ticks(kTwoPi));
    best.ranges = top;
    return best;
  }

  // Per interval: labels allowed, and conflicting pairs as bit masks.
  std::vector<std::uint32_t> allowed(J, (1u << n) - 1);
  std::vector<std::vector<std::uint32_t>> adj(J, std::vector<std::uint32_t>(n, 0));
  std::vector<std::int64_t> ticks(J);
  for (std::size_t j = 0; j < J; ++j) {
    const double mid = (ev[j] + ev[j + 1]) / 2;
    ticks[j] = to_ticks(ev[j + 1]) - to_ticks(ev[j]);
    for (std::size_t i = 0; i < n; ++i) {
      if (cfg.hard() && cs.forbidden(i).contains(mid)) allowed[j] &= ~(1u << i);
    }
    for (const auto& p : cs.pairs()) {
      if (p.soft.contains(mid)) {
        adj[j][p.i] |= 1u << p.j;
        adj[j][p.j] |= 1u << p.i;
      }
    }
  }

  const auto budget = cfg.range_budget();
  const std::uint32_t cap = budget ? static_cast<std::uint32_t>(*budget) + 1 : 2;
  struct Value {
    std::int64_t ticks;
    std::int64_t runs;  // linear runs summed over labels
  };
  auto better = [](const Value& a, const Value& b) {
    return a.ticks != b.ticks ? a.ticks > b.ticks : a.runs < b.runs;
  };
  // Key: first mask | prev mask << 8 | per-label run counts (4 bits) << 16.
  std::unordered_map<std::uint64_t, Value> states{{0, {0, 0}}};
  for (std::size_t j = 0; j < J; ++j) {
    std::unordered_map<std::uint64_t, Value> next;
    for (const auto& [key, val] : states) {
      const std::uint32_t first = key & 0xff;
      const std::uint32_t prev = (key >> 8) & 0xff;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if ((s & ~allowed[j]) != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          if ((s >> i & 1) && (adj[j][i] & s)) ok = false;
        }
        if (!ok) continue;
        std::uint64_t runs = key >> 16;
        std::int64_t starts = 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (!(s >> i & 1)) continue;
          if (j == 0 || !(prev >> i & 1)) {
            ++starts;
            std::uint64_t r = (runs >> (4 * i)) & 0xf;
            if (r + 1 > cap) {
              if (budget) ok = false;
              continue;  // saturated count for unlimited ranges
            }
            runs += std::uint64_t{1} << (4 * i);
          }
        }
        if (!ok) continue;
        const std::uint32_t nfirst = j == 0 ? s : first;
        const std::uint64_t nkey = nfirst | (std::uint64_t{s} << 8) | (runs << 16);
        const Value nv{val.ticks + ticks[j] * std::popcount(s), val.runs + starts};
        const auto it = next.find(nkey);
        if (it == next.end() || better(nv, it->second)) next[nkey] = nv;
      }
    }
    states = std::move(next);
  }

  bool have = false;
  Value top{0, 0};
  for (const auto& [key, val] : states) {
    const std::uint32_t first = key & 0xff;
    const std::uint32_t last = (key >> 8) & 0xff;
    const std::uint64_t runs = key >> 16;
    Value v = val;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t r = (runs >> (4 * i)) & 0xf;
      std::uint64_t circ = r;
      if (r >= 2 && (first >> i & 1) && (last >> i & 1)) {
        --circ;
        --v.runs;
      }
      if (budget && circ > static_cast<std::uint64_t>(*budget)) ok = false;
    }
    if (ok && (!have || better(v, top))) {
      top = v;
      have = true;
    }
  }
  best.activity = from_ticks(top.ticks);
  best.ranges = static_cast<std::size_t>(top.runs);
  return best;
}

}  // namespace rotlabel::testing
