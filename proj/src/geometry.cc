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

#include "rotlabel/geometry.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace rotlabel {

AngularSet slab_arcs(double r, double phase, double lo, double hi) {
  if (!(r > 0.0)) throw std::invalid_argument("slab_arcs: radius must be > 0");
  const double u = lo / r;
  const double v = hi / r;
  if (u >= v || u >= 1.0 || v <= -1.0) return {};

  // β = phase - α.  cos β > u  <=>  β in (-acos u, acos u).
  AngularSet above = AngularSet::full();
  if (u > -1.0) {
    const double a = std::acos(u);
    above = AngularSet(CircularInterval::from_start_length(phase - a, 2.0 * a));
  }
  // cos β < v  <=>  β in (acos v, 2π - acos v).
  AngularSet below = AngularSet::full();
  if (v < 1.0) {
    const double b = std::acos(v);
    below = AngularSet(
        CircularInterval::from_start_length(phase + b, kTwoPi - 2.0 * b));
  }
  return intersect(above, below);
}

namespace {

struct Polar {
  double r;
  double theta;
};

Polar anchor_offset(const AnchoredLabel& from, const AnchoredLabel& to) {
  const double dx = to.anchor.x - from.anchor.x;
  const double dy = to.anchor.y - from.anchor.y;
  const double r = std::hypot(dx, dy);
  if (!(r > 0.0)) {
    throw std::invalid_argument("labels " + std::to_string(from.id) + " and " +
                                std::to_string(to.id) +
                                " share an anchor point");
  }
  return {r, std::atan2(dy, dx)};
}

// Set of α with r·(cos(θ-α), sin(θ-α)) in (x0, x1) × (y0, y1).
AngularSet box_arcs(const Polar& d, double x0, double x1, double y0,
                    double y1) {
  AngularSet xs = slab_arcs(d.r, d.theta, x0, x1);
  if (xs.empty()) return xs;
  return intersect(xs, slab_arcs(d.r, d.theta - kPi / 2.0, y0, y1));
}

}  // namespace

AngularSet soft_conflict_set(const AnchoredLabel& l1, const AnchoredLabel& l2) {
  const Polar d = anchor_offset(l1, l2);
  if (d.r > l1.diagonal() + l2.diagonal()) return {};
  const Point a1 = l1.corner_offset();
  const Point a2 = l2.corner_offset();
  return box_arcs(d, a1.x - a2.x - l2.width, a1.x + l1.width - a2.x,
                  a1.y - a2.y - l2.height, a1.y + l1.height - a2.y);
}

AngularSet hard_conflict_set(const AnchoredLabel& l1, const AnchoredLabel& l2) {
  const Polar d = anchor_offset(l1, l2);
  if (d.r > l1.diagonal()) return {};
  const Point a1 = l1.corner_offset();
  return box_arcs(d, a1.x, a1.x + l1.width, a1.y, a1.y + l1.height);
}

namespace {

// Snaps all endpoints that lie within kEventEpsilon of each other onto one
// representative, and returns the sorted representatives including 0, 2π.
class EventSnapper {
 public:
  void add(const AngularSet& s) {
    for (const auto& seg : s.segments()) {
      raw_.push_back(seg.lo);
      raw_.push_back(seg.hi);
    }
  }

  void finalize() {
    raw_.push_back(0.0);
    raw_.push_back(kTwoPi);
    std::sort(raw_.begin(), raw_.end());
    raw_.erase(std::unique(raw_.begin(), raw_.end()), raw_.end());
    rep_.resize(raw_.size());
    std::size_t start = 0;
    while (start < raw_.size()) {
      std::size_t end = start + 1;
      while (end < raw_.size() && raw_[end] - raw_[start] <= kEventEpsilon) {
        ++end;
      }
      double value = raw_[start];
      if (value <= kEventEpsilon) value = 0.0;
      if (raw_[end - 1] >= kTwoPi - kEventEpsilon) value = kTwoPi;
      for (std::size_t k = start; k < end; ++k) rep_[k] = value;
      if (events_.empty() || events_.back() != value) events_.push_back(value);
      start = end;
    }
  }

  double snap(double v) const {
    const auto it = std::lower_bound(raw_.begin(), raw_.end(), v);
    return rep_[static_cast<std::size_t>(it - raw_.begin())];
  }

  AngularSet snap(const AngularSet& s) const {
    if (s.empty()) return s;
    std::vector<Segment> segs;
    segs.reserve(s.segments().size());
    for (const auto& seg : s.segments()) {
      segs.push_back({snap(seg.lo), snap(seg.hi)});
    }
    return AngularSet::from_segments(std::move(segs));
  }

  std::vector<double> take_events() { return std::move(events_); }

 private:
  std::vector<double> raw_;
  std::vector<double> rep_;
  std::vector<double> events_;
};

}  // namespace

ConflictStructure::ConflictStructure(std::size_t label_count,
                                     std::vector<PairConflict> pairs,
                                     std::vector<AngularSet> extra_forbidden)
    : label_count_(label_count), extra_forbidden_(std::move(extra_forbidden)) {
  if (!extra_forbidden_.empty() && extra_forbidden_.size() != label_count_) {
    throw std::invalid_argument(
        "ConflictStructure: extra_forbidden must have one entry per label");
  }
  EventSnapper snapper;
  for (const auto& p : pairs) {
    if (p.i >= label_count_ || p.j >= label_count_ || p.i == p.j) {
      throw std::invalid_argument("ConflictStructure: bad pair indices");
    }
    snapper.add(p.soft);
    snapper.add(p.hard_i_covers_j);
    snapper.add(p.hard_j_covers_i);
  }
  for (const auto& s : extra_forbidden_) snapper.add(s);
  snapper.finalize();

  for (auto& p : pairs) {
    if (p.i > p.j) {
      std::swap(p.i, p.j);
      std::swap(p.hard_i_covers_j, p.hard_j_covers_i);
    }
    p.soft = snapper.snap(p.soft);
    p.hard_i_covers_j = snapper.snap(p.hard_i_covers_j);
    p.hard_j_covers_i = snapper.snap(p.hard_j_covers_i);
  }
  for (auto& s : extra_forbidden_) s = snapper.snap(s);
  std::erase_if(pairs, [](const PairConflict& p) { return p.soft.empty(); });
  std::sort(pairs.begin(), pairs.end(),
            [](const PairConflict& a, const PairConflict& b) {
              return a.i < b.i || (a.i == b.i && a.j < b.j);
            });
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].i == pairs[k - 1].i && pairs[k].j == pairs[k - 1].j) {
      throw std::invalid_argument("ConflictStructure: duplicate pair");
    }
  }
  pairs_ = std::move(pairs);

  // Events are rebuilt from what survived snapping, so dropped slivers do
  // not leave stray atomic intervals behind.
  EventSnapper kept;
  for (const auto& p : pairs_) {
    kept.add(p.soft);
    kept.add(p.hard_i_covers_j);
    kept.add(p.hard_j_covers_i);
  }
  for (const auto& s : extra_forbidden_) kept.add(s);
  kept.finalize();
  events_ = kept.take_events();

  incident_.assign(label_count_, {});
  forbidden_.assign(label_count_, AngularSet{});
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto& p = pairs_[k];
    incident_[p.i].push_back(k);
    incident_[p.j].push_back(k);
    if (!p.hard_i_covers_j.empty()) {
      forbidden_[p.i] = unite(forbidden_[p.i], p.hard_i_covers_j);
    }
    if (!p.hard_j_covers_i.empty()) {
      forbidden_[p.j] = unite(forbidden_[p.j], p.hard_j_covers_i);
    }
  }
  for (std::size_t i = 0; i < extra_forbidden_.size(); ++i) {
    if (!extra_forbidden_[i].empty()) {
      forbidden_[i] = unite(forbidden_[i], extra_forbidden_[i]);
    }
  }
}

ConflictStats ConflictStructure::stats() const {
  ConflictStats s;
  s.labels = label_count_;
  s.events = events_.size() - 2;
  s.pairs = pairs_.size();
  for (const auto& inc : incident_) s.max_degree = std::max(s.max_degree, inc.size());
  return s;
}

ConflictStructure ConflictStructure::restrict_to(
    std::span<const std::size_t> labels,
    std::span<const std::size_t> hard_sources) const {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(label_count_, kAbsent);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] >= label_count_ || local[labels[k]] != kAbsent) {
      throw std::invalid_argument("restrict_to: bad or repeated label index");
    }
    local[labels[k]] = k;
  }
  std::vector<bool> is_source(label_count_, false);
  for (const std::size_t s : hard_sources) {
    if (s >= label_count_) {
      throw std::invalid_argument("restrict_to: bad hard source index");
    }
    is_source[s] = true;
  }

  std::vector<PairConflict> sub_pairs;
  std::vector<AngularSet> extra(labels.size());
  bool any_extra = false;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!extra_forbidden_.empty() && !extra_forbidden_[labels[k]].empty()) {
      extra[k] = extra_forbidden_[labels[k]];
      any_extra = true;
    }
  }
  for (const auto& p : pairs_) {
    const std::size_t li = local[p.i];
    const std::size_t lj = local[p.j];
    if (li != kAbsent && lj != kAbsent) {
      sub_pairs.push_back({li, lj, p.soft, p.hard_i_covers_j, p.hard_j_covers_i});
    } else if (li != kAbsent && is_source[p.j] && !p.hard_i_covers_j.empty()) {
      extra[li] = unite(extra[li], p.hard_i_covers_j);
      any_extra = true;
    } else if (lj != kAbsent && is_source[p.i] && !p.hard_j_covers_i.empty()) {
      extra[lj] = unite(extra[lj], p.hard_j_covers_i);
      any_extra = true;
    }
  }
  if (!any_extra) extra.clear();
  return ConflictStructure(labels.size(), std::move(sub_pairs), std::move(extra));
}

ConflictStructure build_conflicts(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n == 0) return ConflictStructure(0, {});
  const double cell = inst.max_diagonal();

  // Uniform grid with cell size = largest diagonal; any conflicting pair is
  // at most two cells apart in each direction.
  auto cell_of = [cell](double v) {
    return static_cast<std::int64_t>(std::floor(v / cell));
  };
  auto key = [](std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^
           (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
  };
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[key(cell_of(inst[i].anchor.x), cell_of(inst[i].anchor.y))].push_back(i);
  }

  std::vector<PairConflict> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const AnchoredLabel& a = inst[i];
    const std::int64_t cx = cell_of(a.anchor.x);
    const std::int64_t cy = cell_of(a.anchor.y);
    for (std::int64_t dx = -2; dx <= 2; ++dx) {
      for (std::int64_t dy = -2; dy <= 2; ++dy) {
        const auto it = grid.find(key(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (const std::size_t j : it->second) {
          if (j <= i) continue;
          const AnchoredLabel& b = inst[j];
          const double dist =
              std::hypot(b.anchor.x - a.anchor.x, b.anchor.y - a.anchor.y);
          if (dist > a.diagonal() + b.diagonal()) continue;
          AngularSet soft = soft_conflict_set(a, b);
          if (soft.empty()) continue;
          pairs.push_back({i, j, std::move(soft), hard_conflict_set(a, b),
                           hard_conflict_set(b, a)});
        }
      }
    }
  }
  return ConflictStructure(n, std::move(pairs));
}

}  // namespace rotlabel
