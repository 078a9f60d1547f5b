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

#include "rotlabel/angular.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rotlabel {

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a value just below a multiple of 2π can round up to 2π.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

std::int64_t length_key(double length) { return std::llround(length * 1e12); }

CircularInterval::CircularInterval(double start, double end) {
  const double a = normalize_angle(start);
  double b = normalize_angle(end);
  if (b == 0.0) b = kTwoPi;
  if (a == b) return;
  const double len = a < b ? b - a : (kTwoPi - a) + b;
  if (len <= kAngularEpsilon) return;
  if (len >= kTwoPi - kAngularEpsilon) {
    *this = full();
    return;
  }
  start_ = a;
  end_ = b;
  kind_ = Kind::kProper;
}

CircularInterval CircularInterval::full() {
  CircularInterval c;
  c.start_ = 0.0;
  c.end_ = kTwoPi;
  c.kind_ = Kind::kFull;
  return c;
}

CircularInterval CircularInterval::from_start_length(double start,
                                                     double length) {
  if (length >= kTwoPi - kAngularEpsilon) return full();
  if (length <= kAngularEpsilon) return {};
  return {start, start + length};
}

double CircularInterval::length() const {
  switch (kind_) {
    case Kind::kEmpty:
      return 0.0;
    case Kind::kFull:
      return kTwoPi;
    case Kind::kProper:
      break;
  }
  return start_ < end_ ? end_ - start_ : (kTwoPi - start_) + end_;
}

bool CircularInterval::contains(double alpha) const {
  if (kind_ == Kind::kEmpty) return false;
  if (kind_ == Kind::kFull) return true;
  const double a = normalize_angle(alpha);
  if (start_ < end_) return a >= start_ && a < end_;
  return a >= start_ || a < end_;
}

AngularSet::AngularSet(const CircularInterval& interval) {
  if (interval.empty()) return;
  if (interval.is_full()) {
    segments_ = {{0.0, kTwoPi}};
    return;
  }
  if (interval.wraps()) {
    segments_ = {{0.0, interval.end()}, {interval.start(), kTwoPi}};
  } else {
    segments_ = {{interval.start(), interval.end()}};
  }
}

AngularSet AngularSet::full() {
  AngularSet s;
  s.segments_ = {{0.0, kTwoPi}};
  return s;
}

AngularSet AngularSet::from_intervals(std::span<const CircularInterval> arcs) {
  std::vector<Segment> segs;
  segs.reserve(arcs.size() * 2);
  for (const auto& arc : arcs) {
    const AngularSet piece(arc);
    segs.insert(segs.end(), piece.segments_.begin(), piece.segments_.end());
  }
  return from_segments(std::move(segs));
}

AngularSet AngularSet::from_segments(std::vector<Segment> segments) {
  for (auto& s : segments) {
    s.lo = std::clamp(s.lo, 0.0, kTwoPi);
    s.hi = std::clamp(s.hi, 0.0, kTwoPi);
    if (s.lo <= kAngularEpsilon) s.lo = 0.0;
    if (s.hi >= kTwoPi - kAngularEpsilon) s.hi = kTwoPi;
  }
  std::erase_if(segments,
                [](const Segment& s) { return s.hi - s.lo <= kAngularEpsilon; });
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) {
              return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
            });
  AngularSet out;
  for (const auto& s : segments) {
    if (!out.segments_.empty() &&
        s.lo <= out.segments_.back().hi + kAngularEpsilon) {
      out.segments_.back().hi = std::max(out.segments_.back().hi, s.hi);
    } else {
      out.segments_.push_back(s);
    }
  }
  return out;
}

bool AngularSet::is_full() const {
  return segments_.size() == 1 && segments_[0].lo == 0.0 &&
         segments_[0].hi == kTwoPi;
}

double AngularSet::measure() const {
  if (is_full()) return kTwoPi;
  double total = 0.0;
  for (const auto& s : segments_) total += s.hi - s.lo;
  return total;
}

bool AngularSet::contains(double alpha) const {
  const double a = normalize_angle(alpha);
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), a,
      [](double v, const Segment& s) { return v < s.lo; });
  if (it == segments_.begin()) return false;
  --it;
  return a < it->hi;
}

std::vector<CircularInterval> AngularSet::intervals() const {
  std::vector<CircularInterval> out;
  if (segments_.empty()) return out;
  if (is_full()) return {CircularInterval::full()};
  const bool wrap = segments_.size() > 1 && segments_.front().lo == 0.0 &&
                    segments_.back().hi == kTwoPi;
  const std::size_t first = wrap ? 1 : 0;
  const std::size_t last = wrap ? segments_.size() - 1 : segments_.size();
  out.reserve(segments_.size());
  for (std::size_t i = first; i < last; ++i) {
    out.emplace_back(segments_[i].lo, segments_[i].hi);
  }
  if (wrap) out.emplace_back(segments_.back().lo, segments_.front().hi);
  return out;
}

std::size_t AngularSet::interval_count() const {
  if (segments_.empty()) return 0;
  if (is_full()) return 1;
  const bool wrap = segments_.size() > 1 && segments_.front().lo == 0.0 &&
                    segments_.back().hi == kTwoPi;
  return wrap ? segments_.size() - 1 : segments_.size();
}

std::string AngularSet::to_string() const {
  if (segments_.empty()) return "{}";
  if (is_full()) return "{full}";
  std::string out = "{";
  char buf[64];
  bool first = true;
  for (const auto& arc : intervals()) {
    std::snprintf(buf, sizeof(buf), "%s[%.9g, %.9g)", first ? "" : ", ",
                  arc.start(), arc.end());
    out += buf;
    first = false;
  }
  return out + "}";
}

AngularSet unite(const AngularSet& a, const AngularSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Segment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  return AngularSet::from_segments(std::move(segs));
}

AngularSet intersect(const AngularSet& a, const AngularSet& b) {
  const auto& x = a.segments();
  const auto& y = b.segments();
  std::vector<Segment> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (hi - lo > kAngularEpsilon) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return AngularSet::from_segments(std::move(out));
}

AngularSet complement(const AngularSet& s) {
  std::vector<Segment> out;
  double cursor = 0.0;
  for (const auto& seg : s.segments()) {
    if (seg.lo > cursor) out.push_back({cursor, seg.lo});
    cursor = seg.hi;
  }
  if (cursor < kTwoPi) out.push_back({cursor, kTwoPi});
  return AngularSet::from_segments(std::move(out));
}

AngularSet subtract(const AngularSet& a, const AngularSet& b) {
  if (a.empty() || b.empty()) return a;
  return intersect(a, complement(b));
}

AngularSet rotate(const AngularSet& s, double delta) {
  if (s.empty() || s.is_full()) return s;
  std::vector<CircularInterval> arcs;
  for (const auto& arc : s.intervals()) {
    arcs.push_back(
        CircularInterval::from_start_length(arc.start() + delta, arc.length()));
  }
  return AngularSet::from_intervals(arcs);
}

CircularInterval longest_interval(const AngularSet& s) {
  CircularInterval best;
  std::int64_t best_key = -1;
  for (const auto& arc : s.intervals()) {
    const std::int64_t key = length_key(arc.length());
    if (key > best_key) {
      best = arc;
      best_key = key;
    }
  }
  return best;
}

CircularInterval longest_gap(const AngularSet& s) {
  return longest_interval(complement(s));
}

bool approx_equal(const AngularSet& a, const AngularSet& b, double tol) {
  const auto& x = a.segments();
  const auto& y = b.segments();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i].lo - y[i].lo) > tol || std::abs(x[i].hi - y[i].hi) > tol)
      return false;
  }
  return true;
}

}  // namespace rotlabel
