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

// Circular-interval arithmetic on the rotation circle [0, 2π).
//
// An AngularSet is the common currency of the library: conflict sets,
// hard-conflict ranges, admissible sets and active ranges are all
// AngularSets. Internally a set is a sorted list of linear segments
// [lo, hi) with 0 <= lo < hi <= 2π. A segment ending at 2π and a segment
// starting at 0 together form one wrapping interval in the circular view.

#ifndef ROTLABEL_ANGULAR_H_
#define ROTLABEL_ANGULAR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rotlabel {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = kTwoPi / 2.0;

// Endpoints closer than this are merged; pieces shorter than this vanish.
inline constexpr double kAngularEpsilon = 1e-12;

// Maps any finite angle into [0, 2π).
double normalize_angle(double radians);

// Lengths are compared on a 1e-12 grid so that arcs which are equal up to
// floating-point noise tie, and ties resolve by position.
std::int64_t length_key(double length);

// A closed-open arc [start, end) on the circle. start lies in [0, 2π) and
// end in (0, 2π]; start > end means the arc wraps through 0.
class CircularInterval {
 public:
  CircularInterval() = default;
  CircularInterval(double start, double end);

  static CircularInterval full();
  static CircularInterval from_start_length(double start, double length);

  double start() const { return start_; }
  double end() const { return end_; }
  bool empty() const { return kind_ == Kind::kEmpty; }
  bool is_full() const { return kind_ == Kind::kFull; }
  bool wraps() const { return kind_ == Kind::kProper && start_ > end_; }
  double length() const;
  bool contains(double alpha) const;

  friend bool operator==(const CircularInterval&,
                         const CircularInterval&) = default;

 private:
  enum class Kind { kEmpty, kProper, kFull };

  double start_ = 0.0;
  double end_ = 0.0;
  Kind kind_ = Kind::kEmpty;
};

struct Segment {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Canonical set of disjoint arcs.
class AngularSet {
 public:
  AngularSet() = default;
  explicit AngularSet(const CircularInterval& interval);

  static AngularSet full();
  static AngularSet from_intervals(std::span<const CircularInterval> arcs);
  // Canonicalizes arbitrary segments inside [0, 2π]: sorts, merges
  // overlapping or adjacent pieces and drops degenerate ones.
  static AngularSet from_segments(std::vector<Segment> segments);

  bool empty() const { return segments_.empty(); }
  bool is_full() const;
  double measure() const;
  bool contains(double alpha) const;

  const std::vector<Segment>& segments() const { return segments_; }
  // Circular view: maximal arcs sorted by start; a wrapping arc comes last.
  std::vector<CircularInterval> intervals() const;
  std::size_t interval_count() const;

  std::string to_string() const;

  friend bool operator==(const AngularSet&, const AngularSet&) = default;

 private:
  std::vector<Segment> segments_;
};

AngularSet unite(const AngularSet& a, const AngularSet& b);
AngularSet intersect(const AngularSet& a, const AngularSet& b);
AngularSet complement(const AngularSet& s);
AngularSet subtract(const AngularSet& a, const AngularSet& b);
// Shifts every point of the set by delta (mod 2π).
AngularSet rotate(const AngularSet& s, double delta);

// Longest arc of s; ties go to the smallest start. Empty set -> empty arc.
CircularInterval longest_interval(const AngularSet& s);
// Longest arc of the complement of s; full s -> empty arc.
CircularInterval longest_gap(const AngularSet& s);

// True when both sets have the same number of segments and matching
// endpoints within tol.
bool approx_equal(const AngularSet& a, const AngularSet& b, double tol);

inline AngularSet operator|(const AngularSet& a, const AngularSet& b) {
  return unite(a, b);
}
inline AngularSet operator&(const AngularSet& a, const AngularSet& b) {
  return intersect(a, b);
}
inline AngularSet operator-(const AngularSet& a, const AngularSet& b) {
  return subtract(a, b);
}
inline AngularSet operator~(const AngularSet& s) { return complement(s); }

}  // namespace rotlabel

#endif  // ROTLABEL_ANGULAR_H_
