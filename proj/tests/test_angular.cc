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


#include <stdexcept>
#include <random>

#include "doctest.h"
#include "rotlabel/angular.h"

namespace rotlabel {
namespace {

AngularSet arc(double a, double b) { return AngularSet(CircularInterval(a, b)); }

AngularSet random_set(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<CircularInterval> arcs;
  const int c = count(rng);
  for (int k = 0; k < c; ++k) arcs.emplace_back(u(rng), u(rng));
  return AngularSet::from_intervals(arcs);
}

}  // namespace

TEST_CASE("normalize_angle maps into [0, 2pi) and is idempotent") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(kTwoPi) == doctest::Approx(0.0));
  CHECK(normalize_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(normalize_angle(7 * kPi) == doctest::Approx(kPi));
  const double once = normalize_angle(-123.456);
  CHECK(normalize_angle(once) == once);
  CHECK(once >= 0.0);
  CHECK(once < kTwoPi);
}

TEST_CASE("circular interval lengths follow the wraparound rule") {
  CHECK(CircularInterval(1.0, 2.0).length() == doctest::Approx(1.0));
  CHECK(CircularInterval(5.5, 0.5).length() == doctest::Approx(kTwoPi - 5.0));
  CHECK(CircularInterval(5.5, 0.5).contains(0.2));
  CHECK_FALSE(CircularInterval(5.5, 0.5).contains(3.0));
  CHECK(CircularInterval(1.0, 1.0).empty());
  CHECK(CircularInterval::full().length() == kTwoPi);
}

TEST_CASE("union of complementary halves is the full circle") {
  const AngularSet u = arc(0, kPi) | arc(kPi, kTwoPi);
  CHECK(u.is_full());
  CHECK(u.measure() == doctest::Approx(kTwoPi));
}

TEST_CASE("union merges across zero") {
  const AngularSet u = arc(5.5, 0.5) | arc(0.4, 1.0);
  const auto iv = u.intervals();
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].start() == doctest::Approx(5.5));
  CHECK(iv[0].end() == doctest::Approx(1.0));
  CHECK(u.interval_count() == 1);
}

TEST_CASE("union with the empty set is the identity") {
  const AngularSet s = arc(1, 2) | arc(4, 0.3);
  CHECK((s | AngularSet{}) == s);
}

TEST_CASE("intersection") {
  const AngularSet i = arc(0, kPi) & arc(kPi / 2, 3 * kPi / 2);
  REQUIRE(i.intervals().size() == 1);
  CHECK(i.intervals()[0].start() == doctest::Approx(kPi / 2));
  CHECK(i.intervals()[0].end() == doctest::Approx(kPi));
  const AngularSet s = arc(4, 0.3);
  CHECK((AngularSet::full() & s) == s);
}

TEST_CASE("wrapping intersection agrees with pointwise membership") {
  const AngularSet a = arc(5.5, 0.5);
  const AngularSet b = arc(0.2, 1.0);
  const AngularSet i = a & b;
  REQUIRE(i.intervals().size() == 1);
  CHECK(i.intervals()[0].start() == doctest::Approx(0.2));
  CHECK(i.intervals()[0].end() == doctest::Approx(0.5));
  for (double x = 0.0005; x < kTwoPi; x += 1e-3) {
    CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
  }
}

TEST_CASE("complement") {
  CHECK(complement(AngularSet{}).is_full());
  CHECK(complement(AngularSet::full()).empty());
  const AngularSet c = complement(arc(0, kPi));
  REQUIRE(c.intervals().size() == 1);
  CHECK(c.intervals()[0].start() == doctest::Approx(kPi));
  CHECK(c.measure() == doctest::Approx(kPi));
}

TEST_CASE("longest gap") {
  CHECK(longest_gap(AngularSet{}).is_full());
  CHECK(longest_gap(AngularSet::full()).empty());
  CHECK(longest_gap(AngularSet::full()).length() == 0.0);
  const CircularInterval g = longest_gap(arc(0, kPi / 2));
  CHECK(g.start() == doctest::Approx(kPi / 2));
  CHECK(g.length() == doctest::Approx(3 * kPi / 2));
}

TEST_CASE("longest gap ties go to the smallest start") {
  // Two equal gaps: [1,2) and [3,4).
  const AngularSet s = arc(0, 1) | arc(2, 3) | arc(4, kTwoPi);
  const CircularInterval g = longest_gap(s);
  CHECK(g.start() == doctest::Approx(1.0));
}

TEST_CASE("randomized set algebra") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 200; ++trial) {
    const AngularSet a = random_set(rng);
    const AngularSet b = random_set(rng);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(complement(complement(a)) == a);
    CHECK(AngularSet::from_segments(a.segments()) == a);
    CHECK(std::abs((a | b).measure() + (a & b).measure() - a.measure() - b.measure()) <
          1e-12);
    CHECK(a.measure() <= kTwoPi);
    const AngularSet un = a | b;
    const AngularSet in = a & b;
    const AngularSet diff = a - b;
    const AngularSet co = ~a;
    for (int k = 0; k < 500; ++k) {
      const double x = u(rng);
      CHECK(un.contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(in.contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(diff.contains(x) == (a.contains(x) && !b.contains(x)));
      CHECK(co.contains(x) == !a.contains(x));
    }
  }
}

TEST_CASE("membership agreement over 10^4 angles") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  const AngularSet a = random_set(rng) | arc(1.0, 1.5);
  const AngularSet b = random_set(rng) | arc(5.0, 0.7);
  const AngularSet d = (a & ~b) | (b & ~a);
  for (int k = 0; k < 10000; ++k) {
    const double x = u(rng);
    CHECK(d.contains(x) == (a.contains(x) != b.contains(x)));
  }
}

TEST_CASE("canonical members are disjoint and sorted") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AngularSet s = random_set(rng);
    const auto& segs = s.segments();
    for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
      CHECK(segs[k].hi < segs[k + 1].lo);
    }
    for (const auto& seg : segs) CHECK(seg.lo < seg.hi);
  }
}

TEST_CASE("rotate shifts membership") {
  const AngularSet s = arc(1.0, 2.0) | arc(6.0, 0.5);
  const AngularSet r = rotate(s, 0.75);
  for (double x = 0.0005; x < kTwoPi; x += 1e-3) {
    CHECK(r.contains(normalize_angle(x + 0.75)) == s.contains(x));
  }
}

}  // namespace rotlabel
