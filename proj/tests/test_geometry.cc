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
#include <cmath>
#include <random>

#include "doctest.h"
#include "rotlabel/geometry.h"
#include "support/oracles.h"

namespace rotlabel {
namespace {

AnchoredLabel square(int id, double x, double y,
                     AnchorCorner c = AnchorCorner::kBottomLeft) {
  AnchoredLabel l;
  l.id = id;
  l.anchor = {x, y};
  l.corner = c;
  return l;
}

// Oracle for the d=1.2 pair: |cos a| < 5/6 and |sin a| < 5/6.
const double kArcs[4][2] = {{0.58569, 0.98511},
                            {2.15648, 2.55590},
                            {3.72728, 4.12670},
                            {5.29808, 5.69749}};

}  // namespace

TEST_CASE("far apart squares never conflict") {
  CHECK(soft_conflict_set(square(0, 0, 0), square(1, 5, 0)).empty());
  CHECK(hard_conflict_set(square(0, 0, 0), square(1, 5, 0)).empty());
}

TEST_CASE("very close squares always conflict") {
  CHECK(soft_conflict_set(square(0, 0, 0), square(1, 0.1, 0)).is_full());
}

TEST_CASE("coincident anchors are rejected") {
  CHECK_THROWS_AS(soft_conflict_set(square(0, 1, 1), square(1, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("the d=1.2 pair has four conflict arcs") {
  const AngularSet s = soft_conflict_set(square(0, 0, 0), square(1, 1.2, 0));
  const auto iv = s.intervals();
  REQUIRE(iv.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(iv[k].start() == doctest::Approx(kArcs[k][0]).epsilon(1e-5));
    CHECK(iv[k].end() == doctest::Approx(kArcs[k][1]).epsilon(1e-5));
  }
  // Closed form of the arcs.
  const double lo = std::acos(5.0 / 6.0);
  CHECK(iv[0].start() == doctest::Approx(lo).epsilon(1e-12));
  CHECK(iv[0].end() == doctest::Approx(std::asin(5.0 / 6.0)).epsilon(1e-12));
  const testing::OracleReport rep = testing::compare_with_sampling(
      s, square(0, 0, 0), square(1, 1.2, 0), testing::Relation::kSoft);
  CHECK(rep.ok());
  // Gaps of equal length 1.17137; the first one starts at 0.98511.
  const CircularInterval g = longest_gap(s);
  CHECK(g.length() == doctest::Approx(1.17137).epsilon(1e-5));
  CHECK(g.start() == doctest::Approx(0.98511).epsilon(1e-5));
  for (const auto& gap : complement(s).intervals()) {
    CHECK(gap.length() == doctest::Approx(1.17137).epsilon(1e-5));
  }
}

TEST_CASE("hard conflict of a unit square over the point (0.5, 0.5)") {
  const AngularSet h = hard_conflict_set(square(0, 0, 0), square(1, 0.5, 0.5));
  const auto iv = h.intervals();
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].start() == doctest::Approx(7 * kPi / 4));
  CHECK(iv[0].end() == doctest::Approx(kPi / 4));
  CHECK(h.measure() == doctest::Approx(kPi / 2));
  CHECK(testing::compare_with_sampling(h, square(0, 0, 0), square(1, 0.5, 0.5),
                                       testing::Relation::kHard)
            .ok());
}

TEST_CASE("hard conflicts need the target within the diagonal") {
  const AnchoredLabel a = square(0, 0, 0);
  CHECK(hard_conflict_set(a, square(1, 1.5, 0)).empty());
}

TEST_CASE("closed forms agree with the sampling oracle on random pairs") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const auto [a, b] = testing::random_pair(rng);
    const AngularSet soft = soft_conflict_set(a, b);
    const AngularSet h_ab = hard_conflict_set(a, b);
    const AngularSet h_ba = hard_conflict_set(b, a);
    CAPTURE(t);
    CHECK(testing::compare_with_sampling(soft, a, b, testing::Relation::kSoft, 2000).ok());
    CHECK(testing::compare_with_sampling(h_ab, a, b, testing::Relation::kHard, 2000).ok());
    CHECK(approx_equal(soft, soft_conflict_set(b, a), 1e-9));
    CHECK((h_ab - soft).empty());
    CHECK((h_ba - soft).empty());
    CHECK(soft.interval_count() <= 4);
  }
}

TEST_CASE("rigid rotation of both anchors shifts conflict sets") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ud(0.0, kTwoPi);
  for (int t = 0; t < 50; ++t) {
    auto [a, b] = testing::random_pair(rng);
    const double delta = ud(rng);
    const AngularSet before = soft_conflict_set(a, b);
    auto turn = [&](Point p) {
      return Point{std::cos(delta) * p.x - std::sin(delta) * p.y,
                   std::sin(delta) * p.x + std::cos(delta) * p.y};
    };
    a.anchor = turn(a.anchor);
    b.anchor = turn(b.anchor);
    const AngularSet after = soft_conflict_set(a, b);
    CHECK(approx_equal(after, rotate(before, delta), 1e-9));
  }
}

TEST_CASE("build_conflicts event lists") {
  const ConflictStructure far = build_conflicts(Instance({square(0, 0, 0), square(1, 5, 0)}));
  CHECK(far.pairs().empty());
  CHECK(far.events() == std::vector<double>{0.0, kTwoPi});

  const ConflictStructure cs = build_conflicts(Instance({square(0, 0, 0), square(1, 1.2, 0)}));
  REQUIRE(cs.events().size() == 10);
  CHECK(cs.events().front() == 0.0);
  CHECK(cs.events().back() == kTwoPi);
  for (int k = 0; k < 4; ++k) {
    CHECK(cs.events()[1 + 2 * k] == doctest::Approx(kArcs[k][0]).epsilon(1e-5));
    CHECK(cs.events()[2 + 2 * k] == doctest::Approx(kArcs[k][1]).epsilon(1e-5));
  }
  CHECK(cs.stats().events == 8);
  CHECK(cs.stats().max_degree == 1);
}

TEST_CASE("chain instance has two pairs") {
  // Equal-corner unit squares conflict iff their anchors are closer than
  // sqrt(2); neighbours are, next-but-one are not.
  const double d = 1.3;
  const Instance inst({square(0, 0, 0), square(1, d, 0), square(2, 2 * d, 0)});
  const ConflictStructure cs = build_conflicts(inst);
  CHECK(cs.pairs().size() == 2);
  CHECK(cs.stats().max_degree <= 2);
  CHECK(cs.incident(1).size() == 2);
}

TEST_CASE("build_conflicts matches all-pairs evaluation") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Instance inst = testing::random_instance(rng, 40, 12.0, 0.5, 2.0);
    const ConflictStructure cs = build_conflicts(inst);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t j = i + 1; j < inst.size(); ++j) {
        if (!soft_conflict_set(inst[i], inst[j]).empty()) ++expected;
      }
    }
    CHECK(cs.pairs().size() == expected);
    const auto& ev = cs.events();
    for (std::size_t k = 0; k + 1 < ev.size(); ++k) CHECK(ev[k] < ev[k + 1]);
    // Every stored endpoint is an event.
    for (const auto& p : cs.pairs()) {
      for (const auto& seg : p.soft.segments()) {
        CHECK(std::binary_search(ev.begin(), ev.end(), seg.lo));
        CHECK(std::binary_search(ev.begin(), ev.end(), seg.hi));
      }
      CHECK((p.hard_i_covers_j - p.soft).empty());
    }
  }
}

TEST_CASE("restrict_to keeps inner pairs and turns sources into forbidden ranges") {
  const Instance inst({square(0, 0, 0), square(1, 1.2, 0), square(2, 0.5, 0.5)});
  const ConflictStructure cs = build_conflicts(inst);
  const std::vector<std::size_t> keep{0, 1};
  const std::vector<std::size_t> sources{2};
  const ConflictStructure sub = cs.restrict_to(keep, sources);
  CHECK(sub.label_count() == 2);
  CHECK(sub.pairs().size() == 1);
  const AngularSet own = hard_conflict_set(inst[0], inst[1]);
  CHECK(approx_equal(sub.forbidden(0), own | hard_conflict_set(inst[0], inst[2]), 1e-8));
  const ConflictStructure plain = cs.restrict_to(keep, {});
  CHECK(approx_equal(plain.forbidden(0), own, 1e-8));
  CHECK(!(sub.forbidden(0) - plain.forbidden(0)).empty());
}

}  // namespace rotlabel
