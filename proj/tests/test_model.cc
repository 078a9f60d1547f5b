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
#include "rotlabel/exact.h"
#include "rotlabel/geometry.h"
#include "rotlabel/greedy.h"
#include "rotlabel/model.h"
#include "rotlabel/validity.h"
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

}  // namespace

TEST_CASE("corner offsets") {
  AnchoredLabel l;
  l.width = 3;
  l.height = 2;
  l.corner = AnchorCorner::kBottomLeft;
  CHECK(l.corner_offset() == Point{0, 0});
  l.corner = AnchorCorner::kBottomRight;
  CHECK(l.corner_offset() == Point{-3, 0});
  l.corner = AnchorCorner::kTopLeft;
  CHECK(l.corner_offset() == Point{0, -2});
  l.corner = AnchorCorner::kTopRight;
  CHECK(l.corner_offset() == Point{-3, -2});
  for (const AnchorCorner c : kAllCorners) CHECK(parse_corner_tag(corner_tag(c)) == c);
  CHECK_THROWS_AS(parse_corner_tag("XX"), std::invalid_argument);
}

TEST_CASE("instance invariants") {
  CHECK_THROWS_AS(Instance({square(0, 0, 0), square(0, 1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(Instance({square(0, 0, 0), square(1, 0, 0)}), std::invalid_argument);
  AnchoredLabel bad = square(0, 0, 0);
  bad.width = 0;
  CHECK_THROWS_AS(Instance({bad}), std::invalid_argument);
  bad = square(0, 0, 0);
  bad.weight = -1;
  CHECK_THROWS_AS(Instance({bad}), std::invalid_argument);
  const Instance ok({square(7, 0, 0), square(3, 2, 0)});
  CHECK(ok.index_of(3) == 1u);
  CHECK_FALSE(ok.index_of(5).has_value());
}

TEST_CASE("validate_static") {
  CHECK(validate_static(Instance({square(0, 0, 0), square(1, 5, 0)})).empty());
  const auto v = validate_static(Instance({square(0, 0, 0), square(1, 0.5, 0)}));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == std::pair{0, 1});
  CHECK(validate_static(Instance({square(0, 0, 0), square(1, 1, 0)})).empty());
  // Brute-force agreement on random instances.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const Instance inst = testing::random_instance(rng, 12, 6.0);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t j = i + 1; j < inst.size(); ++j) {
        if (testing::rotated_overlap(inst[i], inst[j], 0.0)) ++expected;
      }
    }
    CHECK(validate_static(inst).size() == expected);
  }
}

TEST_CASE("model config tags") {
  CHECK(ModelConfig::parse("01").ranges == RangeModel::kZeroOne);
  CHECK(ModelConfig::parse("kR:3", "hard") == ModelConfig::k_ranges(3, ConflictMode::kHard));
  CHECK(ModelConfig::parse("inf").ranges == RangeModel::kUnbounded);
  CHECK_THROWS_AS(ModelConfig::parse("kR:0"), std::invalid_argument);
  CHECK_THROWS_AS(ModelConfig::parse("kR:x"), std::invalid_argument);
  CHECK_THROWS_AS(ModelConfig::parse("inf", "medium"), std::invalid_argument);
  CHECK(ModelConfig::k_ranges(2, ConflictMode::kHard).to_string() == "kR:2/hard");
  CHECK(ModelConfig::unbounded().range_budget() == std::nullopt);
  CHECK(ModelConfig::zero_one().range_budget() == 1);
}

TEST_CASE("total activity") {
  RotationLabeling phi = RotationLabeling::empty(2, ModelConfig::k_ranges(1));
  CHECK(total_activity(phi) == 0.0);
  phi.active[0] = AngularSet::full();
  CHECK(total_activity(phi) == doctest::Approx(kTwoPi));
  phi.active[0] = AngularSet(CircularInterval(0, kPi));
  phi.active[1] = AngularSet(CircularInterval(kPi, kTwoPi));
  CHECK(total_activity(phi) == doctest::Approx(kTwoPi));
}

TEST_CASE("greedy on the d=1.2 pair totals 2pi + 1.17137") {
  const Instance inst({square(0, 0, 0), square(1, 1.2, 0)});
  const ConflictStructure cs = build_conflicts(inst);
  const RotationLabeling phi = greedy_solve(cs, ModelConfig::k_ranges(1));
  CHECK(total_activity(phi) == doctest::Approx(7.45456).epsilon(1e-5));
}

TEST_CASE("check_validity") {
  const Instance inst({square(0, 0, 0), square(1, 0.1, 0)});
  const ConflictStructure cs = build_conflicts(inst);
  const ModelConfig cfg = ModelConfig::k_ranges(1);
  CHECK(check_validity(RotationLabeling::empty(2, cfg), cs, cfg).valid());

  RotationLabeling phi = RotationLabeling::empty(2, cfg);
  phi.active[0] = AngularSet(CircularInterval(0, kPi));
  phi.active[1] = AngularSet(CircularInterval(0, kPi));
  const ValidityReport r = check_validity(phi, cs, cfg);
  REQUIRE(r.soft.size() == 1);
  CHECK(r.soft[0].overlap.measure() == doctest::Approx(kPi));

  // Touching ranges share only an endpoint.
  phi.active[1] = AngularSet(CircularInterval(kPi, kTwoPi));
  CHECK(check_validity(phi, cs, cfg).valid());

  // Range budgets and the 0/1 model.
  phi.active[1] = AngularSet(CircularInterval(3.5, 4)) | AngularSet(CircularInterval(5, 6));
  const ValidityReport r2 = check_validity(phi, cs, cfg);
  REQUIRE(r2.ranges.size() == 1);
  CHECK(r2.ranges[0].ranges == 2);
  CHECK(check_validity(phi, cs, ModelConfig::k_ranges(2)).valid());
  CHECK_FALSE(check_validity(phi, cs, ModelConfig::zero_one()).valid());
  CHECK_THROWS_AS(check_validity(RotationLabeling::empty(3, cfg), cs, cfg),
                  std::invalid_argument);
}

TEST_CASE("check_validity reports activity over covered anchors in hard mode") {
  const Instance inst({square(0, 0, 0), square(1, 0.5, 0.5)});
  const ConflictStructure cs = build_conflicts(inst);
  RotationLabeling phi = RotationLabeling::empty(2, ModelConfig::unbounded());
  phi.active[0] = AngularSet::full();
  CHECK(check_validity(phi, cs, ModelConfig::unbounded()).valid());
  const ValidityReport r = check_validity(phi, cs, ModelConfig::unbounded(ConflictMode::kHard));
  REQUIRE(r.hard.size() == 1);
  CHECK(r.hard[0].overlap.measure() == doctest::Approx(kPi / 2));
}

}  // namespace rotlabel
