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
#include "rotlabel/validity.h"
#include "support/oracles.h"

namespace rotlabel {
namespace {

AnchoredLabel square(int id, double x, double y) {
  AnchoredLabel l;
  l.id = id;
  l.anchor = {x, y};
  return l;
}

constexpr GreedyStrategy kStrategies[] = {GreedyStrategy::kMax, GreedyStrategy::kLowCost,
                                          GreedyStrategy::kBestRatio};

}  // namespace

TEST_CASE("a single label gets the full circle") {
  const ConflictStructure cs = build_conflicts(Instance({square(0, 0, 0)}));
  for (const GreedyStrategy s : kStrategies) {
    const RotationLabeling phi = greedy_solve(cs, ModelConfig::k_ranges(1), s);
    CHECK(phi.active[0].is_full());
    CHECK(total_activity(phi) == doctest::Approx(kTwoPi));
  }
}

TEST_CASE("fully conflicting pair: the first label takes everything") {
  const ConflictStructure cs =
      build_conflicts(Instance({square(0, 0, 0), square(1, 0.1, 0)}));
  const RotationLabeling phi = greedy_solve(cs, ModelConfig::k_ranges(1));
  CHECK(phi.active[0].is_full());
  CHECK(phi.active[1].empty());
  CHECK(total_activity(phi) == doctest::Approx(kTwoPi));
  CHECK(solve_exact(cs, ModelConfig::k_ranges(1)).objective == doctest::Approx(kTwoPi));
}

TEST_CASE("d=1.2 pair under GreedyMax") {
  const ConflictStructure cs =
      build_conflicts(Instance({square(0, 0, 0), square(1, 1.2, 0)}));
  GreedyTrace trace;
  GreedyOptions go;
  const RotationLabeling phi = greedy_solve_traced(cs, ModelConfig::k_ranges(1), go, trace);
  CHECK(phi.active[0].is_full());
  REQUIRE(phi.active[1].intervals().size() == 1);
  CHECK(phi.active[1].intervals()[0].length() == doctest::Approx(1.17137).epsilon(1e-5));
  CHECK(phi.active[1].intervals()[0].start() == doctest::Approx(0.98511).epsilon(1e-5));
  CHECK(total_activity(phi) == doctest::Approx(7.45456).epsilon(1e-5));
  CHECK(trace.labels == std::vector<std::size_t>{0, 1});
  const double opt = solve_exact(cs, ModelConfig::k_ranges(1)).objective;
  CHECK(total_activity(phi) / opt == doctest::Approx(0.8642).epsilon(1e-3));
}

TEST_CASE("maximum active range and assignment cost") {
  const ConflictStructure cs =
      build_conflicts(Instance({square(0, 0, 0), square(1, 0.1, 0)}));
  CandidateState st(cs, ModelConfig::k_ranges(1));
  CHECK(st.max_active_range(0).is_full());
  CHECK(st.assignment_cost(0) == doctest::Approx(kTwoPi));

  const ConflictStructure lone = build_conflicts(Instance({square(0, 0, 0)}));
  CHECK(CandidateState(lone, ModelConfig::k_ranges(1)).assignment_cost(0) == 0.0);

  // Hard mode: label 0 covers the anchor (0.5, 0.5) on [7pi/4, pi/4].
  const ConflictStructure hard =
      build_conflicts(Instance({square(0, 0, 0), square(1, 0.5, 0.5)}));
  CandidateState hs(hard, ModelConfig::k_ranges(1, ConflictMode::kHard));
  const CircularInterval r = hs.max_active_range(0);
  CHECK(r.start() == doctest::Approx(kPi / 4));
  CHECK(r.length() == doctest::Approx(3 * kPi / 2));
}

TEST_CASE("a label without partners costs nothing") {
  const ConflictStructure cs =
      build_conflicts(Instance({square(0, 0, 0), square(1, 1.2, 0), square(2, 20, 20)}));
  CandidateState st(cs, ModelConfig::k_ranges(1));
  CHECK(st.assignment_cost(2) == 0.0);
}

TEST_CASE("greedy outputs are valid and respect budgets") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = testing::random_instance(rng, 12, 5.0);
    const ConflictStructure cs = build_conflicts(inst);
    for (const ConflictMode mode : {ConflictMode::kSoft, ConflictMode::kHard}) {
      for (const ModelConfig cfg :
           {ModelConfig::zero_one(mode), ModelConfig::k_ranges(1, mode),
            ModelConfig::k_ranges(2, mode), ModelConfig::k_ranges(3, mode),
            ModelConfig::unbounded(mode)}) {
        for (const GreedyStrategy s : kStrategies) {
          const RotationLabeling phi = greedy_solve(cs, cfg, s);
          const ValidityReport r = check_validity(phi, cs, cfg);
          CAPTURE(cfg.to_string());
          CHECK(r.valid());
        }
      }
    }
  }
}

TEST_CASE("GreedyMax keys never increase") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const ConflictStructure cs = build_conflicts(testing::random_instance(rng, 15, 5.0));
    GreedyTrace trace;
    greedy_solve_traced(cs, ModelConfig::k_ranges(2), {}, trace);
    for (std::size_t k = 1; k < trace.ranges.size(); ++k) {
      CHECK(length_key(trace.ranges[k].length()) <= length_key(trace.ranges[k - 1].length()));
    }
  }
}

TEST_CASE("both GreedyMax engines agree") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const ConflictStructure cs = build_conflicts(testing::random_instance(rng, 25, 6.0));
    for (const ModelConfig cfg : {ModelConfig::k_ranges(1), ModelConfig::k_ranges(3),
                                  ModelConfig::unbounded(ConflictMode::kHard),
                                  ModelConfig::zero_one()}) {
      GreedyOptions tree;
      tree.engine = GreedyEngine::kIntervalTree;
      const RotationLabeling a = greedy_solve(cs, cfg);
      const RotationLabeling b = greedy_solve(cs, cfg, tree);
      CHECK(a.active == b.active);
    }
  }
}

TEST_CASE("frozen labels keep their activity and block partners") {
  const ConflictStructure cs =
      build_conflicts(Instance({square(0, 0, 0), square(1, 0.1, 0)}));
  const ModelConfig cfg = ModelConfig::k_ranges(1);
  RotationLabeling fixed = RotationLabeling::empty(2, cfg);
  fixed.active[1] = AngularSet(CircularInterval(0, 1));
  GreedyOptions go;
  go.frozen = {false, true};
  go.committed = &fixed;
  for (const GreedyEngine e : {GreedyEngine::kSweep, GreedyEngine::kIntervalTree}) {
    go.engine = e;
    const RotationLabeling phi = greedy_solve(cs, cfg, go);
    CHECK(phi.active[1] == fixed.active[1]);
    CHECK(phi.active[0].measure() == doctest::Approx(kTwoPi - 1));
  }
}

TEST_CASE("unbounded greedy is flagged as an extension") {
  const ConflictStructure cs = build_conflicts(Instance({square(0, 0, 0)}));
  CHECK(greedy_solve(cs, ModelConfig::unbounded()).unbounded_greedy_extension);
  CHECK_FALSE(greedy_solve(cs, ModelConfig::k_ranges(2)).unbounded_greedy_extension);
}

TEST_CASE("greedy is deterministic") {
  std::mt19937_64 rng(21);
  const ConflictStructure cs = build_conflicts(testing::random_instance(rng, 30, 6.0));
  for (const GreedyStrategy s : kStrategies) {
    CHECK(greedy_solve(cs, ModelConfig::k_ranges(2), s).active ==
          greedy_solve(cs, ModelConfig::k_ranges(2), s).active);
  }
}

TEST_CASE("interval-tree engine only implements GreedyMax") {
  const ConflictStructure cs = build_conflicts(Instance({square(0, 0, 0)}));
  GreedyOptions go;
  go.engine = GreedyEngine::kIntervalTree;
  go.strategy = GreedyStrategy::kLowCost;
  CHECK_THROWS_AS(greedy_solve(cs, ModelConfig::k_ranges(1), go), std::invalid_argument);
}

}  // namespace rotlabel
