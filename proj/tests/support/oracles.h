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


// Independent oracles and random instance builders shared by the unit tests
// and the acceptance runner.

#ifndef ROTLABEL_TESTS_SUPPORT_ORACLES_H_
#define ROTLABEL_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "rotlabel/angular.h"
#include "rotlabel/geometry.h"
#include "rotlabel/model.h"

namespace rotlabel::testing {

// Builds the two rotated rectangles as polygons in map coordinates and
// tests interior overlap by separating axes.
bool rotated_overlap(const AnchoredLabel& a, const AnchoredLabel& b, double alpha);
// Whether the rotated rectangle of `a` contains point p in its interior.
bool rotated_covers(const AnchoredLabel& a, Point p, double alpha);

struct OracleReport {
  std::size_t probe_mismatches = 0;
  std::size_t boundary_misses = 0;  // oracle boundaries without a set endpoint
  std::size_t extra_endpoints = 0;  // set endpoints without an oracle boundary
  double max_boundary_deviation = 0.0;
  bool ok() const {
    return probe_mismatches == 0 && boundary_misses == 0 && extra_endpoints == 0;
  }
};

enum class Relation { kSoft, kHard };

// Compares `set` against the predicate at `probes` evenly spread angles and
// against the predicate's sign changes found on a 1e-4 grid and bisected to
// 1e-9. Probes within `tol` of a boundary are not counted as mismatches.
OracleReport compare_with_sampling(const AngularSet& set, const AnchoredLabel& a,
                                   const AnchoredLabel& b, Relation rel,
                                   std::size_t probes = 10000, double tol = 1e-6);

// Random label pair with dimensions in [0.5, 2], random corners and anchor
// distance in [0, 1.2 * reach].
std::pair<AnchoredLabel, AnchoredLabel> random_pair(std::mt19937_64& rng);

// Random instance of n labels with dimensions in [lo, hi] and anchors in a
// square region; anchors are distinct, static overlaps allowed.
Instance random_instance(std::mt19937_64& rng, std::size_t n, double region,
                         double lo = 0.5, double hi = 1.5);

struct BruteForceResult {
  double activity = 0.0;
  std::size_t ranges = 0;  // fewest ranges among maximum-activity labelings
};

// Optimum over regular labelings by dynamic programming over atomic
// intervals, with conflicts read from the conflict sets at interval
// midpoints. Tracks, per label, activity in the first and previous interval
// and the number of runs so far. Feasible for n <= 6 labels.
BruteForceResult brute_force_optimum(const ConflictStructure& cs,
                                     const ModelConfig& cfg);

}  // namespace rotlabel::testing

#endif  // ROTLABEL_TESTS_SUPPORT_ORACLES_H_
