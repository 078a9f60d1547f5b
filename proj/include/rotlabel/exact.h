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

// Exact total-activity maximization over atomic intervals.
//
// The events E cut the circle into atomic intervals E[j]. Some optimal
// labeling switches labels only at events, so it suffices to decide for
// each label i and interval j whether the label is active (x_i^j), with
// b_i^j marking the start of an active range:
//
//   x_i^j - b_i^j <= x_i^{j-1}        (index j taken modulo |E|-1)
//   sum_j b_i^j   <= k                (kR only)
//   x_i^j + x_l^j <= 1                (i, l in conflict during E[j])
//   x_i^j = 0                         (hard mode, i covers an anchor in E[j])
//
// maximizing sum x_i^j |E[j]|. The 0/1-model uses one y_i per label.

#ifndef ROTLABEL_EXACT_H_
#define ROTLABEL_EXACT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rotlabel/geometry.h"
#include "rotlabel/model.h"

namespace rotlabel {

// Angles are turned into integer ticks of 2^-40 rad for optimization, so
// objective comparisons inside the solver are exact.
inline constexpr double kTicksPerRadian = 1099511627776.0;  // 2^40
std::int64_t to_ticks(double radians);
double from_ticks(std::int64_t ticks);

struct ConflictConstraint {
  std::size_t i = 0;  // i < l
  std::size_t l = 0;
  std::size_t interval = 0;
};

struct AtomicIntervalModel {
  ModelConfig config;
  bool minimize_ranges = false;
  std::size_t label_count = 0;
  std::vector<double> events;     // E, events.front() == 0, back() == 2π
  std::vector<double> lengths;    // |E[j]|, size events.size() - 1
  double shortest = kTwoPi;       // s
  // forbidden[i][j]: label i must stay inactive during E[j] (hard mode).
  std::vector<std::vector<bool>> forbidden;
  std::vector<ConflictConstraint> conflicts;  // sorted by (i, l, interval)
  // Pairs with a non-empty conflict set; the conflict graph.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t interval_count() const { return lengths.size(); }
  bool zero_one() const { return config.ranges == RangeModel::kZeroOne; }
  bool has_begin_variables() const {
    return config.ranges == RangeModel::kBounded;
  }
  std::size_t activity_variable_count() const;
  std::size_t begin_variable_count() const;
};

// Throws std::invalid_argument for kR with k < 1, and for minimize_ranges
// outside the kR and ∞R models.
AtomicIntervalModel build_model(const ConflictStructure& cs,
                                const ModelConfig& cfg,
                                bool minimize_ranges = false);

// Regular labeling from per-label activity over the model's intervals.
RotationLabeling labeling_from_activity(
    const AtomicIntervalModel& model,
    const std::vector<std::vector<bool>>& x);

struct ExactOptions {
  std::chrono::duration<double> time_limit_per_component{60.0};
};

struct ExactSolution {
  RotationLabeling labeling;
  double objective = 0.0;       // total activity, radians
  std::size_t range_count = 0;  // sum over labels of active ranges
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> component_optimal;
  std::uint64_t nodes = 0;

  bool optimal() const;
};

// Solves every connected component of the conflict graph to optimality (or
// until its time limit, returning the best labeling found).
ExactSolution solve_exact(const AtomicIntervalModel& model,
                          const ExactOptions& options = {});

// Among maximum-activity labelings, one with fewest active ranges.
ExactSolution minimize_ranges_solve(const AtomicIntervalModel& model,
                                    const ExactOptions& options = {});

// Convenience: build_model + solve_exact.
ExactSolution solve_exact(const ConflictStructure& cs, const ModelConfig& cfg,
                          const ExactOptions& options = {});

}  // namespace rotlabel

#endif  // ROTLABEL_EXACT_H_
