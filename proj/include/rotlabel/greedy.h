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

// Greedy active-range assignment (GreedyMax, GreedyLowCost, GreedyBestRatio).
//
// All three heuristics repeatedly pick a pending label, give it its maximum
// active range and shrink the admissible sets of its conflict partners. A
// label stays pending while it has fewer ranges than the model allows and a
// non-degenerate range left. They differ only in the selection key.

#ifndef ROTLABEL_GREEDY_H_
#define ROTLABEL_GREEDY_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rotlabel/angular.h"
#include "rotlabel/geometry.h"
#include "rotlabel/model.h"

namespace rotlabel {

// Ranges shorter than this are never assigned.
inline constexpr double kMinRangeLength = 1e-9;

enum class GreedyStrategy { kMax, kLowCost, kBestRatio };

// kSweep keeps admissible sets as AngularSets and recomputes maximum ranges
// by a linear sweep. kIntervalTree (GreedyMax only) keeps one ordered
// endpoint tree and one lazy max-heap of free arcs per label.
enum class GreedyEngine { kSweep, kIntervalTree };

std::string_view strategy_name(GreedyStrategy s);  // "gm", "glc", "gbr"

struct GreedyOptions {
  GreedyStrategy strategy = GreedyStrategy::kMax;
  GreedyEngine engine = GreedyEngine::kSweep;
  // Labels flagged here keep the activity given in `committed` and take no
  // part in the selection; their ranges still block conflict partners.
  std::vector<bool> frozen;
  const RotationLabeling* committed = nullptr;
};

// Working state of the sweep engine: admissible sets, current maximum
// active ranges and assigned ranges per label.
class CandidateState {
 public:
  CandidateState(const ConflictStructure& cs, const ModelConfig& cfg);

  const AngularSet& admissible(std::size_t label) const {
    return admissible_[label];
  }
  const AngularSet& active(std::size_t label) const { return active_[label]; }
  std::size_t ranges_assigned(std::size_t label) const {
    return count_[label];
  }
  bool pending(std::size_t label) const { return pending_[label]; }

  // Longest arc of the admissible set that the model lets the label take.
  CircularInterval max_active_range(std::size_t label) const;
  // Total shrinkage of pending partners' maximum ranges if `label` took its
  // maximum range now.
  double assignment_cost(std::size_t label) const;

  // Gives `label` the range and removes it from partners' admissible sets.
  void commit(std::size_t label, const CircularInterval& range);
  // Fixes an externally computed activity and retires the label.
  void freeze(std::size_t label, const AngularSet& activity);
  // Removes the label from the pending set without assigning anything.
  void retire(std::size_t label);

  RotationLabeling labeling() const;

 private:
  CircularInterval candidate_from(const AngularSet& admissible) const;
  void block_partners(std::size_t label, const AngularSet& activity);
  void refresh_pending(std::size_t label);

  const ConflictStructure& cs_;
  ModelConfig cfg_;
  std::vector<AngularSet> admissible_;
  std::vector<AngularSet> active_;
  std::vector<std::size_t> count_;
  std::vector<bool> pending_;
};

// Valid labeling under cfg. ZeroOne is supported by only offering full
// circles; ∞R runs range rounds until nothing positive is left and sets
// RotationLabeling::unbounded_greedy_extension.
RotationLabeling greedy_solve(const ConflictStructure& cs,
                              const ModelConfig& cfg,
                              const GreedyOptions& options = {});

inline RotationLabeling greedy_solve(const ConflictStructure& cs,
                                     const ModelConfig& cfg,
                                     GreedyStrategy strategy) {
  GreedyOptions options;
  options.strategy = strategy;
  return greedy_solve(cs, cfg, options);
}

// Selection trace (label index and key length per pick) of the last run is
// useful for tests; exposed through this variant.
struct GreedyTrace {
  std::vector<std::size_t> labels;
  std::vector<CircularInterval> ranges;
};
RotationLabeling greedy_solve_traced(const ConflictStructure& cs,
                                     const ModelConfig& cfg,
                                     const GreedyOptions& options,
                                     GreedyTrace& trace);

}  // namespace rotlabel

#endif  // ROTLABEL_GREEDY_H_
