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

#include "rotlabel/greedy.h"

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "greedy_internal.h"

namespace rotlabel {

std::string_view strategy_name(GreedyStrategy s) {
  switch (s) {
    case GreedyStrategy::kMax:
      return "gm";
    case GreedyStrategy::kLowCost:
      return "glc";
    case GreedyStrategy::kBestRatio:
      return "gbr";
  }
  return "gm";
}

CandidateState::CandidateState(const ConflictStructure& cs,
                               const ModelConfig& cfg)
    : cs_(cs),
      cfg_(cfg),
      admissible_(cs.label_count(), AngularSet::full()),
      active_(cs.label_count()),
      count_(cs.label_count(), 0),
      pending_(cs.label_count(), true) {
  cfg_.validate();
  for (std::size_t i = 0; i < cs.label_count(); ++i) {
    if (cfg_.hard()) admissible_[i] = complement(cs.forbidden(i));
    refresh_pending(i);
  }
}

CircularInterval CandidateState::candidate_from(
    const AngularSet& admissible) const {
  if (cfg_.ranges == RangeModel::kZeroOne) {
    return admissible.is_full() ? CircularInterval::full() : CircularInterval{};
  }
  const CircularInterval best = longest_interval(admissible);
  if (best.length() < kMinRangeLength) return {};
  return best;
}

CircularInterval CandidateState::max_active_range(std::size_t label) const {
  return candidate_from(admissible_[label]);
}

double CandidateState::assignment_cost(std::size_t label) const {
  const CircularInterval range = max_active_range(label);
  if (range.empty()) return 0.0;
  const AngularSet taken(range);
  double cost = 0.0;
  for (const std::size_t p : cs_.incident(label)) {
    const PairConflict& pc = cs_.pair(p);
    const std::size_t other = pc.other(label);
    if (!pending_[other]) continue;
    const AngularSet blocked = intersect(taken, pc.soft);
    if (blocked.empty()) continue;
    const double before = max_active_range(other).length();
    const double after =
        candidate_from(subtract(admissible_[other], blocked)).length();
    const double shrink = before - after;
    if (shrink > kAngularEpsilon) cost += shrink;
  }
  return cost;
}

void CandidateState::block_partners(std::size_t label,
                                    const AngularSet& activity) {
  for (const std::size_t p : cs_.incident(label)) {
    const PairConflict& pc = cs_.pair(p);
    const std::size_t other = pc.other(label);
    const AngularSet blocked = intersect(activity, pc.soft);
    if (blocked.empty()) continue;
    admissible_[other] = subtract(admissible_[other], blocked);
    refresh_pending(other);
  }
}

void CandidateState::refresh_pending(std::size_t label) {
  if (!pending_[label]) return;
  const auto budget = cfg_.range_budget();
  if (budget && count_[label] >= static_cast<std::size_t>(*budget)) {
    pending_[label] = false;
    return;
  }
  if (max_active_range(label).empty()) pending_[label] = false;
}

void CandidateState::commit(std::size_t label, const CircularInterval& range) {
  if (range.empty()) throw std::invalid_argument("commit: empty range");
  const AngularSet taken(range);
  active_[label] = unite(active_[label], taken);
  ++count_[label];
  admissible_[label] = subtract(admissible_[label], taken);
  block_partners(label, taken);
  refresh_pending(label);
}

void CandidateState::freeze(std::size_t label, const AngularSet& activity) {
  active_[label] = activity;
  count_[label] = activity.interval_count();
  pending_[label] = false;
  admissible_[label] = AngularSet{};
  block_partners(label, activity);
}

void CandidateState::retire(std::size_t label) { pending_[label] = false; }

RotationLabeling CandidateState::labeling() const {
  RotationLabeling phi;
  phi.active = active_;
  phi.model = cfg_;
  phi.unbounded_greedy_extension = cfg_.ranges == RangeModel::kUnbounded;
  return phi;
}

namespace internal {

bool SelectionEntry::operator<(const SelectionEntry& o) const {
  // std::priority_queue pops the largest element; "larger" means preferred.
  if (primary != o.primary) return primary < o.primary;
  if (secondary != o.secondary) return secondary < o.secondary;
  if (label != o.label) return label > o.label;
  return start > o.start;
}

}  // namespace internal

namespace {

using internal::SelectionEntry;

SelectionEntry make_entry(const CandidateState& state, GreedyStrategy strategy,
                          std::size_t label, std::uint64_t version) {
  const CircularInterval range = state.max_active_range(label);
  const std::int64_t key = length_key(range.length());
  SelectionEntry e;
  e.label = label;
  e.start = range.start();
  e.version = version;
  switch (strategy) {
    case GreedyStrategy::kMax:
      e.primary = static_cast<double>(key);
      break;
    case GreedyStrategy::kLowCost:
      e.primary = -state.assignment_cost(label);
      e.secondary = key;
      break;
    case GreedyStrategy::kBestRatio: {
      const double cost = state.assignment_cost(label);
      e.primary = cost > 0.0 ? range.length() / cost
                             : std::numeric_limits<double>::infinity();
      e.secondary = key;
      break;
    }
  }
  return e;
}

RotationLabeling sweep_solve(const ConflictStructure& cs,
                             const ModelConfig& cfg,
                             const GreedyOptions& options, GreedyTrace* trace) {
  const std::size_t n = cs.label_count();
  CandidateState state(cs, cfg);
  for (std::size_t i = 0; i < n && i < options.frozen.size(); ++i) {
    if (!options.frozen[i]) continue;
    state.freeze(i, options.committed ? options.committed->active[i]
                                      : AngularSet{});
  }

  std::vector<std::uint64_t> version(n, 0);
  std::priority_queue<SelectionEntry> heap;
  for (std::size_t i = 0; i < n; ++i) {
    if (state.pending(i)) heap.push(make_entry(state, options.strategy, i, 0));
  }

  const bool cost_based = options.strategy != GreedyStrategy::kMax;
  std::vector<std::uint64_t> touched_mark(n, 0);
  std::uint64_t round = 0;
  std::vector<std::size_t> affected;
  while (!heap.empty()) {
    const SelectionEntry top = heap.top();
    heap.pop();
    if (top.version != version[top.label] || !state.pending(top.label)) continue;

    const std::size_t label = top.label;
    const CircularInterval range = state.max_active_range(label);
    state.commit(label, range);
    if (trace) {
      trace->labels.push_back(label);
      trace->ranges.push_back(range);
    }

    // Maximum ranges change for the label and its partners; costs also
    // depend on the partners' partners.
    ++round;
    affected.clear();
    auto touch = [&](std::size_t v) {
      if (touched_mark[v] != round) {
        touched_mark[v] = round;
        affected.push_back(v);
      }
    };
    touch(label);
    for (const std::size_t p : cs.incident(label)) {
      const std::size_t other = cs.pair(p).other(label);
      touch(other);
      if (cost_based) {
        for (const std::size_t q : cs.incident(other)) {
          touch(cs.pair(q).other(other));
        }
      }
    }
    for (const std::size_t v : affected) {
      ++version[v];
      if (state.pending(v)) {
        heap.push(make_entry(state, options.strategy, v, version[v]));
      }
    }
  }
  return state.labeling();
}

}  // namespace

RotationLabeling greedy_solve_traced(const ConflictStructure& cs,
                                     const ModelConfig& cfg,
                                     const GreedyOptions& options,
                                     GreedyTrace& trace) {
  if (options.engine == GreedyEngine::kIntervalTree) {
    if (options.strategy != GreedyStrategy::kMax) {
      throw std::invalid_argument(
          "the interval-tree engine implements GreedyMax only");
    }
    return internal::interval_tree_max_solve(cs, cfg, options, &trace);
  }
  return sweep_solve(cs, cfg, options, &trace);
}

RotationLabeling greedy_solve(const ConflictStructure& cs,
                              const ModelConfig& cfg,
                              const GreedyOptions& options) {
  if (options.engine == GreedyEngine::kIntervalTree) {
    if (options.strategy != GreedyStrategy::kMax) {
      throw std::invalid_argument(
          "the interval-tree engine implements GreedyMax only");
    }
    return internal::interval_tree_max_solve(cs, cfg, options, nullptr);
  }
  return sweep_solve(cs, cfg, options, nullptr);
}

}  // namespace rotlabel
