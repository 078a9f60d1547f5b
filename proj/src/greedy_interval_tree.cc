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

// GreedyMax in O(cn log n): every label owns a balanced tree of its free
// segments (split at 2π) and a max-heap of its free arcs. Committing a range
// only touches the partners' trees around the blocked endpoints; heap
// entries that no longer match the tree are discarded when they surface.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "greedy_internal.h"

namespace rotlabel::internal {
namespace {

struct FreeArc {
  CircularInterval arc;
  std::int64_t key = 0;

  // Max-heap order: longer first, then smaller start.
  bool operator<(const FreeArc& o) const {
    if (key != o.key) return key < o.key;
    return arc.start() > o.arc.start();
  }
};

class LabelArcs {
 public:
  void reset(const AngularSet& admissible) {
    segments_.clear();
    heap_ = {};
    for (const auto& s : admissible.segments()) segments_.emplace(s.lo, s.hi);
    for (const auto& a : admissible.intervals()) push(a);
  }

  void clear() {
    segments_.clear();
    heap_ = {};
  }

  // Removes `blocked` from the free segments.
  void remove(const AngularSet& blocked) {
    if (segments_.empty()) return;
    bool changed = false;
    std::vector<std::pair<double, double>> pieces;
    for (const auto& f : blocked.segments()) {
      const std::size_t first_piece = pieces.size();
      auto it = segments_.upper_bound(f.lo);
      if (it != segments_.begin()) {
        --it;
        if (it->second <= f.lo) ++it;
      }
      while (it != segments_.end() && it->first < f.hi) {
        const double lo = it->first;
        const double hi = it->second;
        it = segments_.erase(it);
        changed = true;
        if (f.lo - lo > kAngularEpsilon) pieces.emplace_back(lo, f.lo);
        if (hi - f.hi > kAngularEpsilon) pieces.emplace_back(f.hi, hi);
      }
      // Later blocked segments may cut these pieces again.
      for (std::size_t k = first_piece; k < pieces.size(); ++k) {
        segments_.emplace(pieces[k]);
      }
    }
    if (!changed) return;
    for (const auto& [lo, hi] : pieces) {
      if (segments_.count(lo) && segments_.at(lo) == hi) push(arc_at(lo));
    }
    // A segment at 0 and one ending at 2π form one arc; if either side was
    // cut, the other side's arc changed as well.
    if (!segments_.empty()) {
      if (segments_.begin()->first == 0.0) push(arc_at(0.0));
      const auto last = std::prev(segments_.end());
      if (last->second == kTwoPi) push(arc_at(last->first));
    }
  }

  std::optional<CircularInterval> top() {
    while (!heap_.empty()) {
      const FreeArc& t = heap_.top();
      if (valid(t.arc)) return t.arc;
      heap_.pop();
    }
    return std::nullopt;
  }

 private:
  CircularInterval arc_at(double lo) const {
    const auto it = segments_.find(lo);
    const double hi = it->second;
    const auto first = segments_.begin();
    const auto last = std::prev(segments_.end());
    if (lo == 0.0 && hi == kTwoPi) return CircularInterval::full();
    if (lo == 0.0 && last->second == kTwoPi && last != it) {
      return {last->first, hi};
    }
    if (hi == kTwoPi && first->first == 0.0 && first != it) {
      return {lo, first->second};
    }
    return {lo, hi};
  }

  bool valid(const CircularInterval& arc) const {
    const auto it = segments_.find(arc.start());
    if (it == segments_.end()) return false;
    return arc_at(arc.start()) == arc;
  }

  void push(const CircularInterval& arc) {
    heap_.push({arc, length_key(arc.length())});
  }

  std::map<double, double> segments_;
  std::priority_queue<FreeArc> heap_;
};

class IntervalTreeMax {
 public:
  IntervalTreeMax(const ConflictStructure& cs, const ModelConfig& cfg)
      : cs_(cs),
        cfg_(cfg),
        arcs_(cs.label_count()),
        active_(cs.label_count()),
        count_(cs.label_count(), 0),
        retired_(cs.label_count(), false),
        version_(cs.label_count(), 0) {
    cfg_.validate();
    for (std::size_t i = 0; i < cs.label_count(); ++i) {
      arcs_[i].reset(cfg_.hard() ? complement(cs.forbidden(i))
                                 : AngularSet::full());
    }
  }

  void freeze(std::size_t label, const AngularSet& activity) {
    active_[label] = activity;
    retired_[label] = true;
    arcs_[label].clear();
    block_partners(label, activity);
  }

  RotationLabeling run(GreedyTrace* trace) {
    const std::size_t n = cs_.label_count();
    for (std::size_t i = 0; i < n; ++i) push_entry(i);
    while (!heap_.empty()) {
      const SelectionEntry top = heap_.top();
      heap_.pop();
      if (top.version != version_[top.label]) continue;
      const std::size_t label = top.label;
      const auto range = candidate(label);
      if (!range) continue;
      commit(label, *range);
      if (trace) {
        trace->labels.push_back(label);
        trace->ranges.push_back(*range);
      }
    }
    RotationLabeling phi;
    phi.active = std::move(active_);
    phi.model = cfg_;
    phi.unbounded_greedy_extension = cfg_.ranges == RangeModel::kUnbounded;
    return phi;
  }

 private:
  std::optional<CircularInterval> candidate(std::size_t label) {
    if (retired_[label]) return std::nullopt;
    const auto budget = cfg_.range_budget();
    if (budget && count_[label] >= static_cast<std::size_t>(*budget)) {
      return std::nullopt;
    }
    const auto best = arcs_[label].top();
    if (!best || best->length() < kMinRangeLength) return std::nullopt;
    if (cfg_.ranges == RangeModel::kZeroOne && !best->is_full()) {
      return std::nullopt;
    }
    return best;
  }

  void push_entry(std::size_t label) {
    ++version_[label];
    const auto range = candidate(label);
    if (!range) return;
    SelectionEntry e;
    e.primary = static_cast<double>(length_key(range->length()));
    e.label = label;
    e.start = range->start();
    e.version = version_[label];
    heap_.push(e);
  }

  void block_partners(std::size_t label, const AngularSet& activity) {
    for (const std::size_t p : cs_.incident(label)) {
      const PairConflict& pc = cs_.pair(p);
      const std::size_t other = pc.other(label);
      const AngularSet blocked = intersect(activity, pc.soft);
      if (blocked.empty()) continue;
      arcs_[other].remove(blocked);
      touched_.push_back(other);
    }
  }

  void commit(std::size_t label, const CircularInterval& range) {
    const AngularSet taken(range);
    active_[label] = unite(active_[label], taken);
    ++count_[label];
    arcs_[label].remove(taken);
    touched_.clear();
    block_partners(label, taken);
    push_entry(label);
    for (const std::size_t v : touched_) push_entry(v);
  }

  const ConflictStructure& cs_;
  ModelConfig cfg_;
  std::vector<LabelArcs> arcs_;
  std::vector<AngularSet> active_;
  std::vector<std::size_t> count_;
  std::vector<bool> retired_;
  std::vector<std::uint64_t> version_;
  std::vector<std::size_t> touched_;
  std::priority_queue<SelectionEntry> heap_;
};

}  // namespace

RotationLabeling interval_tree_max_solve(const ConflictStructure& cs,
                                         const ModelConfig& cfg,
                                         const GreedyOptions& options,
                                         GreedyTrace* trace) {
  IntervalTreeMax solver(cs, cfg);
  for (std::size_t i = 0; i < cs.label_count() && i < options.frozen.size();
       ++i) {
    if (!options.frozen[i]) continue;
    solver.freeze(i, options.committed ? options.committed->active[i]
                                       : AngularSet{});
  }
  return solver.run(trace);
}

}  // namespace rotlabel::internal
