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

// Conflict sets of co-rotating anchored rectangles.
//
// Every label turns by the same angle α about its own anchor. Turning the
// whole frame back by α makes both rectangles axis-parallel again while the
// anchor offset Δ = p2 - p1 turns into R(-α)Δ = r·(cos(θ-α), sin(θ-α)).
// The rectangles overlap iff each coordinate of that vector lies in an open
// slab, so a conflict set is the intersection of two circle/slab arc sets.

#ifndef ROTLABEL_GEOMETRY_H_
#define ROTLABEL_GEOMETRY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "rotlabel/angular.h"
#include "rotlabel/model.h"

namespace rotlabel {

// Endpoints of conflict ranges closer than this become one event.
inline constexpr double kEventEpsilon = 1e-9;

// Angles at which the interiors of l1 and l2 intersect.
// Throws std::invalid_argument when the anchors coincide.
AngularSet soft_conflict_set(const AnchoredLabel& l1, const AnchoredLabel& l2);

// Angles at which l1 covers the anchor point of l2.
AngularSet hard_conflict_set(const AnchoredLabel& l1, const AnchoredLabel& l2);

// Angles at which r·cos(phase - α) lies in the open interval (lo, hi).
AngularSet slab_arcs(double r, double phase, double lo, double hi);

struct PairConflict {
  std::size_t i = 0;  // label index, i < j
  std::size_t j = 0;
  AngularSet soft;
  AngularSet hard_i_covers_j;
  AngularSet hard_j_covers_i;

  std::size_t other(std::size_t label) const { return label == i ? j : i; }
  // Angles where `label` covers the other label's anchor.
  const AngularSet& hard_by(std::size_t label) const {
    return label == i ? hard_i_covers_j : hard_j_covers_i;
  }
};

struct ConflictStats {
  std::size_t labels = 0;        // n
  std::size_t events = 0;        // e = |E| - 2
  std::size_t max_degree = 0;    // c, conflicts per label
  std::size_t pairs = 0;
};

// Immutable conflict structure of an instance: conflicting pairs sorted by
// (i, j), the sorted global event list E (starting at 0 and ending at 2π),
// the conflict graph and, per label, the union of its hard-conflict ranges.
//
// All stored endpoints are snapped onto E, so set operations downstream
// only ever compare angles that are bitwise equal.
class ConflictStructure {
 public:
  ConflictStructure() = default;
  // extra_forbidden, when non-empty, holds one additional hard-conflict set
  // per label (obstacles that are not part of this structure's pairs).
  ConflictStructure(std::size_t label_count, std::vector<PairConflict> pairs,
                    std::vector<AngularSet> extra_forbidden = {});

  std::size_t label_count() const { return label_count_; }
  const std::vector<PairConflict>& pairs() const { return pairs_; }
  const PairConflict& pair(std::size_t p) const { return pairs_[p]; }
  // Indices into pairs() for the pairs that involve `label`.
  const std::vector<std::size_t>& incident(std::size_t label) const {
    return incident_[label];
  }
  const std::vector<double>& events() const { return events_; }
  std::size_t atomic_interval_count() const { return events_.size() - 1; }
  // Union of all angles where `label` covers some other anchor.
  const AngularSet& forbidden(std::size_t label) const {
    return forbidden_[label];
  }
  ConflictStats stats() const;

  // The structure induced by a subset of labels (new indices follow the
  // order of `labels`). Hard conflicts of kept labels against anchors in
  // `hard_sources` survive as forbidden ranges.
  ConflictStructure restrict_to(std::span<const std::size_t> labels,
                                std::span<const std::size_t> hard_sources) const;

 private:
  std::size_t label_count_ = 0;
  std::vector<PairConflict> pairs_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<AngularSet> forbidden_;
  std::vector<AngularSet> extra_forbidden_;
  std::vector<double> events_{0.0, kTwoPi};
};

ConflictStructure build_conflicts(const Instance& inst);

}  // namespace rotlabel

#endif  // ROTLABEL_GEOMETRY_H_
