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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rotlabel/exact.h"

namespace rotlabel {

std::int64_t to_ticks(double radians) {
  return std::llround(radians * kTicksPerRadian);
}

double from_ticks(std::int64_t ticks) {
  return static_cast<double>(ticks) / kTicksPerRadian;
}

std::size_t AtomicIntervalModel::activity_variable_count() const {
  return zero_one() ? label_count : label_count * interval_count();
}

std::size_t AtomicIntervalModel::begin_variable_count() const {
  return has_begin_variables() ? label_count * interval_count() : 0;
}

namespace {

std::size_t event_index(const std::vector<double>& events, double angle) {
  const auto it = std::lower_bound(events.begin(), events.end(), angle);
  if (it == events.end() || *it != angle) {
    throw std::logic_error("conflict endpoint is not an event");
  }
  return static_cast<std::size_t>(it - events.begin());
}

}  // namespace

AtomicIntervalModel build_model(const ConflictStructure& cs,
                                const ModelConfig& cfg, bool minimize_ranges) {
  cfg.validate();
  if (minimize_ranges && cfg.ranges == RangeModel::kZeroOne) {
    throw std::invalid_argument(
        "range minimization needs the kR or the ∞R model");
  }
  AtomicIntervalModel m;
  m.config = cfg;
  m.minimize_ranges = minimize_ranges;
  m.label_count = cs.label_count();
  m.events = cs.events();
  const std::size_t intervals = m.events.size() - 1;
  m.lengths.resize(intervals);
  for (std::size_t j = 0; j < intervals; ++j) {
    m.lengths[j] = m.events[j + 1] - m.events[j];
    m.shortest = std::min(m.shortest, m.lengths[j]);
  }

  m.forbidden.assign(m.label_count, std::vector<bool>(intervals, false));
  if (cfg.hard()) {
    for (std::size_t i = 0; i < m.label_count; ++i) {
      for (const auto& seg : cs.forbidden(i).segments()) {
        const std::size_t a = event_index(m.events, seg.lo);
        const std::size_t b = event_index(m.events, seg.hi);
        for (std::size_t j = a; j < b; ++j) m.forbidden[i][j] = true;
      }
    }
  }

  for (const auto& p : cs.pairs()) {
    m.edges.emplace_back(p.i, p.j);
    for (const auto& seg : p.soft.segments()) {
      const std::size_t a = event_index(m.events, seg.lo);
      const std::size_t b = event_index(m.events, seg.hi);
      for (std::size_t j = a; j < b; ++j) m.conflicts.push_back({p.i, p.j, j});
    }
  }
  return m;
}

RotationLabeling labeling_from_activity(
    const AtomicIntervalModel& model,
    const std::vector<std::vector<bool>>& x) {
  if (x.size() != model.label_count) {
    throw std::invalid_argument("activity matrix has wrong label count");
  }
  RotationLabeling phi = RotationLabeling::empty(model.label_count, model.config);
  for (std::size_t i = 0; i < model.label_count; ++i) {
    if (x[i].size() != model.interval_count()) {
      throw std::invalid_argument("activity row has wrong interval count");
    }
    std::vector<Segment> segs;
    for (std::size_t j = 0; j < model.interval_count(); ++j) {
      if (x[i][j]) segs.push_back({model.events[j], model.events[j + 1]});
    }
    phi.active[i] = AngularSet::from_segments(std::move(segs));
  }
  return phi;
}

bool ExactSolution::optimal() const {
  return std::all_of(component_optimal.begin(), component_optimal.end(),
                     [](bool b) { return b; });
}

}  // namespace rotlabel
