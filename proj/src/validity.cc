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

#include "rotlabel/validity.h"

#include <sstream>
#include <stdexcept>

namespace rotlabel {

std::string ValidityReport::summary() const {
  std::ostringstream os;
  os << soft.size() << " soft, " << hard.size() << " hard, " << ranges.size()
     << " range-count violations";
  return os.str();
}

ValidityReport check_validity(const RotationLabeling& phi,
                              const ConflictStructure& cs,
                              const ModelConfig& cfg) {
  if (phi.size() != cs.label_count()) {
    throw std::invalid_argument("labeling and conflict structure differ in size");
  }
  ValidityReport report;
  for (const PairConflict& pc : cs.pairs()) {
    const AngularSet both = intersect(phi.active[pc.i], phi.active[pc.j]);
    if (both.empty()) continue;
    AngularSet overlap = intersect(both, pc.soft);
    if (!overlap.empty()) report.soft.push_back({pc.i, pc.j, std::move(overlap)});
  }
  const auto budget = cfg.range_budget();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const AngularSet& a = phi.active[i];
    if (cfg.hard()) {
      AngularSet overlap = intersect(a, cs.forbidden(i));
      if (!overlap.empty()) report.hard.push_back({i, std::move(overlap)});
    }
    const std::size_t n = a.interval_count();
    if (cfg.ranges == RangeModel::kZeroOne) {
      if (!a.empty() && !a.is_full()) report.ranges.push_back({i, n, true});
    } else if (budget && n > static_cast<std::size_t>(*budget)) {
      report.ranges.push_back({i, n, false});
    }
  }
  return report;
}

}  // namespace rotlabel
