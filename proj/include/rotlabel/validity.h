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

// Validity of a rotation labeling against a conflict structure.

#ifndef ROTLABEL_VALIDITY_H_
#define ROTLABEL_VALIDITY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "rotlabel/angular.h"
#include "rotlabel/geometry.h"
#include "rotlabel/model.h"

namespace rotlabel {

struct SoftViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  AngularSet overlap;  // both active inside their conflict set
};

struct HardViolation {
  std::size_t label = 0;
  AngularSet overlap;  // active while covering another anchor
};

struct RangeViolation {
  std::size_t label = 0;
  std::size_t ranges = 0;
  // True when the 0/1 model is violated (neither empty nor full).
  bool partial_zero_one = false;
};

struct ValidityReport {
  std::vector<SoftViolation> soft;
  std::vector<HardViolation> hard;
  std::vector<RangeViolation> ranges;

  bool valid() const { return soft.empty() && hard.empty() && ranges.empty(); }
  std::string summary() const;
};

// Checks pairwise conflicts at the set level; in hard mode also activity
// inside forbidden ranges, and per-label range counts against the model.
// Throws std::invalid_argument if phi and cs disagree on the label count.
ValidityReport check_validity(const RotationLabeling& phi,
                              const ConflictStructure& cs,
                              const ModelConfig& cfg);

}  // namespace rotlabel

#endif  // ROTLABEL_VALIDITY_H_
