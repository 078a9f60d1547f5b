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

#ifndef ROTLABEL_SRC_GREEDY_INTERNAL_H_
#define ROTLABEL_SRC_GREEDY_INTERNAL_H_

#include <cstddef>
#include <cstdint>

#include "rotlabel/greedy.h"

namespace rotlabel::internal {

// Global selection heap entry, stale once `version` falls behind.
struct SelectionEntry {
  double primary = 0.0;
  std::int64_t secondary = 0;
  std::size_t label = 0;
  double start = 0.0;
  std::uint64_t version = 0;

  bool operator<(const SelectionEntry& o) const;
};

RotationLabeling interval_tree_max_solve(const ConflictStructure& cs,
                                         const ModelConfig& cfg,
                                         const GreedyOptions& options,
                                         GreedyTrace* trace);

}  // namespace rotlabel::internal

#endif  // ROTLABEL_SRC_GREEDY_INTERNAL_H_
