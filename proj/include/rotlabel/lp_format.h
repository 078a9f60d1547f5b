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


// LP text (CPLEX LP format) for the atomic-interval model, and solution
// files in the "name value" form written by common MIP solvers.

#ifndef ROTLABEL_LP_FORMAT_H_
#define ROTLABEL_LP_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "rotlabel/exact.h"
#include "rotlabel/model.h"

namespace rotlabel {

// Variables x_<i>_<j> (label i active during interval j), b_<i>_<j> (a range
// of label i begins at interval j) and, for the 0/1 model, y_<i>. Output is
// deterministic; coefficients use 12 significant digits.
std::string emit_lp(const AtomicIntervalModel& model);

struct LpCounts {
  std::size_t binaries = 0;
  std::size_t run = 0;
  std::size_t conflict = 0;
  std::size_t budget = 0;
  std::size_t cover = 0;
};
// Counts sections of an emitted document by constraint name prefix.
LpCounts count_lp(std::string_view lp);

// Solution file for `phi` in the variables of `model`.
std::string write_solution(const AtomicIntervalModel& model,
                           const RotationLabeling& phi);

// Reads "name value" lines ('#' starts a comment). Variables outside the
// model are rejected with std::runtime_error; b variables are ignored.
RotationLabeling read_solution(const AtomicIntervalModel& model,
                               std::string_view text);

}  // namespace rotlabel

#endif  // ROTLABEL_LP_FORMAT_H_
