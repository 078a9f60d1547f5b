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


// Shifting-grid approximation. The plane is cut into square cells whose
// side is twice the largest label diagonal; dropping every other row and
// every other column leaves four subinstances in which labels of different
// cells can never meet. Each kept cell is solved exactly and the best of the
// four subinstances is kept, optionally after greedy completion.

#ifndef ROTLABEL_QAPX_H_
#define ROTLABEL_QAPX_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rotlabel/exact.h"
#include "rotlabel/geometry.h"
#include "rotlabel/greedy.h"
#include "rotlabel/model.h"

namespace rotlabel {

struct GridCell {
  std::int64_t row = 0;
  std::int64_t col = 0;
  std::vector<std::size_t> labels;
  // Labels of other cells whose anchors lie within one diagonal of this
  // cell; in hard mode they are anchors the cell's labels must not cover.
  std::vector<std::size_t> buffer;

  // 0..3: (even, even), (even, odd), (odd, even), (odd, odd).
  int parity() const {
    return static_cast<int>(((row & 1) << 1) | (col & 1));
  }
};

struct GridDecomposition {
  double cell_side = 0.0;
  Point origin;                 // bounding-box minimum of the anchors
  std::vector<GridCell> cells;  // sorted by (row, col)
  std::vector<std::size_t> cell_of;  // per label, index into cells
  // Per subinstance, indices into cells of the kept cells.
  std::array<std::vector<std::size_t>, 4> kept;
};

GridDecomposition decompose(const Instance& inst);

struct QapxOptions {
  std::optional<GreedyStrategy> post;
  ExactOptions exact;
};

struct QapxResult {
  RotationLabeling labeling;
  int subinstance = 0;                  // index of the winning subinstance
  std::array<double, 4> activity{};     // per subinstance, after post
  bool cells_optimal = true;            // no cell hit its time limit
};

QapxResult qapx_solve(const Instance& inst, const ConflictStructure& cs,
                      const ModelConfig& cfg, const QapxOptions& options = {});

}  // namespace rotlabel

#endif  // ROTLABEL_QAPX_H_
