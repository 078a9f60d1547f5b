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


#include "rotlabel/qapx.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace rotlabel {

GridDecomposition decompose(const Instance& inst) {
  GridDecomposition g;
  const std::size_t n = inst.size();
  if (n == 0) return g;
  const double reach = inst.max_diagonal();
  g.cell_side = 2.0 * reach;
  g.origin = inst[0].anchor;
  for (const auto& l : inst.labels()) {
    g.origin.x = std::min(g.origin.x, l.anchor.x);
    g.origin.y = std::min(g.origin.y, l.anchor.y);
  }
  auto index = [&](double v, double o) {
    return static_cast<std::int64_t>(std::floor((v - o) / g.cell_side));
  };
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> by_cell;
  for (std::size_t i = 0; i < n; ++i) {
    by_cell[{index(inst[i].anchor.y, g.origin.y),
             index(inst[i].anchor.x, g.origin.x)}]
        .push_back(i);
  }
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> slot;
  for (auto& [rc, labels] : by_cell) {
    slot[rc] = g.cells.size();
    g.cells.push_back({rc.first, rc.second, labels, {}});
  }
  g.cell_of.resize(n);
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (const std::size_t i : g.cells[c].labels) g.cell_of[i] = c;
  }
  // The side exceeds the buffer distance, so buffer anchors sit in the
  // eight surrounding cells.
  for (auto& cell : g.cells) {
    const double x0 = g.origin.x + static_cast<double>(cell.col) * g.cell_side;
    const double y0 = g.origin.y + static_cast<double>(cell.row) * g.cell_side;
    for (std::int64_t dr = -1; dr <= 1; ++dr) {
      for (std::int64_t dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const auto it = by_cell.find({cell.row + dr, cell.col + dc});
        if (it == by_cell.end()) continue;
        for (const std::size_t i : it->second) {
          const Point p = inst[i].anchor;
          const double dx = std::max({x0 - p.x, 0.0, p.x - (x0 + g.cell_side)});
          const double dy = std::max({y0 - p.y, 0.0, p.y - (y0 + g.cell_side)});
          if (std::hypot(dx, dy) <= reach) cell.buffer.push_back(i);
        }
      }
    }
    std::sort(cell.buffer.begin(), cell.buffer.end());
  }
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    g.kept[static_cast<std::size_t>(g.cells[c].parity())].push_back(c);
  }
  return g;
}

QapxResult qapx_solve(const Instance& inst, const ConflictStructure& cs,
                      const ModelConfig& cfg, const QapxOptions& options) {
  cfg.validate();
  const std::size_t n = inst.size();
  const GridDecomposition g = decompose(inst);
  QapxResult best;
  best.labeling = RotationLabeling::empty(n, cfg);
  bool have = false;
  for (std::size_t p = 0; p < 4; ++p) {
    RotationLabeling phi = RotationLabeling::empty(n, cfg);
    std::vector<bool> kept(n, false);
    for (const std::size_t c : g.kept[p]) {
      const GridCell& cell = g.cells[c];
      const std::vector<std::size_t> none;
      const ConflictStructure sub =
          cs.restrict_to(cell.labels, cfg.hard() ? cell.buffer : none);
      const ExactSolution sol = solve_exact(sub, cfg, options.exact);
      if (!sol.optimal()) best.cells_optimal = false;
      for (std::size_t k = 0; k < cell.labels.size(); ++k) {
        phi.active[cell.labels[k]] = sol.labeling.active[k];
        kept[cell.labels[k]] = true;
      }
    }
    if (options.post) {
      GreedyOptions go;
      go.strategy = *options.post;
      go.frozen = kept;
      go.committed = &phi;
      phi = greedy_solve(cs, cfg, go);
    }
    const double t = total_activity(phi);
    best.activity[p] = t;
    if (!have || t > total_activity(best.labeling)) {
      best.labeling = std::move(phi);
      best.subinstance = static_cast<int>(p);
      have = true;
    }
  }
  best.labeling.model = cfg;
  return best;
}

}  // namespace rotlabel
