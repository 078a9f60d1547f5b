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


#include <stdexcept>
#include <random>

#include "doctest.h"
#include "rotlabel/exact.h"
#include "rotlabel/geometry.h"
#include "rotlabel/greedy.h"
#include "rotlabel/io.h"
#include "rotlabel/qapx.h"
#include "rotlabel/validity.h"

namespace rotlabel {
namespace {

AnchoredLabel square(int id, double x, double y) {
  AnchoredLabel l;
  l.id = id;
  l.anchor = {x, y};
  return l;
}

}  // namespace

TEST_CASE("unit squares give cells of side 2 sqrt 2") {
  const GridDecomposition g = decompose(Instance({square(0, 0, 0), square(1, 1, 1)}));
  CHECK(g.cell_side == doctest::Approx(2 * std::sqrt(2.0)));
  REQUIRE(g.cells.size() == 1);
  std::size_t holding = 0;
  for (const auto& kept : g.kept) holding += kept.size();
  CHECK(holding == 1);
}

TEST_CASE("far clusters on even rows and columns share a subinstance") {
  const double side = 2 * std::sqrt(2.0);
  const GridDecomposition g =
      decompose(Instance({square(0, 0.1, 0.1), square(1, 10 * side + 0.1, 10 * side + 0.1)}));
  CHECK(g.kept[0].size() == 2);
}

TEST_CASE("labels of different kept cells never conflict") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Instance inst =
        generate_random(GenerateOptions::unit_squares(40, 12.0, rng()));
    const ConflictStructure cs = build_conflicts(inst);
    const GridDecomposition g = decompose(inst);
    for (const auto& kept : g.kept) {
      std::vector<int> cell(inst.size(), -1);
      for (const std::size_t c : kept) {
        for (const std::size_t i : g.cells[c].labels) cell[i] = static_cast<int>(c);
      }
      for (const auto& p : cs.pairs()) {
        if (cell[p.i] >= 0 && cell[p.j] >= 0) CHECK(cell[p.i] == cell[p.j]);
      }
    }
  }
}

TEST_CASE("buffer holds every outside anchor a cell label can cover") {
  std::mt19937_64 rng(9);
  const Instance inst = generate_random(GenerateOptions::unit_squares(60, 10.0, 4));
  const ConflictStructure cs = build_conflicts(inst);
  const GridDecomposition g = decompose(inst);
  for (const auto& p : cs.pairs()) {
    if (g.cell_of[p.i] == g.cell_of[p.j]) continue;
    const auto& bi = g.cells[g.cell_of[p.i]].buffer;
    if (!p.hard_i_covers_j.empty()) {
      CHECK(std::binary_search(bi.begin(), bi.end(), p.j));
    }
  }
}

TEST_CASE("single cell instance gives the exact optimum") {
  const Instance inst({square(0, 0, 0), square(1, 1.2, 0)});
  const ConflictStructure cs = build_conflicts(inst);
  const QapxResult r = qapx_solve(inst, cs, ModelConfig::k_ranges(1));
  CHECK(total_activity(r.labeling) ==
        doctest::Approx(solve_exact(cs, ModelConfig::k_ranges(1)).objective));
  const Instance one({square(0, 3, 4)});
  CHECK(total_activity(qapx_solve(one, build_conflicts(one), ModelConfig::k_ranges(1)).labeling) ==
        doctest::Approx(kTwoPi));
}

TEST_CASE("qapx meets a quarter of the optimum and post-processing only adds") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const Instance inst = generate_random(GenerateOptions::unit_squares(6, 4.0, rng()));
    const ConflictStructure cs = build_conflicts(inst);
    for (const ConflictMode mode : {ConflictMode::kSoft, ConflictMode::kHard}) {
      const ModelConfig cfg = ModelConfig::k_ranges(1, mode);
      const double opt = solve_exact(cs, cfg).objective;
      const QapxResult raw = qapx_solve(inst, cs, cfg);
      CHECK(total_activity(raw.labeling) >= opt / 4);
      CHECK(check_validity(raw.labeling, cs, cfg).valid());
      for (const GreedyStrategy s :
           {GreedyStrategy::kMax, GreedyStrategy::kLowCost, GreedyStrategy::kBestRatio}) {
        QapxOptions o;
        o.post = s;
        const QapxResult post = qapx_solve(inst, cs, cfg, o);
        CHECK(check_validity(post.labeling, cs, cfg).valid());
        CHECK(total_activity(post.labeling) >= total_activity(raw.labeling) - 1e-12);
        for (std::size_t p = 0; p < 4; ++p) CHECK(post.activity[p] >= raw.activity[p] - 1e-12);
        CHECK(total_activity(post.labeling) <= opt + 1e-9);
      }
    }
  }
}

}  // namespace rotlabel
