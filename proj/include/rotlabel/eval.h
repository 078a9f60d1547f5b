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


// Labeling metrics and the model-by-solver evaluation matrix.

#ifndef ROTLABEL_EVAL_H_
#define ROTLABEL_EVAL_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rotlabel/exact.h"
#include "rotlabel/geometry.h"
#include "rotlabel/model.h"

namespace rotlabel {

struct LabelingMetrics {
  double total_activity = 0.0;
  // t(phi) / t(baseline); absent when the baseline is 0 but phi is not.
  std::optional<double> activity_ratio;
  // Mean active-range length as a fraction of a full rotation.
  double mean_range_length_normalized = 0.0;
  // Active ranges divided by the number of labels.
  double mean_ranges_per_label = 0.0;
  std::size_t range_count = 0;
  // Activity changes over one rotation: 2 per range that is not a full circle.
  std::size_t flicker_events = 0;
  std::size_t labels_with_empty_activity = 0;
};

LabelingMetrics compute_metrics(const RotationLabeling& phi,
                                const RotationLabeling* baseline = nullptr);

enum class SolverKind { kGm, kGlc, kGbr, kQapx, kQgm, kQglc, kQgbr, kExact };

inline constexpr SolverKind kAllSolvers[] = {
    SolverKind::kGm,  SolverKind::kGlc,  SolverKind::kGbr,  SolverKind::kQapx,
    SolverKind::kQgm, SolverKind::kQglc, SolverKind::kQgbr, SolverKind::kExact};

std::string_view solver_name(SolverKind s);
// Throws std::invalid_argument for unknown names.
SolverKind parse_solver(std::string_view name);

struct SolveOptions {
  ExactOptions exact;
  // Use the endpoint-tree engine for GreedyMax.
  bool interval_tree = false;
};

struct SolveOutcome {
  RotationLabeling labeling;
  // False when an exact (sub)problem stopped at its time limit.
  bool optimal = true;
};

SolveOutcome run_solver(const Instance& inst, const ConflictStructure& cs,
                        const ModelConfig& cfg, SolverKind solver,
                        const SolveOptions& options = {});

struct MatrixOptions {
  SolveOptions solve;
  // Ratios against the exact ∞R optimum of the same conflict mode.
  bool baseline = true;
};

struct MatrixRow {
  ModelConfig model;
  SolverKind solver = SolverKind::kGm;
  LabelingMetrics metrics;
  double seconds = 0.0;
  bool degraded = false;   // time limit hit somewhere
  std::string error;       // non-empty when the cell failed
};

// Rows ordered by model, then solver, as given.
std::vector<MatrixRow> run_matrix(const Instance& inst,
                                  const std::vector<ModelConfig>& models,
                                  const std::vector<SolverKind>& solvers,
                                  const MatrixOptions& options = {});

void write_matrix_csv(std::ostream& os, std::string_view instance_name,
                      const std::vector<MatrixRow>& rows, bool header = true);

struct SummaryRow {
  ModelConfig model;
  SolverKind solver = SolverKind::kGm;
  std::size_t count = 0;
  double mean_ratio = 0.0;
  double stddev_ratio = 0.0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
};

// Mean and sample standard deviation per (model, solver) over many
// instances' rows; rows without a ratio are skipped for the ratio columns.
std::vector<SummaryRow> summarize(const std::vector<MatrixRow>& rows);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

}  // namespace rotlabel

#endif  // ROTLABEL_EVAL_H_
