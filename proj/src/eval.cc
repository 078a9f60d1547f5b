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


#include "rotlabel/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "rotlabel/greedy.h"
#include "rotlabel/qapx.h"

namespace rotlabel {

LabelingMetrics compute_metrics(const RotationLabeling& phi,
                                const RotationLabeling* baseline) {
  LabelingMetrics m;
  double length_sum = 0.0;
  for (const AngularSet& s : phi.active) {
    if (s.empty()) {
      ++m.labels_with_empty_activity;
      continue;
    }
    for (const CircularInterval& arc : s.intervals()) {
      ++m.range_count;
      length_sum += arc.length();
      if (!arc.is_full()) m.flicker_events += 2;
    }
  }
  m.total_activity = total_activity(phi);
  if (m.range_count > 0) {
    m.mean_range_length_normalized =
        length_sum / static_cast<double>(m.range_count) / kTwoPi;
  }
  if (!phi.active.empty()) {
    m.mean_ranges_per_label = static_cast<double>(m.range_count) /
                              static_cast<double>(phi.active.size());
  }
  if (baseline) {
    const double b = total_activity(*baseline);
    if (b > 0.0) {
      m.activity_ratio = m.total_activity / b;
    } else if (m.total_activity == 0.0) {
      m.activity_ratio = 1.0;
    }
  }
  return m;
}

std::string_view solver_name(SolverKind s) {
  switch (s) {
    case SolverKind::kGm: return "gm";
    case SolverKind::kGlc: return "glc";
    case SolverKind::kGbr: return "gbr";
    case SolverKind::kQapx: return "qapx";
    case SolverKind::kQgm: return "qgm";
    case SolverKind::kQglc: return "qglc";
    case SolverKind::kQgbr: return "qgbr";
    case SolverKind::kExact: return "exact";
  }
  return "gm";
}

SolverKind parse_solver(std::string_view name) {
  for (const SolverKind s : kAllSolvers) {
    if (solver_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown solver: " + std::string(name));
}

SolveOutcome run_solver(const Instance& inst, const ConflictStructure& cs,
                        const ModelConfig& cfg, SolverKind solver,
                        const SolveOptions& options) {
  SolveOutcome out;
  auto greedy = [&](GreedyStrategy s) {
    GreedyOptions go;
    go.strategy = s;
    if (options.interval_tree && s == GreedyStrategy::kMax) {
      go.engine = GreedyEngine::kIntervalTree;
    }
    out.labeling = greedy_solve(cs, cfg, go);
  };
  auto qapx = [&](std::optional<GreedyStrategy> post) {
    QapxOptions qo;
    qo.post = post;
    qo.exact = options.exact;
    QapxResult r = qapx_solve(inst, cs, cfg, qo);
    out.labeling = std::move(r.labeling);
    out.optimal = r.cells_optimal;
  };
  switch (solver) {
    case SolverKind::kGm: greedy(GreedyStrategy::kMax); break;
    case SolverKind::kGlc: greedy(GreedyStrategy::kLowCost); break;
    case SolverKind::kGbr: greedy(GreedyStrategy::kBestRatio); break;
    case SolverKind::kQapx: qapx(std::nullopt); break;
    case SolverKind::kQgm: qapx(GreedyStrategy::kMax); break;
    case SolverKind::kQglc: qapx(GreedyStrategy::kLowCost); break;
    case SolverKind::kQgbr: qapx(GreedyStrategy::kBestRatio); break;
    case SolverKind::kExact: {
      ExactSolution sol = solve_exact(cs, cfg, options.exact);
      out.labeling = std::move(sol.labeling);
      out.optimal = sol.optimal();
      break;
    }
  }
  return out;
}

std::vector<MatrixRow> run_matrix(const Instance& inst,
                                  const std::vector<ModelConfig>& models,
                                  const std::vector<SolverKind>& solvers,
                                  const MatrixOptions& options) {
  const ConflictStructure cs = build_conflicts(inst);
  std::map<ConflictMode, RotationLabeling> baselines;
  auto baseline_for = [&](ConflictMode mode) -> const RotationLabeling* {
    if (!options.baseline) return nullptr;
    auto it = baselines.find(mode);
    if (it == baselines.end()) {
      ExactSolution sol =
          solve_exact(cs, ModelConfig::unbounded(mode), options.solve.exact);
      it = baselines.emplace(mode, std::move(sol.labeling)).first;
    }
    return &it->second;
  };

  std::vector<MatrixRow> rows;
  for (const ModelConfig& cfg : models) {
    for (const SolverKind s : solvers) {
      MatrixRow row;
      row.model = cfg;
      row.solver = s;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        SolveOutcome out = run_solver(inst, cs, cfg, s, options.solve);
        const auto t1 = std::chrono::steady_clock::now();
        row.seconds = std::chrono::duration<double>(t1 - t0).count();
        row.degraded = !out.optimal;
        row.metrics = compute_metrics(out.labeling, baseline_for(cfg.conflicts));
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_matrix_csv(std::ostream& os, std::string_view instance_name,
                      const std::vector<MatrixRow>& rows, bool header) {
  if (header) {
    os << "instance,model,conflicts,solver,total_activity,activity_ratio,"
          "mean_range_length,ranges_per_label,range_count,flicker_events,"
          "empty_labels,seconds,status\n";
  }
  for (const MatrixRow& r : rows) {
    const LabelingMetrics& m = r.metrics;
    std::string status = "ok";
    if (!r.error.empty()) {
      status = "error: " + r.error;
    } else if (r.degraded) {
      status = "time_limit";
    }
    os << csv_field(instance_name) << ',' << r.model.model_tag() << ','
       << r.model.conflict_tag() << ',' << solver_name(r.solver) << ','
       << fmt(m.total_activity) << ','
       << (m.activity_ratio ? fmt(*m.activity_ratio) : "") << ','
       << fmt(m.mean_range_length_normalized) << ','
       << fmt(m.mean_ranges_per_label) << ',' << m.range_count << ','
       << m.flicker_events << ',' << m.labels_with_empty_activity << ','
       << fmt(r.seconds) << ',' << csv_field(status) << '\n';
  }
}

namespace {

struct Accumulator {
  std::vector<double> values;

  double mean() const {
    if (values.empty()) return 0.0;
    double s = 0.0;
    for (const double v : values) s += v;
    return s / static_cast<double>(values.size());
  }
  double stddev() const {
    if (values.size() < 2) return 0.0;
    const double mu = mean();
    double s = 0.0;
    for (const double v : values) s += (v - mu) * (v - mu);
    return std::sqrt(s / static_cast<double>(values.size() - 1));
  }
};

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<MatrixRow>& rows) {
  struct Group {
    ModelConfig model;
    SolverKind solver;
    std::size_t count = 0;
    Accumulator ratio;
    Accumulator seconds;
  };
  std::vector<Group> groups;
  for (const MatrixRow& r : rows) {
    if (!r.error.empty()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.model == r.model && g.solver == r.solver;
    });
    if (it == groups.end()) {
      groups.push_back({r.model, r.solver, 0, {}, {}});
      it = std::prev(groups.end());
    }
    ++it->count;
    if (r.metrics.activity_ratio) it->ratio.values.push_back(*r.metrics.activity_ratio);
    it->seconds.values.push_back(r.seconds);
  }
  std::vector<SummaryRow> out;
  for (const Group& g : groups) {
    out.push_back({g.model, g.solver, g.count, g.ratio.mean(), g.ratio.stddev(),
                   g.seconds.mean(), g.seconds.stddev()});
  }
  return out;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "model,conflicts,solver,instances,mean_ratio,stddev_ratio,"
        "mean_seconds,stddev_seconds\n";
  for (const SummaryRow& r : rows) {
    os << r.model.model_tag() << ',' << r.model.conflict_tag() << ','
       << solver_name(r.solver) << ',' << r.count << ',' << fmt(r.mean_ratio)
       << ',' << fmt(r.stddev_ratio) << ',' << fmt(r.mean_seconds) << ','
       << fmt(r.stddev_seconds) << '\n';
  }
}

}  // namespace rotlabel
