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


// Command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 a solver stopped
// at its time limit (the result is still written).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotlabel/eval.h"
#include "rotlabel/exact.h"
#include "rotlabel/geometry.h"
#include "rotlabel/io.h"
#include "rotlabel/lp_format.h"
#include "rotlabel/validity.h"

namespace rl = rotlabel;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDegraded = 3;

// Thrown for bad input data, as opposed to bad command lines.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    rl::write_text_file(path, text);
  }
}

rl::Instance load_instance(const std::string& path) {
  try {
    const std::string text = path == "-" ? [] {
      std::ostringstream os;
      os << std::cin.rdbuf();
      return os.str();
    }()
                                         : rl::read_text_file(path);
    rl::Instance inst = rl::read_instance(text).instance;
    const auto overlaps = rl::validate_static(inst);
    if (!overlaps.empty()) {
      std::cerr << "warning: " << overlaps.size()
                << " label pairs overlap at rotation 0\n";
    }
    return inst;
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

rl::ModelConfig model_from(const std::string& model, const std::string& mode) {
  try {
    return rl::ModelConfig::parse(model, mode);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--model/--conflicts", e.what());
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct ConflictsArgs {
  std::string instance;
  bool pairs = false;
  bool events = false;
};

int run_conflicts(const ConflictsArgs& a) {
  const rl::Instance inst = load_instance(a.instance);
  const rl::ConflictStructure cs = rl::build_conflicts(inst);
  const rl::ConflictStats st = cs.stats();
  std::cout << "labels " << st.labels << "\npairs " << st.pairs << "\nevents "
            << st.events << "\nmax_degree " << st.max_degree << "\n";
  if (a.pairs) {
    for (const auto& p : cs.pairs()) {
      std::cout << "pair " << inst[p.i].id << ' ' << inst[p.j].id << " soft "
                << p.soft.to_string() << " hard_ij "
                << p.hard_i_covers_j.to_string() << " hard_ji "
                << p.hard_j_covers_i.to_string() << "\n";
    }
  }
  if (a.events) {
    for (const double e : cs.events()) std::cout << "event " << fmt(e) << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string model = "kR:1";
  std::string conflicts = "soft";
  std::string solver = "gm";
  double time_limit = 60.0;
  std::uint64_t seed = 0;
  bool interval_tree = false;
  bool minimize_ranges = false;
  std::string out;
  std::string metrics;
};

int run_solve(const SolveArgs& a) {
  const rl::ModelConfig cfg = model_from(a.model, a.conflicts);
  const rl::SolverKind solver = rl::parse_solver(a.solver);
  if (a.minimize_ranges && solver != rl::SolverKind::kExact) {
    throw CLI::ValidationError("--minimize-ranges", "needs --solver exact");
  }
  const rl::Instance inst = load_instance(a.instance);
  const rl::ConflictStructure cs = rl::build_conflicts(inst);

  rl::SolveOptions so;
  so.exact.time_limit_per_component = std::chrono::duration<double>(a.time_limit);
  so.interval_tree = a.interval_tree;
  const auto t0 = std::chrono::steady_clock::now();
  rl::SolveOutcome out;
  if (a.minimize_ranges) {
    rl::ExactSolution sol =
        rl::solve_exact(rl::build_model(cs, cfg, true), so.exact);
    out.labeling = std::move(sol.labeling);
    out.optimal = sol.optimal();
  } else {
    out = rl::run_solver(inst, cs, cfg, solver, so);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const rl::ValidityReport report = rl::check_validity(out.labeling, cs, cfg);
  if (!report.valid()) {
    std::cerr << "internal error: invalid labeling (" << report.summary() << ")\n";
    return 4;
  }
  emit(a.out, rl::write_labeling(inst, out.labeling));
  const rl::LabelingMetrics m = rl::compute_metrics(out.labeling);
  std::ostream& log = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
  log << "solver " << a.solver << " model " << cfg.to_string() << " labels "
      << inst.size() << " total_activity " << fmt(m.total_activity)
      << " ranges " << m.range_count << " seconds " << fmt(seconds)
      << (out.optimal ? "" : " time_limit_hit") << "\n";
  if (!a.metrics.empty()) {
    rl::MatrixRow row;
    row.model = cfg;
    row.solver = solver;
    row.metrics = m;
    row.seconds = seconds;
    row.degraded = !out.optimal;
    std::ostringstream os;
    rl::write_matrix_csv(os, a.instance, {row});
    emit(a.metrics, os.str());
  }
  return out.optimal ? 0 : kExitDegraded;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

struct EvalArgs {
  std::vector<std::string> instances;
  std::string models = "01,kR:1,kR:2,kR:3,inf";
  std::string conflicts = "soft,hard";
  std::string solvers = "gm,glc,gbr,qapx,qgm,qglc,qgbr,exact";
  double time_limit = 60.0;
  bool no_baseline = false;
  std::string out;
  std::string summary;
};

int run_eval(const EvalArgs& a) {
  std::vector<rl::ModelConfig> models;
  for (const auto& mode : split(a.conflicts, ',')) {
    for (const auto& m : split(a.models, ',')) models.push_back(model_from(m, mode));
  }
  std::vector<rl::SolverKind> solvers;
  for (const auto& s : split(a.solvers, ',')) {
    try {
      solvers.push_back(rl::parse_solver(s));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--solvers", e.what());
    }
  }
  rl::MatrixOptions mo;
  mo.baseline = !a.no_baseline;
  mo.solve.exact.time_limit_per_component = std::chrono::duration<double>(a.time_limit);

  std::ostringstream os;
  std::vector<rl::MatrixRow> all;
  bool degraded = false;
  bool header = true;
  for (const auto& path : a.instances) {
    const rl::Instance inst = load_instance(path);
    auto rows = rl::run_matrix(inst, models, solvers, mo);
    for (const auto& r : rows) {
      degraded = degraded || r.degraded;
      if (!r.error.empty()) std::cerr << path << ": " << r.error << "\n";
    }
    rl::write_matrix_csv(os, path, rows, header);
    header = false;
    all.insert(all.end(), rows.begin(), rows.end());
  }
  emit(a.out, os.str());
  if (!a.summary.empty()) {
    std::ostringstream ss;
    rl::write_summary_csv(ss, rl::summarize(all));
    emit(a.summary, ss.str());
  }
  return degraded ? kExitDegraded : 0;
}

struct GenArgs {
  rl::GenerateOptions opts;
  double unit_region = 0.0;
  std::string out;
};

int run_gen(GenArgs a) {
  if (a.unit_region > 0) {
    a.opts = rl::GenerateOptions::unit_squares(a.opts.n, a.unit_region, a.opts.seed);
  }
  rl::Instance inst;
  try {
    inst = rl::generate_random(a.opts);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("gen", e.what());
  }
  emit(a.out, rl::write_instance(inst));
  return 0;
}

struct IngestArgs {
  std::string input;
  rl::IngestOptions opts;
  std::string out;
};

int run_ingest(const IngestArgs& a) {
  rl::Instance inst;
  try {
    inst = rl::ingest(rl::read_geo_records(rl::read_text_file(a.input)), a.opts);
  } catch (const std::exception& e) {
    throw InputError(a.input + ": " + e.what());
  }
  emit(a.out, rl::write_instance(rl::InstanceFile{inst, "map"}));
  std::cerr << "labeled " << inst.size() << " points\n";
  return 0;
}

struct SnapshotArgs {
  std::string instance;
  std::string labeling;
  double alpha = 0.0;
  double scale = 40.0;
  std::string out;
};

int run_snapshot(const SnapshotArgs& a) {
  const rl::Instance inst = load_instance(a.instance);
  rl::RotationLabeling phi;
  if (a.labeling.empty()) {
    phi = rl::RotationLabeling::empty(inst.size(), {});
  } else {
    try {
      phi = rl::read_labeling(inst, rl::read_text_file(a.labeling));
    } catch (const std::exception& e) {
      throw InputError(a.labeling + ": " + e.what());
    }
  }
  rl::SvgOptions so;
  so.pixels_per_unit = a.scale;
  emit(a.out, rl::svg_snapshot(inst, phi, a.alpha, so));
  return 0;
}

struct LpArgs {
  std::string instance;
  std::string model = "kR:1";
  std::string conflicts = "soft";
  bool minimize_ranges = false;
  std::string out;
};

int run_emit_lp(const LpArgs& a) {
  const rl::ModelConfig cfg = model_from(a.model, a.conflicts);
  if (a.minimize_ranges && cfg.ranges == rl::RangeModel::kZeroOne) {
    throw CLI::ValidationError("--minimize-ranges", "needs the kR or the inf model");
  }
  const rl::Instance inst = load_instance(a.instance);
  const rl::ConflictStructure cs = rl::build_conflicts(inst);
  emit(a.out, rl::emit_lp(rl::build_model(cs, cfg, a.minimize_ranges)));
  return 0;
}

struct ImportArgs {
  LpArgs lp;
  std::string solution;
};

int run_import_sol(const ImportArgs& a) {
  const rl::ModelConfig cfg = model_from(a.lp.model, a.lp.conflicts);
  const rl::Instance inst = load_instance(a.lp.instance);
  const rl::ConflictStructure cs = rl::build_conflicts(inst);
  const rl::AtomicIntervalModel m = rl::build_model(cs, cfg, a.lp.minimize_ranges);
  rl::RotationLabeling phi;
  try {
    phi = rl::read_solution(m, rl::read_text_file(a.solution));
  } catch (const std::exception& e) {
    throw InputError(a.solution + ": " + e.what());
  }
  const rl::ValidityReport report = rl::check_validity(phi, cs, cfg);
  if (!report.valid()) {
    throw InputError(a.solution + ": infeasible solution (" + report.summary() + ")");
  }
  emit(a.lp.out, rl::write_labeling(inst, phi));
  return 0;
}

struct ValidateArgs {
  std::string instance;
  std::string labeling;
};

int run_validate(const ValidateArgs& a) {
  const rl::Instance inst = load_instance(a.instance);
  rl::RotationLabeling phi;
  try {
    phi = rl::read_labeling(inst, rl::read_text_file(a.labeling));
  } catch (const std::exception& e) {
    throw InputError(a.labeling + ": " + e.what());
  }
  const rl::ConflictStructure cs = rl::build_conflicts(inst);
  const rl::ValidityReport report = rl::check_validity(phi, cs, phi.model);
  for (const auto& v : report.soft) {
    std::cout << "soft " << inst[v.i].id << ' ' << inst[v.j].id << ' '
              << v.overlap.to_string() << "\n";
  }
  for (const auto& v : report.hard) {
    std::cout << "hard " << inst[v.label].id << ' ' << v.overlap.to_string() << "\n";
  }
  for (const auto& v : report.ranges) {
    std::cout << "ranges " << inst[v.label].id << ' ' << v.ranges << "\n";
  }
  std::cout << (report.valid() ? "valid" : "invalid") << " total_activity "
            << fmt(rl::total_activity(phi)) << "\n";
  return report.valid() ? 0 : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Label schedules for rotating maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rotlabel 1.0.0");
  int code = 0;

  ConflictsArgs ca;
  auto* conflicts = app.add_subcommand("conflicts", "Summarize the conflict structure");
  conflicts->add_option("instance", ca.instance, "Instance CSV ('-' for stdin)")->required();
  conflicts->add_flag("--pairs", ca.pairs, "List conflicting pairs");
  conflicts->add_flag("--events", ca.events, "List conflict events");
  conflicts->callback([&] { code = run_conflicts(ca); });

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Compute a rotation labeling");
  solve->add_option("instance", sa.instance, "Instance CSV ('-' for stdin)")->required();
  solve->add_option("--model", sa.model, "01, kR:<k> or inf")->capture_default_str();
  solve->add_option("--conflicts", sa.conflicts, "soft or hard")->capture_default_str();
  solve->add_option("--solver", sa.solver, "gm, glc, gbr, qapx, qgm, qglc, qgbr, exact")
      ->capture_default_str();
  solve->add_option("--time-limit", sa.time_limit, "Seconds per exact component")
      ->capture_default_str()->check(CLI::PositiveNumber);
  solve->add_option("--seed", sa.seed, "Accepted for reproducible scripts; solvers are deterministic");
  solve->add_flag("--interval-tree", sa.interval_tree, "Endpoint-tree engine for gm");
  solve->add_flag("--minimize-ranges", sa.minimize_ranges,
                  "Exact only: fewest ranges among optimal labelings");
  solve->add_option("--out", sa.out, "Labeling file (default stdout)");
  solve->add_option("--metrics", sa.metrics, "Metrics CSV file");
  solve->callback([&] { code = run_solve(sa); });

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Run the model x solver matrix");
  eval->add_option("instances", ea.instances, "Instance CSV files")->required();
  eval->add_option("--models", ea.models, "Comma-separated model tags")->capture_default_str();
  eval->add_option("--conflicts", ea.conflicts, "Comma-separated conflict modes")
      ->capture_default_str();
  eval->add_option("--solvers", ea.solvers, "Comma-separated solvers")->capture_default_str();
  eval->add_option("--time-limit", ea.time_limit, "Seconds per exact component")
      ->capture_default_str()->check(CLI::PositiveNumber);
  eval->add_flag("--no-baseline", ea.no_baseline, "Skip the exact inf baseline");
  eval->add_option("--out", ea.out, "Per-instance CSV (default stdout)");
  eval->add_option("--summary", ea.summary, "Mean/stddev CSV");
  eval->callback([&] { code = run_eval(ea); });

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random statically labeled instance");
  gen->add_option("-n,--labels", ga.opts.n, "Number of labels")->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--width", ga.opts.region_width, "Region width")->capture_default_str();
  gen->add_option("--height", ga.opts.region_height, "Region height")->capture_default_str();
  gen->add_option("--min-label-width", ga.opts.min_width)->capture_default_str();
  gen->add_option("--max-label-width", ga.opts.max_width)->capture_default_str();
  gen->add_option("--min-label-height", ga.opts.min_height)->capture_default_str();
  gen->add_option("--max-label-height", ga.opts.max_height)->capture_default_str();
  gen->add_option("--unit-squares", ga.unit_region,
                  "Unit squares in a square region of this side");
  gen->add_option("--seed", ga.opts.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", ga.out, "Instance file (default stdout)");
  gen->callback([&] { code = run_gen(ga); });

  IngestArgs ia;
  auto* ing = app.add_subcommand("ingest", "Geographic CSV to instance");
  ing->add_option("input", ia.input, "CSV with name,lat,lon,weight")->required();
  ing->add_option("--scale", ia.opts.scale, "Map units per km")->capture_default_str();
  ing->add_option("--label-height", ia.opts.height)->capture_default_str();
  ing->add_option("--char-width", ia.opts.char_width)->capture_default_str();
  ing->add_option("--padding", ia.opts.padding)->capture_default_str();
  ing->add_option("--out", ia.out, "Instance file (default stdout)");
  ing->callback([&] { code = run_ingest(ia); });

  SnapshotArgs na;
  auto* snap = app.add_subcommand("snapshot", "SVG of the map at one rotation");
  snap->add_option("instance", na.instance)->required();
  snap->add_option("labeling", na.labeling, "Labeling file (omit for anchors only)");
  snap->add_option("--alpha", na.alpha, "Rotation in radians")->capture_default_str();
  snap->add_option("--scale", na.scale, "Pixels per map unit")->capture_default_str();
  snap->add_option("--out", na.out, "SVG file (default stdout)");
  snap->callback([&] { code = run_snapshot(na); });

  LpArgs la;
  auto* lp = app.add_subcommand("emit-lp", "Write the exact model in LP format");
  lp->add_option("instance", la.instance)->required();
  lp->add_option("--model", la.model)->capture_default_str();
  lp->add_option("--conflicts", la.conflicts)->capture_default_str();
  lp->add_flag("--minimize-ranges", la.minimize_ranges);
  lp->add_option("--out", la.out, "LP file (default stdout)");
  lp->callback([&] { code = run_emit_lp(la); });

  ImportArgs ma;
  auto* imp = app.add_subcommand("import-sol", "Solution file of an external solver to labeling");
  imp->add_option("instance", ma.lp.instance)->required();
  imp->add_option("solution", ma.solution)->required();
  imp->add_option("--model", ma.lp.model)->capture_default_str();
  imp->add_option("--conflicts", ma.lp.conflicts)->capture_default_str();
  imp->add_flag("--minimize-ranges", ma.lp.minimize_ranges);
  imp->add_option("--out", ma.lp.out, "Labeling file (default stdout)");
  imp->callback([&] { code = run_import_sol(ma); });

  ValidateArgs va;
  auto* val = app.add_subcommand("validate", "Check a labeling for conflicts");
  val->add_option("instance", va.instance)->required();
  val->add_option("labeling", va.labeling)->required();
  val->callback([&] { code = run_validate(va); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
