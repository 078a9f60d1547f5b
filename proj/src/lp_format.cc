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


#include "rotlabel/lp_format.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rotlabel {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string var(char kind, std::size_t i, std::size_t j) {
  return std::string(1, kind) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

// Accumulates "+ c name" terms and wraps long rows.
class Row {
 public:
  explicit Row(std::string head) : text_(" " + std::move(head) + ":") {}

  void add(double coef, const std::string& name) {
    if (line_terms_ == 8) {
      text_ += "\n  ";
      line_terms_ = 0;
    }
    text_ += coef < 0 ? " - " : " + ";
    const double a = coef < 0 ? -coef : coef;
    if (a != 1.0) text_ += num(a) + " ";
    text_ += name;
    ++line_terms_;
  }

  std::string finish(std::string_view tail) const {
    return text_ + " " + std::string(tail) + "\n";
  }

 private:
  std::string text_;
  int line_terms_ = 0;
};

bool uses_begin(const AtomicIntervalModel& m) {
  return !m.zero_one() && (m.has_begin_variables() || m.minimize_ranges);
}

}  // namespace

std::string emit_lp(const AtomicIntervalModel& m) {
  const std::size_t n = m.label_count;
  const std::size_t J = m.interval_count();
  std::ostringstream os;
  os << "\\ rotation labeling, model " << m.config.to_string()
     << (m.minimize_ranges ? ", fewest ranges" : "") << "\n";
  os << "\\ labels " << n << ", atomic intervals " << J << "\n";
  os << "Maximize\n";

  if (m.zero_one()) {
    Row obj("obj");
    for (std::size_t i = 0; i < n; ++i) obj.add(kTwoPi, "y_" + std::to_string(i));
    os << obj.finish("");
    os << "Subject To\n";
    for (const auto& [a, b] : m.edges) {
      Row r("conf_" + std::to_string(a) + "_" + std::to_string(b));
      r.add(1.0, "y_" + std::to_string(a));
      r.add(1.0, "y_" + std::to_string(b));
      os << r.finish("<= 1");
    }
    os << "Bounds\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < J; ++j) {
        if (m.forbidden[i][j]) {
          os << " y_" << i << " = 0\n";
          break;
        }
      }
    }
    os << "Binaries\n";
    for (std::size_t i = 0; i < n; ++i) os << " y_" << i << "\n";
    os << "End\n";
    return os.str();
  }

  const bool begin = uses_begin(m);
  Row obj("obj");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < J; ++j) obj.add(m.lengths[j], var('x', i, j));
  }
  if (m.minimize_ranges) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < J; ++j) obj.add(-m.shortest / 2, var('b', i, j));
    }
  }
  os << obj.finish("");
  os << "Subject To\n";
  if (begin) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < J; ++j) {
        Row r("run_" + std::to_string(i) + "_" + std::to_string(j));
        r.add(1.0, var('x', i, j));
        r.add(-1.0, var('b', i, j));
        if (J > 1) r.add(-1.0, var('x', i, (j + J - 1) % J));
        os << r.finish("<= 0");
      }
    }
  }
  for (const auto& c : m.conflicts) {
    Row r("conf_" + std::to_string(c.i) + "_" + std::to_string(c.l) + "_" +
          std::to_string(c.interval));
    r.add(1.0, var('x', c.i, c.interval));
    r.add(1.0, var('x', c.l, c.interval));
    os << r.finish("<= 1");
  }
  if (const auto k = m.config.range_budget(); k && begin) {
    for (std::size_t i = 0; i < n; ++i) {
      Row r("budget_" + std::to_string(i));
      for (std::size_t j = 0; j < J; ++j) r.add(1.0, var('b', i, j));
      os << r.finish("<= " + std::to_string(*k));
    }
  }
  if (m.minimize_ranges) {
    for (std::size_t i = 0; i < n; ++i) {
      Row r("cover_" + std::to_string(i));
      for (std::size_t j = 0; j < J; ++j) {
        r.add(static_cast<double>(J), var('b', i, j));
      }
      for (std::size_t j = 0; j < J; ++j) r.add(-1.0, var('x', i, j));
      os << r.finish(">= 0");
    }
  }
  os << "Bounds\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < J; ++j) {
      if (m.forbidden[i][j]) os << " " << var('x', i, j) << " = 0\n";
    }
  }
  os << "Binaries\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < J; ++j) os << " " << var('x', i, j) << "\n";
  }
  if (begin) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < J; ++j) os << " " << var('b', i, j) << "\n";
    }
  }
  os << "End\n";
  return os.str();
}

LpCounts count_lp(std::string_view lp) {
  LpCounts c;
  std::istringstream is{std::string(lp)};
  std::string line;
  bool in_binaries = false;
  while (std::getline(is, line)) {
    if (line == "Binaries") {
      in_binaries = true;
      continue;
    }
    if (line == "End") in_binaries = false;
    if (in_binaries) {
      ++c.binaries;
      continue;
    }
    auto starts = [&](std::string_view p) {
      return line.rfind(" " + std::string(p), 0) == 0;
    };
    if (starts("run_")) ++c.run;
    if (starts("conf_")) ++c.conflict;
    if (starts("budget_")) ++c.budget;
    if (starts("cover_")) ++c.cover;
  }
  return c;
}

std::string write_solution(const AtomicIntervalModel& m,
                           const RotationLabeling& phi) {
  if (phi.size() != m.label_count) {
    throw std::invalid_argument("labeling does not match the model");
  }
  const std::size_t J = m.interval_count();
  std::ostringstream os;
  os << "# rotation labeling solution, objective " << num(total_activity(phi))
     << "\n";
  if (m.zero_one()) {
    for (std::size_t i = 0; i < m.label_count; ++i) {
      os << "y_" << i << " " << (phi.active[i].is_full() ? 1 : 0) << "\n";
    }
    return os.str();
  }
  for (std::size_t i = 0; i < m.label_count; ++i) {
    std::vector<int> x(J);
    for (std::size_t j = 0; j < J; ++j) {
      x[j] = phi.active[i].contains((m.events[j] + m.events[j + 1]) / 2) ? 1 : 0;
    }
    for (std::size_t j = 0; j < J; ++j) os << var('x', i, j) << " " << x[j] << "\n";
    if (!uses_begin(m)) continue;
    const bool all = std::find(x.begin(), x.end(), 0) == x.end();
    for (std::size_t j = 0; j < J; ++j) {
      int b = x[j] && !x[(j + J - 1) % J] ? 1 : 0;
      if (all && j == 0) b = 1;
      os << var('b', i, j) << " " << b << "\n";
    }
  }
  return os.str();
}

RotationLabeling read_solution(const AtomicIntervalModel& m,
                               std::string_view text) {
  const std::size_t J = m.interval_count();
  std::vector<std::vector<bool>> x(m.label_count, std::vector<bool>(J, false));
  std::vector<bool> y(m.label_count, false);
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string name;
    double value = 0.0;
    if (!(ls >> name)) continue;
    if (!(ls >> value)) {
      throw std::runtime_error("solution line " + std::to_string(line_no) +
                               ": missing value");
    }
    const bool on = value > 0.5;
    auto index = [&](std::string_view s, std::size_t& out) {
      const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
      return r.ec == std::errc{} && r.ptr == s.data() + s.size();
    };
    auto bad = [&] {
      return std::runtime_error("solution line " + std::to_string(line_no) +
                                ": unknown variable " + name);
    };
    if (name.size() < 3 || name[1] != '_') throw bad();
    const std::string_view rest = std::string_view(name).substr(2);
    if (name[0] == 'y') {
      std::size_t i = 0;
      if (!m.zero_one() || !index(rest, i) || i >= m.label_count) throw bad();
      y[i] = on;
      continue;
    }
    const auto sep = rest.find('_');
    std::size_t i = 0;
    std::size_t j = 0;
    if ((name[0] != 'x' && name[0] != 'b') || m.zero_one() ||
        sep == std::string_view::npos || !index(rest.substr(0, sep), i) ||
        !index(rest.substr(sep + 1), j) || i >= m.label_count || j >= J) {
      throw bad();
    }
    if (name[0] == 'x') x[i][j] = on;
  }
  if (m.zero_one()) {
    RotationLabeling phi = RotationLabeling::empty(m.label_count, m.config);
    for (std::size_t i = 0; i < m.label_count; ++i) {
      if (y[i]) phi.active[i] = AngularSet::full();
    }
    return phi;
  }
  return labeling_from_activity(m, x);
}

}  // namespace rotlabel
