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

// Branch-and-bound over atomic intervals, one connected component at a time.
//
// A component only sees its own events, so consecutive global intervals
// with identical constraints are merged into blocks first. Labels are then
// decided one after another (most partners first); for the current label
// every block is set active or inactive, active first. Bounds:
//   - per pending label, the best <=k runs of blocks still free for it,
//   - per block, a maximum independent set among undecided labels.

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rotlabel/exact.h"

namespace rotlabel {
namespace {

using Clock = std::chrono::steady_clock;
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

class Deadline {
 public:
  explicit Deadline(std::chrono::duration<double> limit)
      : end_(Clock::now() +
             std::chrono::duration_cast<Clock::duration>(limit)) {}

  bool expired() {
    if (expired_) return true;
    if (++calls_ % 16 != 0) return false;
    expired_ = Clock::now() >= end_;
    return expired_;
  }

 private:
  Clock::time_point end_;
  std::uint64_t calls_ = 0;
  bool expired_ = false;
};

// Exact maximum independent set on an arbitrary graph, by branching on a
// vertex of maximum degree and bounding with a greedy clique cover.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const std::vector<std::vector<std::size_t>>& adj,
                       Deadline& deadline)
      : adj_(adj), deadline_(deadline), in_cand_(adj.size(), 0) {}

  std::vector<std::size_t> solve(std::vector<std::size_t> candidates) {
    best_.clear();
    current_.clear();
    recurse(std::move(candidates));
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  bool complete() const { return !stopped_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t clique_cover_bound(const std::vector<std::size_t>& cand) {
    std::vector<std::vector<std::size_t>> cliques;
    for (const std::size_t v : cand) {
      bool placed = false;
      for (auto& c : cliques) {
        const bool all = std::all_of(c.begin(), c.end(), [&](std::size_t u) {
          return std::find(adj_[v].begin(), adj_[v].end(), u) != adj_[v].end();
        });
        if (all) {
          c.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return cliques.size();
  }

  void recurse(std::vector<std::size_t> cand) {
    if (stopped_) return;
    ++nodes_;
    if (deadline_.expired()) {
      stopped_ = true;
      return;
    }
    // Vertices without candidate neighbours can always be taken.
    for (const std::size_t v : cand) in_cand_[v] = 1;
    std::size_t best_v = 0;
    std::size_t best_deg = 0;
    bool any = false;
    std::vector<std::size_t> rest;
    std::size_t taken = 0;
    for (const std::size_t v : cand) {
      std::size_t deg = 0;
      for (const std::size_t u : adj_[v]) deg += in_cand_[u];
      if (deg == 0) {
        current_.push_back(v);
        ++taken;
        continue;
      }
      rest.push_back(v);
      if (!any || deg > best_deg) {
        best_v = v;
        best_deg = deg;
        any = true;
      }
    }
    for (const std::size_t v : cand) in_cand_[v] = 0;

    if (rest.empty()) {
      if (current_.size() > best_.size()) best_ = current_;
    } else if (current_.size() + clique_cover_bound(rest) > best_.size()) {
      // Take best_v.
      std::vector<std::size_t> with;
      for (const std::size_t u : adj_[best_v]) in_cand_[u] = 1;
      for (const std::size_t v : rest) {
        if (v != best_v && !in_cand_[v]) with.push_back(v);
      }
      for (const std::size_t u : adj_[best_v]) in_cand_[u] = 0;
      current_.push_back(best_v);
      recurse(std::move(with));
      current_.pop_back();
      // Leave best_v out.
      std::erase(rest, best_v);
      recurse(std::move(rest));
    }
    current_.resize(current_.size() - taken);
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  Deadline& deadline_;
  std::vector<char> in_cand_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

// Size of a greedy clique partition of `cand`; bounds its independence number.
int clique_cover(std::uint64_t cand, const std::vector<std::uint64_t>& adj) {
  int cliques = 0;
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    std::uint64_t clique = std::uint64_t{1} << v;
    std::uint64_t grow = cand & adj[static_cast<std::size_t>(v)];
    while (grow != 0) {
      const int u = std::countr_zero(grow);
      clique |= std::uint64_t{1} << u;
      grow &= adj[static_cast<std::size_t>(u)];
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

class MaskMis {
 public:
  explicit MaskMis(const std::vector<std::uint64_t>& adj) : adj_(adj) {}

  // Independence number of `cand`, or its clique-cover bound when the search
  // needs more than kNodeBudget nodes.
  int upper_bound(std::uint64_t cand) {
    const int cover = clique_cover(cand, adj_);
    nodes_ = 0;
    best_ = 0;
    search(cand, 0);
    return nodes_ > kNodeBudget ? cover : best_;
  }

 private:
  static constexpr int kNodeBudget = 20000;

  void search(std::uint64_t cand, int size) {
    if (++nodes_ > kNodeBudget) return;
    // Isolated vertices always join.
    int v = -1;
    int degree = -1;
    for (std::uint64_t it = cand; it != 0; it &= it - 1) {
      const int u = std::countr_zero(it);
      const int d = std::popcount(adj_[static_cast<std::size_t>(u)] & cand);
      if (d == 0) {
        cand &= ~(std::uint64_t{1} << u);
        ++size;
      } else if (d > degree) {
        degree = d;
        v = u;
      }
    }
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover(cand, adj_) <= best_) return;
    const std::uint64_t bit = std::uint64_t{1} << v;
    search(cand & ~bit & ~adj_[static_cast<std::size_t>(v)], size + 1);
    search(cand & ~bit, size);
  }

  const std::vector<std::uint64_t>& adj_;
  int nodes_ = 0;
  int best_ = 0;
};

// One connected component after merging intervals into blocks.
struct LocalProblem {
  std::vector<std::size_t> labels;          // global label per local index
  std::vector<std::size_t> block_start;     // first global interval per block
  std::vector<std::int64_t> weight;         // ticks per block
  std::vector<std::vector<char>> allowed;   // [label][block]
  // Per label: (partner, block) for every block in which they conflict.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> conflicts;
  std::vector<std::vector<std::size_t>> partners;
  std::optional<int> budget;
  bool minimize = false;

  std::size_t label_count() const { return labels.size(); }
  std::size_t block_count() const { return weight.size(); }
};

struct LocalResult {
  std::vector<std::vector<char>> x;  // [label][block]
  std::int64_t value = 0;
  std::int64_t ranges = 0;
  bool optimal = true;
  std::uint64_t nodes = 0;
};

std::int64_t circular_ranges(const std::vector<char>& row) {
  const std::size_t n = row.size();
  std::int64_t runs = 0;
  bool all = n > 0;
  for (std::size_t b = 0; b < n; ++b) {
    if (!row[b]) {
      all = false;
      continue;
    }
    if (b == 0 || !row[b - 1]) ++runs;
  }
  if (all) return 1;
  if (n > 1 && row[0] && row[n - 1] && runs > 1) --runs;
  return runs;
}

// Longest free circular run (ticks) of a row; returns [start, len) blocks.
struct Run {
  std::int64_t ticks = 0;
  std::size_t start = 0;
  std::size_t blocks = 0;
};

std::vector<Run> free_runs(const std::vector<char>& free,
                           const std::vector<std::int64_t>& weight) {
  const std::size_t n = free.size();
  std::vector<Run> runs;
  if (n == 0) return runs;
  if (std::all_of(free.begin(), free.end(), [](char c) { return c != 0; })) {
    runs.push_back({std::accumulate(weight.begin(), weight.end(),
                                    std::int64_t{0}),
                    0, n});
    return runs;
  }
  // Start scanning right after a blocked block so no run is split.
  std::size_t origin = 0;
  while (free[origin]) ++origin;
  std::size_t b = 0;
  while (b < n) {
    const std::size_t at = (origin + b) % n;
    if (!free[at]) {
      ++b;
      continue;
    }
    Run r{0, at, 0};
    while (b < n && free[(origin + b) % n]) {
      r.ticks += weight[(origin + b) % n];
      ++r.blocks;
      ++b;
    }
    runs.push_back(r);
  }
  return runs;
}

std::int64_t best_runs_bound(std::vector<Run> runs, std::optional<int> budget) {
  if (budget && runs.size() > static_cast<std::size_t>(*budget)) {
    std::nth_element(runs.begin(), runs.begin() + *budget, runs.end(),
                     [](const Run& a, const Run& b) { return a.ticks > b.ticks; });
    runs.resize(static_cast<std::size_t>(*budget));
  }
  std::int64_t t = 0;
  for (const auto& r : runs) t += r.ticks;
  return t;
}

// Exact search over one component. Labels are fixed one at a time (the one
// with most live partners first), each by enumerating its block pattern
// with bounds; after every fixed label the undecided labels split into
// independent live components, which are solved separately and memoized.
// A subproblem only has to be solved exactly when its optimum reaches the
// threshold handed down by its caller; below that it may stop early
// ("fail low") and return any valid assignment under the threshold.
class SubsetSearch {
 public:
  SubsetSearch(const LocalProblem& p, Deadline& deadline)
      : p_(p),
        deadline_(deadline),
        L_(p.label_count()),
        B_(p.block_count()),
        blocked_(L_, std::vector<int>(B_, 0)),
        run_slots_(p.budget ? static_cast<std::size_t>(*p.budget) + 2 : 0) {
    if (L_ <= 64) {
      block_adj_.assign(B_, std::vector<std::uint64_t>(L_, 0));
      for (std::size_t l = 0; l < L_; ++l) {
        for (const auto& [v, b] : p_.conflicts[l]) {
          block_adj_[b][l] |= std::uint64_t{1} << v;
        }
      }
      mis_memo_.resize(B_);
    }
  }

  LocalResult run() {
    std::vector<std::size_t> all(L_);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Assignment a = solve(all, 0);
    LocalResult r;
    r.x.assign(L_, std::vector<char>(B_, 0));
    for (std::size_t k = 0; k < a.labels.size(); ++k) r.x[a.labels[k]] = a.rows[k];
    r.value = a.value;
    r.ranges = a.ranges;
    r.optimal = !stopped_;
    r.nodes = nodes_;
    return r;
  }

 private:
  struct Assignment {
    std::int64_t value = 0;
    std::int64_t ranges = 0;
    std::vector<std::size_t> labels;
    std::vector<std::vector<char>> rows;

    void append(const Assignment& o) {
      value += o.value;
      ranges += o.ranges;
      labels.insert(labels.end(), o.labels.begin(), o.labels.end());
      rows.insert(rows.end(), o.rows.begin(), o.rows.end());
    }
  };

  enum class Choice : char { kFresh, kTriedActive, kDone };

  struct Frame {
    std::size_t b;
    std::int64_t value;
    std::int64_t runs;  // linear run starts so far
    std::int64_t mis;   // block bound over the decided prefix
    double lag;         // adjusted weight of the decided prefix
    bool first;         // active in block 0
    bool prev;          // active in block b - 1
    Choice choice;
    bool forced;
  };

  struct LagClique {
    std::size_t b = 0;
    std::uint64_t members = 0;
    double mu = 0.0;
  };

  // Everything the pattern enumeration of one branching label needs.
  struct Branch {
    std::size_t label = 0;
    std::vector<std::size_t> rest;
    std::vector<char> avail;
    std::vector<char> pend;
    std::vector<std::int64_t> suffix;  // free weight of the label from b on
    std::int64_t rest_bound = 0;       // sum of single-label bounds of rest
    std::vector<std::int64_t> mis_off;
    std::vector<std::int64_t> mis_on;
    std::vector<std::int64_t> mis_suffix;
    std::vector<std::int64_t> off_suffix;
    std::vector<std::int64_t> run_gain;
    // Lagrangian bound: adjusted weights of the label, its best completion
    // per enumeration state, and the constant part from the rest.
    bool lag_ok = false;
    std::vector<double> lag_w;
    std::vector<double> lag_tail;
    double lag_root = 0.0;
    double lag_rest = 0.0;
    std::vector<LagClique> cliques;
    std::vector<std::vector<char>> lag_patterns;  // aligned with the set
  };


  struct MemoEntry {
    Assignment best;
    bool exact = false;
    std::int64_t threshold = 0;  // optimum below this when not exact
  };

  static constexpr std::size_t kMemoEntries = 1 << 17;
  static constexpr std::size_t kMemoLabels = 24;

  bool available(std::size_t u, std::size_t b) const {
    return p_.allowed[u][b] && blocked_[u][b] == 0;
  }

  bool better(std::int64_t value, std::int64_t ranges,
              const Assignment& than) const {
    if (value != than.value) return value > than.value;
    return p_.minimize && ranges < than.ranges;
  }

  std::vector<char> free_row(std::size_t u) const {
    std::vector<char> row(B_);
    for (std::size_t b = 0; b < B_; ++b) row[b] = available(u, b);
    return row;
  }

  std::int64_t single_bound(std::size_t u) const {
    return best_runs_bound(free_runs(free_row(u), p_.weight), p_.budget);
  }

  // Optimum of a label without live partners: its best free runs.
  Assignment single(std::size_t u) const {
    std::vector<Run> runs = free_runs(free_row(u), p_.weight);
    std::stable_sort(runs.begin(), runs.end(),
                     [](const Run& a, const Run& b) { return a.ticks > b.ticks; });
    if (p_.budget && runs.size() > static_cast<std::size_t>(*p_.budget)) {
      runs.resize(static_cast<std::size_t>(*p_.budget));
    }
    Assignment a;
    a.labels.push_back(u);
    a.rows.emplace_back(B_, 0);
    for (const Run& r : runs) {
      for (std::size_t k = 0; k < r.blocks; ++k) a.rows[0][(r.start + k) % B_] = 1;
      a.value += r.ticks;
    }
    a.ranges = circular_ranges(a.rows[0]);
    return a;
  }

  std::vector<std::vector<std::size_t>> live_components(
      const std::vector<std::size_t>& set) const {
    std::vector<std::size_t> slot(L_, set.size());
    for (std::size_t k = 0; k < set.size(); ++k) slot[set[k]] = k;
    std::vector<std::size_t> parent(set.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const std::size_t u : set) {
      for (const auto& [v, b] : p_.conflicts[u]) {
        if (slot[v] == set.size() || v < u) continue;
        if (!available(u, b) || !available(v, b)) continue;
        parent[find(slot[u])] = find(slot[v]);
      }
    }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> comp_of(set.size(), set.size());
    for (std::size_t k = 0; k < set.size(); ++k) {
      const std::size_t r = find(k);
      if (comp_of[r] == set.size()) {
        comp_of[r] = comps.size();
        comps.emplace_back();
      }
      comps[comp_of[r]].push_back(set[k]);
    }
    return comps;
  }

  std::string memo_key(const std::vector<std::size_t>& set) const {
    std::string key;
    key.reserve(set.size() * (2 + (B_ + 7) / 8));
    for (const std::size_t u : set) {
      key.push_back(static_cast<char>(u & 0xff));
      key.push_back(static_cast<char>(u >> 8));
      unsigned char byte = 0;
      for (std::size_t b = 0; b < B_; ++b) {
        if (available(u, b)) byte |= static_cast<unsigned char>(1u << (b % 8));
        if (b % 8 == 7 || b + 1 == B_) {
          key.push_back(static_cast<char>(byte));
          byte = 0;
        }
      }
    }
    return key;
  }

  std::int64_t component_bound(const std::vector<std::size_t>& comp) {
    std::int64_t singles = 0;
    for (const std::size_t u : comp) singles += single_bound(u);
    if (L_ > 64) return singles;
    std::int64_t by_block = 0;
    for (std::size_t b = 0; b < B_; ++b) {
      std::uint64_t mask = 0;
      for (const std::size_t u : comp) {
        if (available(u, b)) mask |= std::uint64_t{1} << u;
      }
      by_block += p_.weight[b] * block_mis(b, mask);
    }
    return std::min(singles, by_block);
  }

  // Best assignment of `set`; exact whenever its value reaches `threshold`.
  Assignment solve(const std::vector<std::size_t>& set, std::int64_t threshold) {
    auto comps = live_components(set);
    std::vector<std::int64_t> ub(comps.size(), 0);
    std::int64_t ub_rest = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::sort(comps[c].begin(), comps[c].end());
      ub[c] = comps[c].size() == 1 ? single_bound(comps[c][0]) : component_bound(comps[c]);
      ub_rest += ub[c];
    }
    Assignment total;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      ub_rest -= ub[c];
      const auto& comp = comps[c];
      if (comp.size() == 1) {
        total.append(single(comp[0]));
        continue;
      }
      const std::int64_t need = threshold - total.value - ub_rest;
      Assignment a = solve_connected(comp, need);
      total.append(a);
      if (a.value < need) {
        // The whole set stays below the threshold; finish with cheap labels.
        for (std::size_t d = c + 1; d < comps.size(); ++d) {
          total.append(comps[d].size() == 1 ? single(comps[d][0]) : warm_start(comps[d]));
        }
        break;
      }
    }
    return total;
  }

  Assignment solve_connected(const std::vector<std::size_t>& comp,
                             std::int64_t threshold) {
    const bool memo = comp.size() <= kMemoLabels;
    std::string key;
    if (memo) {
      key = memo_key(comp);
      if (const auto it = memo_.find(key); it != memo_.end()) {
        const MemoEntry& e = it->second;
        if (e.exact || threshold >= e.threshold) return e.best;
      }
    }
    Assignment a = branch(comp, threshold);
    if (memo && !stopped_) {
      MemoEntry e{a, a.value >= threshold, threshold};
      auto [it, inserted] = memo_.try_emplace(key, e);
      if (!inserted) {
        it->second = e;
      } else if (memo_.size() > kMemoEntries) {
        memo_.erase(it);
      }
    }
    return a;
  }

  // GreedyMax over the blocks of `set`: repeatedly give the longest free
  // run to its label, shrinking the partners' free blocks.
  Assignment warm_start(const std::vector<std::size_t>& set) const {
    const std::size_t n = set.size();
    std::vector<std::size_t> slot(L_, n);
    for (std::size_t k = 0; k < n; ++k) slot[set[k]] = k;
    std::vector<std::vector<char>> free(n);
    for (std::size_t k = 0; k < n; ++k) free[k] = free_row(set[k]);
    std::vector<int> count(n, 0);
    std::vector<Run> best(n);
    Assignment a;
    a.labels = set;
    a.rows.assign(n, std::vector<char>(B_, 0));
    auto refresh = [&](std::size_t k) {
      best[k] = Run{};
      if (p_.budget && count[k] >= *p_.budget) return;
      for (const Run& r : free_runs(free[k], p_.weight)) {
        if (r.ticks > best[k].ticks) best[k] = r;
      }
    };
    for (std::size_t k = 0; k < n; ++k) refresh(k);
    for (;;) {
      std::size_t pick = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (best[k].ticks > 0 && (pick == n || best[k].ticks > best[pick].ticks)) {
          pick = k;
        }
      }
      if (pick == n) break;
      const Run r = best[pick];
      std::vector<char> in_run(B_, 0);
      for (std::size_t k = 0; k < r.blocks; ++k) {
        const std::size_t b = (r.start + k) % B_;
        in_run[b] = 1;
        a.rows[pick][b] = 1;
        free[pick][b] = 0;
      }
      a.value += r.ticks;
      ++count[pick];
      for (const auto& [v, b] : p_.conflicts[set[pick]]) {
        if (slot[v] != n && in_run[b] && free[slot[v]][b]) {
          free[slot[v]][b] = 0;
          refresh(slot[v]);
        }
      }
      refresh(pick);
    }
    for (const auto& row : a.rows) a.ranges += circular_ranges(row);
    return a;
  }

  // Keeps the `budget` heaviest runs of a row.
  void trim_runs(std::vector<char>& row) const {
    if (!p_.budget) return;
    std::vector<Run> runs = free_runs(row, p_.weight);
    if (runs.size() <= static_cast<std::size_t>(*p_.budget)) return;
    std::stable_sort(runs.begin(), runs.end(),
                     [](const Run& a, const Run& b) { return a.ticks > b.ticks; });
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t r = 0; r < static_cast<std::size_t>(*p_.budget); ++r) {
      for (std::size_t k = 0; k < runs[r].blocks; ++k) row[(runs[r].start + k) % B_] = 1;
    }
  }

  // Primal heuristic: places relaxed patterns label by label, drops blocks
  // taken by earlier partners, then grows runs and adds new ones greedily.
  Assignment repair(const std::vector<std::size_t>& set,
                    const std::vector<std::vector<char>>& patterns, int order_kind) const {
    const std::size_t n = set.size();
    std::vector<std::size_t> slot(L_, n);
    for (std::size_t k = 0; k < n; ++k) slot[set[k]] = k;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::int64_t> key(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (order_kind == 0) {
        for (std::size_t b = 0; b < B_; ++b) key[k] -= patterns[k][b] ? p_.weight[b] : 0;
      } else if (order_kind == 1) {
        key[k] = static_cast<std::int64_t>(p_.conflicts[set[k]].size());
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

    std::vector<std::vector<int>> taken(n, std::vector<int>(B_, 0));
    std::vector<std::vector<char>> rows(n, std::vector<char>(B_, 0));
    auto occupy = [&](std::size_t k, std::size_t b) {
      rows[k][b] = 1;
      for (const auto& [v, cb] : p_.conflicts[set[k]]) {
        if (cb == b && slot[v] != n) ++taken[slot[v]][b];
      }
    };
    auto open = [&](std::size_t k, std::size_t b) {
      return !rows[k][b] && taken[k][b] == 0 && available(set[k], b);
    };
    for (const std::size_t k : order) {
      std::vector<char> row = patterns[k];
      for (std::size_t b = 0; b < B_; ++b) {
        if (row[b] && !open(k, b)) row[b] = 0;
      }
      trim_runs(row);
      for (std::size_t b = 0; b < B_; ++b) {
        if (row[b]) occupy(k, b);
      }
    }
    // Grow runs into free neighbouring blocks; this never adds a range.
    for (bool grew = true; grew;) {
      grew = false;
      for (const std::size_t k : order) {
        for (std::size_t b = 0; b < B_; ++b) {
          if (!open(k, b)) continue;
          if (rows[k][(b + B_ - 1) % B_] || rows[k][(b + 1) % B_]) {
            occupy(k, b);
            grew = true;
          }
        }
      }
    }
    // New runs, longest first, while budgets allow.
    for (;;) {
      std::size_t pick = n;
      Run best_run;
      for (std::size_t k = 0; k < n; ++k) {
        if (p_.budget && circular_ranges(rows[k]) >= *p_.budget) continue;
        std::vector<char> free(B_);
        for (std::size_t b = 0; b < B_; ++b) free[b] = open(k, b);
        for (const Run& r : free_runs(free, p_.weight)) {
          if (r.ticks > best_run.ticks) {
            best_run = r;
            pick = k;
          }
        }
      }
      if (pick == n) break;
      for (std::size_t k = 0; k < best_run.blocks; ++k) {
        occupy(pick, (best_run.start + k) % B_);
      }
    }
    Assignment a;
    a.labels = set;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t b = 0; b < B_; ++b) a.value += rows[k][b] ? p_.weight[b] : 0;
      a.ranges += circular_ranges(rows[k]);
    }
    a.rows = std::move(rows);
    return a;
  }

  std::int64_t block_mis(std::size_t b, std::uint64_t mask) {
    if (std::popcount(mask) <= 1) return std::popcount(mask);
    auto& memo = mis_memo_[b];
    if (const auto it = memo.find(mask); it != memo.end()) return it->second;
    const int v = MaskMis(block_adj_[b]).upper_bound(mask);
    if (memo.size() < 4096) memo.emplace(mask, v);
    return v;
  }

  std::size_t gain_index(std::size_t b, std::size_t r, int in_run) const {
    return (b * run_slots_ + r) * 2 + static_cast<std::size_t>(in_run);
  }

  Branch prepare(const std::vector<std::size_t>& set) {
    Branch br;
    // Branch on the label with most live partners.
    std::size_t best_degree = 0;
    br.label = set[0];
    std::vector<char> in_set(L_, 0);
    for (const std::size_t u : set) in_set[u] = 1;
    for (const std::size_t u : set) {
      std::size_t degree = 0;
      for (const auto& [v, b] : p_.conflicts[u]) {
        if (in_set[v] && available(u, b) && available(v, b)) ++degree;
      }
      if (degree > best_degree) {
        best_degree = degree;
        br.label = u;
      }
    }
    const std::size_t l = br.label;
    for (const std::size_t u : set) {
      if (u != l) br.rest.push_back(u);
    }
    br.avail = free_row(l);
    br.pend.assign(B_, 0);
    for (const auto& [v, b] : p_.conflicts[l]) {
      if (in_set[v] && v != l && available(v, b)) br.pend[b] = 1;
    }
    br.suffix.assign(B_ + 1, 0);
    for (std::size_t b = B_; b-- > 0;) {
      br.suffix[b] = br.suffix[b + 1] + (br.avail[b] ? p_.weight[b] : 0);
    }
    for (const std::size_t u : br.rest) br.rest_bound += single_bound(u);
    if (L_ > 64) return br;

    // Weighted independence bound per block over the rest, with the label
    // off (mis_off) or on (mis_on).
    br.mis_off.assign(B_, 0);
    br.mis_on.assign(B_, 0);
    br.mis_suffix.assign(B_ + 1, 0);
    br.off_suffix.assign(B_ + 1, 0);
    for (std::size_t b = B_; b-- > 0;) {
      std::uint64_t others = 0;
      for (const std::size_t u : br.rest) {
        if (available(u, b)) others |= std::uint64_t{1} << u;
      }
      br.mis_off[b] = p_.weight[b] * block_mis(b, others);
      br.mis_on[b] = br.mis_off[b];
      if (br.avail[b]) {
        br.mis_on[b] = p_.weight[b] * (1 + block_mis(b, others & ~block_adj_[b][l]));
      }
      br.mis_suffix[b] = br.mis_suffix[b + 1] + std::max(br.mis_off[b], br.mis_on[b]);
      br.off_suffix[b] = br.off_suffix[b + 1] + br.mis_off[b];
    }
    if (!p_.budget) return br;
    // gain(b, r, in_run): best on-minus-off gain over blocks b.. with at most
    // r more run starts of the label.
    br.run_gain.assign((B_ + 1) * run_slots_ * 2, 0);
    for (std::size_t b = B_; b-- > 0;) {
      const std::int64_t delta = br.mis_on[b] - br.mis_off[b];
      for (std::size_t r = 0; r < run_slots_; ++r) {
        for (int in_run = 0; in_run < 2; ++in_run) {
          std::int64_t g = br.run_gain[gain_index(b + 1, r, 0)];
          if (br.avail[b]) {
            if (in_run) {
              g = std::max(g, delta + br.run_gain[gain_index(b + 1, r, 1)]);
            } else if (r > 0) {
              g = std::max(g, delta + br.run_gain[gain_index(b + 1, r - 1, 1)]);
            }
          }
          br.run_gain[gain_index(b, r, in_run)] = g;
        }
      }
    }
    return br;
  }

  // Rounding allowance for the floating-point Lagrangian bound, in ticks.
  static constexpr std::int64_t kLagSlack = 4096;
  static constexpr int kLagIterations = 40;
  static constexpr int kLagWarmIterations = 8;

  // Greedy edge clique cover of the conflicts among `live` labels in block b.
  void add_block_cliques(std::size_t b, std::uint64_t live,
                         std::vector<LagClique>& cliques) const {
    const auto& adj = block_adj_[b];
    std::vector<std::uint64_t> open(L_, 0);
    for (std::uint64_t it = live; it != 0; it &= it - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(it));
      open[u] = adj[u] & live;
    }
    for (std::uint64_t it = live; it != 0; it &= it - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(it));
      while (open[u] != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(open[u]));
        std::uint64_t clique = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        std::uint64_t cand = adj[u] & adj[v] & live;
        while (cand != 0) {
          // Prefer members that cover open edges.
          std::uint64_t pick = cand & (open[u] | open[v]);
          if (pick == 0) pick = cand;
          const auto c = static_cast<std::size_t>(std::countr_zero(pick));
          clique |= std::uint64_t{1} << c;
          cand &= adj[c];
        }
        for (std::uint64_t m = clique; m != 0; m &= m - 1) {
          open[static_cast<std::size_t>(std::countr_zero(m))] &= ~clique;
        }
        cliques.push_back({b, clique, 0.0});
      }
    }
  }

  std::size_t tail_states() const { return run_slots_ * 4; }

  std::size_t tail_index(std::size_t layer, std::size_t r, bool in_run,
                         bool first) const {
    if (!p_.budget) return layer;
    return layer * tail_states() + (r * 2 + (in_run ? 1 : 0)) * 2 + (first ? 1 : 0);
  }

  bool tail_valid(std::size_t r, bool in_run, bool first) const {
    const auto k = static_cast<std::size_t>(*p_.budget);
    return r <= k || (r == k + 1 && first && in_run);
  }

  // Best circular pattern of at most `budget` runs over available blocks
  // for adjusted weights `w`; writes the pattern into `out`.
  double best_pattern(const std::vector<double>& w, const std::vector<char>& avail,
                      std::vector<char>& out) const {
    out.assign(B_, 0);
    if (!p_.budget) {
      double t = 0.0;
      for (std::size_t b = 0; b < B_; ++b) {
        if (avail[b] && w[b] > 0.0) {
          out[b] = 1;
          t += w[b];
        }
      }
      return t;
    }
    constexpr double kNone = -std::numeric_limits<double>::infinity();
    const std::size_t S = tail_states();
    auto& val = dp_val_;
    auto& from = dp_from_;
    val.assign((B_ + 1) * S, kNone);
    from.assign((B_ + 1) * S, -1);
    auto at = [&](std::size_t layer, std::size_t r, bool in_run, bool first) {
      return tail_index(layer, r, in_run, first);
    };
    val[at(1, 0, false, false)] = 0.0;
    if (avail[0]) val[at(1, 1, true, true)] = w[0];
    for (std::size_t b = 1; b < B_; ++b) {
      for (std::size_t s = 0; s < S; ++s) {
        const double v = val[b * S + s];
        if (v == kNone) continue;
        const std::size_t r = s / 4;
        const bool in_run = (s / 2) % 2 != 0;
        const bool first = s % 2 != 0;
        auto relax = [&](std::size_t idx, double nv) {
          if (nv > val[idx]) {
            val[idx] = nv;
            from[idx] = static_cast<std::int32_t>(s);
          }
        };
        relax(at(b + 1, r, false, first), v);
        if (!avail[b]) continue;
        if (in_run) {
          relax(at(b + 1, r, true, first), v + w[b]);
        } else if (r + 1 < run_slots_) {
          relax(at(b + 1, r + 1, true, first), v + w[b]);
        }
      }
    }
    double best = kNone;
    std::size_t arg = 0;
    for (std::size_t s = 0; s < S; ++s) {
      const double v = val[B_ * S + s];
      if (v == kNone || !tail_valid(s / 4, (s / 2) % 2 != 0, s % 2 != 0)) continue;
      if (v > best) {
        best = v;
        arg = s;
      }
    }
    for (std::size_t layer = B_; layer >= 1; --layer) {
      out[layer - 1] = static_cast<char>((arg / 2) % 2);
      if (layer > 1) arg = static_cast<std::size_t>(from[layer * S + arg]);
    }
    return best;
  }

  // Dualizes per-block clique constraints of `set` and tunes the
  // multipliers by subgradient steps towards `target`.
  void lagrange(const std::vector<std::size_t>& set, Branch& br,
                std::int64_t target) {
    if (L_ > 64) return;
    std::vector<std::uint64_t> live(B_, 0);
    for (std::size_t b = 0; b < B_; ++b) {
      for (const std::size_t u : set) {
        if (available(u, b)) live[b] |= std::uint64_t{1} << u;
      }
    }
    std::vector<LagClique>& cliques = br.cliques;
    int iterations = kLagIterations;
    if (lag_hint_ != nullptr) {
      // Restricted parent cliques are cliques and still cover every edge.
      std::unordered_map<std::uint64_t, std::size_t> seen;
      for (const auto& c : *lag_hint_) {
        const std::uint64_t m = c.members & live[c.b];
        if (std::popcount(m) < 2) continue;
        const std::uint64_t key = m * 1315423911u + c.b;
        const auto [it, fresh] = seen.try_emplace(key, cliques.size());
        if (fresh) {
          cliques.push_back({c.b, m, c.mu});
        } else {
          cliques[it->second].mu += c.mu;
        }
      }
      iterations = kLagWarmIterations;
    } else {
      for (std::size_t b = 0; b < B_; ++b) add_block_cliques(b, live[b], cliques);
    }
    if (cliques.empty()) return;

    const std::size_t n = set.size();
    std::vector<std::vector<char>> avail(n);
    for (std::size_t k = 0; k < n; ++k) avail[k] = free_row(set[k]);
    std::vector<std::vector<double>> w(n, std::vector<double>(B_));
    std::vector<std::vector<char>> x(n);
    std::vector<double> best_mu(cliques.size(), 0.0);
    double best_dual = std::numeric_limits<double>::infinity();
    double theta = 1.0;
    int stalled = 0;
    const double goal = static_cast<double>(target);
    auto adjusted = [&](std::size_t k) {
      for (std::size_t b = 0; b < B_; ++b) w[k][b] = static_cast<double>(p_.weight[b]);
    };
    for (int iter = 0; iter < iterations; ++iter) {
      double dual = 0.0;
      for (const auto& c : cliques) dual += c.mu;
      for (std::size_t k = 0; k < n; ++k) adjusted(k);
      std::vector<std::size_t> slot(L_, n);
      for (std::size_t k = 0; k < n; ++k) slot[set[k]] = k;
      for (const auto& c : cliques) {
        for (std::uint64_t m = c.members; m != 0; m &= m - 1) {
          w[slot[static_cast<std::size_t>(std::countr_zero(m))]][c.b] -= c.mu;
        }
      }
      for (std::size_t k = 0; k < n; ++k) dual += best_pattern(w[k], avail[k], x[k]);
      if (dual < best_dual) {
        if (dual < best_dual - 1e-9 * std::abs(best_dual)) stalled = 0;
        best_dual = dual;
        for (std::size_t c = 0; c < cliques.size(); ++c) best_mu[c] = cliques[c].mu;
      } else if (++stalled >= 4) {
        theta /= 2;
        stalled = 0;
      }
      if (best_dual < goal || theta < 1e-3) break;
      double norm = 0.0;
      std::vector<double> g(cliques.size());
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        double used = 0.0;
        for (std::uint64_t m = cliques[c].members; m != 0; m &= m - 1) {
          used += x[slot[static_cast<std::size_t>(std::countr_zero(m))]][cliques[c].b];
        }
        g[c] = 1.0 - used;
        if (g[c] < 0.0 || cliques[c].mu > 0.0) norm += g[c] * g[c];
      }
      if (norm == 0.0) break;
      const double step = theta * std::max(dual - goal, 1.0) / norm;
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        const double weight = static_cast<double>(p_.weight[cliques[c].b]);
        cliques[c].mu = std::clamp(cliques[c].mu - step * g[c], 0.0, weight);
      }
    }

    // Freeze the best multipliers into the enumeration tables.
    std::vector<std::size_t> slot(L_, n);
    for (std::size_t k = 0; k < n; ++k) slot[set[k]] = k;
    for (std::size_t k = 0; k < n; ++k) adjusted(k);
    double constant = 0.0;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      cliques[c].mu = best_mu[c];
      constant += best_mu[c];
      for (std::uint64_t m = cliques[c].members; m != 0; m &= m - 1) {
        w[slot[static_cast<std::size_t>(std::countr_zero(m))]][cliques[c].b] -= best_mu[c];
      }
    }
    const std::size_t own = slot[br.label];
    for (std::size_t k = 0; k < n; ++k) {
      const double v = best_pattern(w[k], avail[k], x[k]);
      if (k != own) constant += v;
    }
    br.lag_patterns = x;
    br.lag_ok = true;
    br.lag_rest = constant;
    br.lag_w = w[own];
    const auto& a = avail[own];
    const auto& lw = br.lag_w;
    if (!p_.budget) {
      br.lag_tail.assign(B_ + 1, 0.0);
      for (std::size_t b = B_; b-- > 0;) {
        br.lag_tail[b] = br.lag_tail[b + 1] + (a[b] ? std::max(0.0, lw[b]) : 0.0);
      }
      br.lag_root = br.lag_tail[0];
      return;
    }
    constexpr double kNone = -std::numeric_limits<double>::infinity();
    const std::size_t S = tail_states();
    auto& g = br.lag_tail;
    g.assign((B_ + 1) * S, kNone);
    for (std::size_t s = 0; s < S; ++s) {
      if (tail_valid(s / 4, (s / 2) % 2 != 0, s % 2 != 0)) g[B_ * S + s] = 0.0;
    }
    for (std::size_t layer = B_; layer-- > 1;) {
      const std::size_t b = layer;  // next block to decide
      for (std::size_t s = 0; s < S; ++s) {
        const std::size_t r = s / 4;
        const bool in_run = (s / 2) % 2 != 0;
        const bool first = s % 2 != 0;
        double v = g[tail_index(layer + 1, r, false, first)];
        if (a[b]) {
          if (in_run) {
            v = std::max(v, lw[b] + g[tail_index(layer + 1, r, true, first)]);
          } else if (r + 1 < run_slots_) {
            v = std::max(v, lw[b] + g[tail_index(layer + 1, r + 1, true, first)]);
          }
        }
        g[layer * S + s] = v;
      }
    }
    br.lag_root = g[tail_index(1, 0, false, false)];
    if (a[0]) br.lag_root = std::max(br.lag_root, lw[0] + g[tail_index(1, 1, true, true)]);
  }

  std::int64_t bound(const Branch& br, const Frame& f) const {
    const std::int64_t simple = f.value + br.suffix[f.b] + br.rest_bound;
    if (L_ > 64) return simple;
    std::int64_t by_block = f.mis + br.mis_suffix[f.b];
    if (p_.budget) {
      // A run through block 0 may merge with the last run, freeing a start.
      const std::int64_t starts =
          *p_.budget + ((f.b == 0 || f.first) ? 1 : 0) - f.runs;
      if (starts < 0) {
        by_block = f.mis + br.off_suffix[f.b];
      } else {
        const std::size_t r =
            std::min(static_cast<std::size_t>(starts), run_slots_ - 1);
        by_block = f.mis + br.off_suffix[f.b] +
                   br.run_gain[gain_index(f.b, r, f.prev ? 1 : 0)];
      }
    }
    std::int64_t bound = std::min(simple, by_block);
    if (br.lag_ok) {
      const double tail =
          f.b == 0 ? br.lag_root
                   : br.lag_tail[tail_index(f.b, static_cast<std::size_t>(f.runs),
                                            f.prev, f.first)];
      const double lag = f.lag + tail + br.lag_rest;
      if (lag < static_cast<double>(bound)) {
        bound = std::min(bound, static_cast<std::int64_t>(std::ceil(lag)) + kLagSlack);
      }
    }
    return bound;
  }

  bool prune(const Branch& br, const Frame& f, const Assignment& best,
             std::int64_t threshold) const {
    const std::int64_t optimistic = bound(br, f);
    if (optimistic < threshold) return true;
    if (optimistic < best.value) return true;
    if (optimistic > best.value) return false;
    if (!p_.minimize) return true;
    std::int64_t own = f.runs - (f.first ? 1 : 0);
    if (f.runs > 0 && own < 1) own = 1;
    return own >= best.ranges;
  }

  Assignment branch(const std::vector<std::size_t>& set, std::int64_t threshold) {
    Assignment best = warm_start(set);
    Branch br = prepare(set);
    lagrange(set, br, std::max(threshold, best.value));
    const Frame root{0, 0, 0, 0, 0.0, false, false, Choice::kFresh, false};
    if (br.lag_ok) {
      for (int order = 0; order < 3; ++order) {
        Assignment a = repair(set, br.lag_patterns, order);
        if (better(a.value, a.ranges, best)) best = std::move(a);
      }
    }
    if (prune(br, root, best, threshold)) return best;
    const std::size_t l = br.label;
    const bool unlimited = !p_.budget.has_value();
    std::vector<char> row(B_, 0);
    std::vector<Frame> stack;
    stack.reserve(B_ + 2);
    stack.push_back({0, 0, 0, 0, 0.0, false, false, Choice::kFresh, false});
    while (!stack.empty() && !stopped_) {
      Frame& f = stack.back();
      if (f.choice == Choice::kFresh) {
        ++nodes_;
        if (deadline_.expired()) {
          stopped_ = true;
          break;
        }
        if (f.b == B_) {
          const Frame done = f;
          stack.pop_back();
          if (!prune(br, done, best, threshold)) finish(br, done, row, best, threshold);
          continue;
        }
        if (prune(br, f, best, threshold)) {
          stack.pop_back();
          continue;
        }
        bool can = br.avail[f.b] != 0;
        // Starting a run right after a free block nobody else wants is
        // dominated by starting it one block earlier.
        if (can && !f.prev && f.b > 0 && br.avail[f.b - 1] && !br.pend[f.b - 1]) {
          can = false;
        }
        if (can && !f.prev && !unlimited) {
          const std::int64_t committed =
              f.runs + 1 - ((f.first || f.b == 0) ? 1 : 0);
          if (committed > *p_.budget) can = false;
        }
        if (can) {
          f.forced = !br.pend[f.b] && f.prev;
          f.choice = Choice::kTriedActive;
          row[f.b] = 1;
          const Frame child{f.b + 1,
                            f.value + p_.weight[f.b],
                            f.runs + (f.prev ? 0 : 1),
                            f.mis + (L_ > 64 ? 0 : br.mis_on[f.b]),
                            f.lag + (br.lag_ok ? br.lag_w[f.b] : 0.0),
                            f.b == 0 ? true : f.first,
                            true,
                            Choice::kFresh,
                            false};
          stack.push_back(child);
        } else {
          f.choice = Choice::kDone;
          row[f.b] = 0;
          const Frame child{f.b + 1,
                            f.value,
                            f.runs,
                            f.mis + (L_ > 64 ? 0 : br.mis_off[f.b]),
                            f.lag,
                            f.first,
                            false,
                            Choice::kFresh,
                            false};
          stack.push_back(child);
        }
      } else if (f.choice == Choice::kTriedActive && !f.forced) {
        f.choice = Choice::kDone;
        row[f.b] = 0;
        const Frame child{f.b + 1,
                          f.value,
                          f.runs,
                          f.mis + (L_ > 64 ? 0 : br.mis_off[f.b]),
                          f.lag,
                          f.b == 0 ? false : f.first,
                          false,
                          Choice::kFresh,
                          false};
        stack.push_back(child);
      } else {
        row[f.b] = 0;
        stack.pop_back();
      }
    }
    (void)l;
    return best;
  }

  void finish(const Branch& br, const Frame& f, const std::vector<char>& row,
              Assignment& best, std::int64_t threshold) {
    const std::size_t l = br.label;
    const std::int64_t ranges = circular_ranges(row);
    if (p_.budget && ranges > *p_.budget) return;
    // The wrap-around counterpart of the run-start dominance.
    if (B_ > 1 && row[0] && !row[B_ - 1] && br.avail[B_ - 1] && !br.pend[B_ - 1]) {
      return;
    }
    for (const auto& [v, b] : p_.conflicts[l]) {
      if (row[b]) ++blocked_[v][b];
    }
    const auto* saved_hint = lag_hint_;
    lag_hint_ = br.lag_ok ? &br.cliques : nullptr;
    const Assignment sub =
        solve(br.rest, std::max(threshold, best.value) - f.value);
    lag_hint_ = saved_hint;
    for (const auto& [v, b] : p_.conflicts[l]) {
      if (row[b]) --blocked_[v][b];
    }
    const std::int64_t value = f.value + sub.value;
    const std::int64_t total_ranges = ranges + sub.ranges;
    if (better(value, total_ranges, best)) {
      best.value = value;
      best.ranges = total_ranges;
      best.labels.assign(1, l);
      best.rows.assign(1, row);
      best.labels.insert(best.labels.end(), sub.labels.begin(), sub.labels.end());
      best.rows.insert(best.rows.end(), sub.rows.begin(), sub.rows.end());
    }
  }

  const LocalProblem& p_;
  Deadline& deadline_;
  const std::size_t L_;
  const std::size_t B_;
  std::vector<std::vector<int>> blocked_;
  const std::size_t run_slots_;
  std::vector<std::vector<std::uint64_t>> block_adj_;
  std::vector<std::unordered_map<std::uint64_t, int>> mis_memo_;
  std::unordered_map<std::string, MemoEntry> memo_;
  // Cliques and multipliers of the enclosing subproblem, a warm start for
  // the Lagrangian bound of its children.
  const std::vector<LagClique>* lag_hint_ = nullptr;
  mutable std::vector<double> dp_val_;
  mutable std::vector<std::int32_t> dp_from_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

// ∞R without range minimization decomposes into one independent-set
// problem per block.
LocalResult solve_unbounded(const LocalProblem& p, Deadline& deadline) {
  const std::size_t L = p.label_count();
  const std::size_t B = p.block_count();
  LocalResult res;
  res.x.assign(L, std::vector<char>(B, 0));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(B);
  for (std::size_t l = 0; l < L; ++l) {
    for (const auto& [v, b] : p.conflicts[l]) {
      if (l < v) edges[b].emplace_back(l, v);
    }
  }
  std::vector<std::vector<std::size_t>> adj(L);
  for (std::size_t b = 0; b < B; ++b) {
    std::vector<std::size_t> cand;
    for (std::size_t l = 0; l < L; ++l) {
      if (p.allowed[l][b]) cand.push_back(l);
    }
    for (auto& a : adj) a.clear();
    for (const auto& [u, v] : edges[b]) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    IndependentSetSearch mis(adj, deadline);
    for (const std::size_t l : mis.solve(std::move(cand))) {
      res.x[l][b] = 1;
      res.value += p.weight[b];
    }
    res.nodes += mis.nodes();
    if (!mis.complete()) res.optimal = false;
  }
  for (const auto& row : res.x) res.ranges += circular_ranges(row);
  return res;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> components_of(
    const AtomicIntervalModel& m) {
  UnionFind uf(m.label_count);
  for (const auto& [a, b] : m.edges) uf.unite(a, b);
  std::vector<std::vector<std::size_t>> groups(m.label_count);
  for (std::size_t i = 0; i < m.label_count; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

LocalProblem make_local(const AtomicIntervalModel& m,
                        const std::vector<std::size_t>& comp,
                        const std::vector<std::size_t>& local_of,
                        const std::vector<std::size_t>& first_constraint) {
  const std::size_t J = m.interval_count();
  LocalProblem p;
  p.labels = comp;
  p.budget = m.config.range_budget();
  p.minimize = m.minimize_ranges;

  std::vector<std::size_t> bounds{0, J};
  for (const std::size_t i : comp) {
    const auto& f = m.forbidden[i];
    for (std::size_t j = 1; j < J; ++j) {
      if (f[j] != f[j - 1]) bounds.push_back(j);
    }
    for (std::size_t c = first_constraint[i]; c < first_constraint[i + 1]; ++c) {
      const auto& k = m.conflicts[c];
      const bool starts = c == first_constraint[i] ||
                          m.conflicts[c - 1].l != k.l ||
                          m.conflicts[c - 1].interval + 1 != k.interval;
      const bool ends = c + 1 == first_constraint[i + 1] ||
                        m.conflicts[c + 1].l != k.l ||
                        m.conflicts[c + 1].interval != k.interval + 1;
      if (starts) bounds.push_back(k.interval);
      if (ends) bounds.push_back(k.interval + 1);
    }
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  p.block_start.assign(bounds.begin(), bounds.end() - 1);
  const std::size_t B = p.block_start.size();
  p.weight.resize(B);
  for (std::size_t b = 0; b < B; ++b) {
    p.weight[b] = to_ticks(m.events[bounds[b + 1]]) - to_ticks(m.events[bounds[b]]);
  }

  const std::size_t L = comp.size();
  p.allowed.assign(L, std::vector<char>(B, 1));
  p.conflicts.assign(L, {});
  p.partners.assign(L, {});
  for (std::size_t a = 0; a < L; ++a) {
    for (std::size_t b = 0; b < B; ++b) {
      p.allowed[a][b] = !m.forbidden[comp[a]][p.block_start[b]];
    }
    const std::size_t i = comp[a];
    for (std::size_t c = first_constraint[i]; c < first_constraint[i + 1]; ++c) {
      const auto& k = m.conflicts[c];
      const auto it = std::upper_bound(p.block_start.begin(), p.block_start.end(),
                                       k.interval);
      const std::size_t b = static_cast<std::size_t>(it - p.block_start.begin()) - 1;
      if (p.block_start[b] != k.interval) continue;
      const std::size_t v = local_of[k.l];
      p.conflicts[a].emplace_back(v, b);
      p.conflicts[v].emplace_back(a, b);
    }
  }
  for (std::size_t a = 0; a < L; ++a) {
    auto& c = p.conflicts[a];
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) {
      return x.second < y.second || (x.second == y.second && x.first < y.first);
    });
    for (const auto& [v, b] : c) p.partners[a].push_back(v);
    std::sort(p.partners[a].begin(), p.partners[a].end());
    p.partners[a].erase(std::unique(p.partners[a].begin(), p.partners[a].end()),
                        p.partners[a].end());
  }
  return p;
}

ExactSolution solve_zero_one(const AtomicIntervalModel& m,
                             const ExactOptions& options) {
  ExactSolution sol;
  sol.components = components_of(m);
  std::vector<std::vector<std::size_t>> adj(m.label_count);
  for (const auto& [a, b] : m.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> chosen(m.label_count, false);
  std::int64_t ticks = 0;
  for (const auto& comp : sol.components) {
    Deadline deadline(options.time_limit_per_component);
    std::vector<std::size_t> cand;
    for (const std::size_t i : comp) {
      const bool blocked = std::any_of(m.forbidden[i].begin(),
                                       m.forbidden[i].end(),
                                       [](bool f) { return f; });
      if (!blocked) cand.push_back(i);
    }
    IndependentSetSearch mis(adj, deadline);
    for (const std::size_t i : mis.solve(std::move(cand))) {
      chosen[i] = true;
      ticks += to_ticks(kTwoPi);
    }
    sol.nodes += mis.nodes();
    sol.component_optimal.push_back(mis.complete());
  }
  sol.labeling = RotationLabeling::empty(m.label_count, m.config);
  for (std::size_t i = 0; i < m.label_count; ++i) {
    if (chosen[i]) {
      sol.labeling.active[i] = AngularSet::full();
      ++sol.range_count;
    }
  }
  sol.objective = from_ticks(ticks);
  return sol;
}

}  // namespace

ExactSolution solve_exact(const AtomicIntervalModel& m,
                          const ExactOptions& options) {
  if (m.zero_one()) return solve_zero_one(m, options);

  ExactSolution sol;
  sol.components = components_of(m);
  const std::size_t J = m.interval_count();
  std::vector<std::size_t> first_constraint(m.label_count + 1, 0);
  for (const auto& c : m.conflicts) ++first_constraint[c.i + 1];
  for (std::size_t i = 0; i < m.label_count; ++i) {
    first_constraint[i + 1] += first_constraint[i];
  }

  std::vector<std::vector<bool>> x(m.label_count, std::vector<bool>(J, false));
  std::vector<std::size_t> local_of(m.label_count, 0);
  std::int64_t ticks = 0;
  for (const auto& comp : sol.components) {
    for (std::size_t a = 0; a < comp.size(); ++a) local_of[comp[a]] = a;
    const LocalProblem p = make_local(m, comp, local_of, first_constraint);
    Deadline deadline(options.time_limit_per_component);
    LocalResult r;
    if (!p.budget && !p.minimize) {
      r = solve_unbounded(p, deadline);
    } else {
      r = SubsetSearch(p, deadline).run();
    }
    sol.component_optimal.push_back(r.optimal);
    sol.nodes += r.nodes;
    ticks += r.value;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = 0; b < p.block_count(); ++b) {
        if (!r.x[a][b]) continue;
        const std::size_t end =
            b + 1 < p.block_count() ? p.block_start[b + 1] : J;
        for (std::size_t j = p.block_start[b]; j < end; ++j) x[comp[a]][j] = true;
      }
    }
  }
  sol.labeling = labeling_from_activity(m, x);
  sol.objective = from_ticks(ticks);
  for (const auto& s : sol.labeling.active) sol.range_count += s.interval_count();
  return sol;
}

ExactSolution minimize_ranges_solve(const AtomicIntervalModel& model,
                                    const ExactOptions& options) {
  if (model.minimize_ranges) return solve_exact(model, options);
  if (model.zero_one()) {
    throw std::invalid_argument(
        "range minimization needs the kR or the ∞R model");
  }
  AtomicIntervalModel m = model;
  m.minimize_ranges = true;
  return solve_exact(m, options);
}

ExactSolution solve_exact(const ConflictStructure& cs, const ModelConfig& cfg,
                          const ExactOptions& options) {
  return solve_exact(build_model(cs, cfg), options);
}

}  // namespace rotlabel
