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

// Input maps (anchored labels), consistency models and rotation labelings.

#ifndef ROTLABEL_MODEL_H_
#define ROTLABEL_MODEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotlabel/angular.h"

namespace rotlabel {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Which corner of the label rectangle sits on the anchor point.
enum class AnchorCorner { kBottomLeft, kBottomRight, kTopLeft, kTopRight };

inline constexpr AnchorCorner kAllCorners[] = {
    AnchorCorner::kBottomLeft, AnchorCorner::kBottomRight,
    AnchorCorner::kTopLeft, AnchorCorner::kTopRight};

std::string_view corner_tag(AnchorCorner corner);  // "BL", "BR", "TL", "TR"
AnchorCorner parse_corner_tag(std::string_view tag);

struct AnchoredLabel {
  int id = 0;
  Point anchor;
  double width = 1.0;
  double height = 1.0;
  AnchorCorner corner = AnchorCorner::kBottomLeft;
  std::optional<std::string> name;
  std::optional<double> weight;

  // Offset of the rectangle's bottom-left corner from the anchor.
  Point corner_offset() const;
  double diagonal() const;

  friend bool operator==(const AnchoredLabel&, const AnchoredLabel&) = default;
};

// A labeled point map. Ids are unique, dimensions positive and anchors
// pairwise distinct; the constructor throws std::invalid_argument otherwise.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<AnchoredLabel> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const AnchoredLabel& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<AnchoredLabel>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(int id) const;
  double max_diagonal() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<AnchoredLabel> labels_;
};

// Pairs (by label id) whose rectangles overlap in their interiors at α = 0.
std::vector<std::pair<int, int>> validate_static(const Instance& inst);

enum class RangeModel { kZeroOne, kBounded, kUnbounded };
enum class ConflictMode { kSoft, kHard };

struct ModelConfig {
  RangeModel ranges = RangeModel::kBounded;
  int k = 1;
  ConflictMode conflicts = ConflictMode::kSoft;

  static ModelConfig zero_one(ConflictMode mode = ConflictMode::kSoft);
  static ModelConfig k_ranges(int k, ConflictMode mode = ConflictMode::kSoft);
  static ModelConfig unbounded(ConflictMode mode = ConflictMode::kSoft);

  // Maximum number of active ranges per label; nullopt for ∞R.
  std::optional<int> range_budget() const;
  bool hard() const { return conflicts == ConflictMode::kHard; }

  // "01", "kR:<k>" or "inf".
  std::string model_tag() const;
  // "soft" or "hard".
  std::string conflict_tag() const;
  // e.g. "kR:2/hard"
  std::string to_string() const;

  // Throws std::invalid_argument on malformed tags or k < 1.
  static ModelConfig parse(std::string_view model_tag,
                           std::string_view conflict_tag = "soft");
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// Active ranges per label, indexed like the Instance the labeling belongs to.
struct RotationLabeling {
  std::vector<AngularSet> active;
  ModelConfig model;
  // Set when greedy produced an ∞R labeling by unbounded range rounds.
  bool unbounded_greedy_extension = false;

  static RotationLabeling empty(std::size_t n, const ModelConfig& model);
  std::size_t size() const { return active.size(); }
};

// Sum of active-range lengths over all labels, in radians.
double total_activity(const RotationLabeling& phi);

}  // namespace rotlabel

#endif  // ROTLABEL_MODEL_H_
