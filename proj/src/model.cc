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

#include "rotlabel/model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace rotlabel {

std::string_view corner_tag(AnchorCorner corner) {
  switch (corner) {
    case AnchorCorner::kBottomLeft:
      return "BL";
    case AnchorCorner::kBottomRight:
      return "BR";
    case AnchorCorner::kTopLeft:
      return "TL";
    case AnchorCorner::kTopRight:
      return "TR";
  }
  return "BL";
}

AnchorCorner parse_corner_tag(std::string_view tag) {
  if (tag == "BL") return AnchorCorner::kBottomLeft;
  if (tag == "BR") return AnchorCorner::kBottomRight;
  if (tag == "TL") return AnchorCorner::kTopLeft;
  if (tag == "TR") return AnchorCorner::kTopRight;
  throw std::invalid_argument("unknown anchor corner '" + std::string(tag) +
                              "'");
}

Point AnchoredLabel::corner_offset() const {
  switch (corner) {
    case AnchorCorner::kBottomLeft:
      return {0.0, 0.0};
    case AnchorCorner::kBottomRight:
      return {-width, 0.0};
    case AnchorCorner::kTopLeft:
      return {0.0, -height};
    case AnchorCorner::kTopRight:
      return {-width, -height};
  }
  return {};
}

double AnchoredLabel::diagonal() const { return std::hypot(width, height); }

Instance::Instance(std::vector<AnchoredLabel> labels)
    : labels_(std::move(labels)) {
  std::unordered_set<int> ids;
  for (const auto& l : labels_) {
    if (!(l.width > 0.0) || !(l.height > 0.0)) {
      throw std::invalid_argument("label " + std::to_string(l.id) +
                                  ": width and height must be positive");
    }
    if (!std::isfinite(l.anchor.x) || !std::isfinite(l.anchor.y)) {
      throw std::invalid_argument("label " + std::to_string(l.id) +
                                  ": non-finite anchor");
    }
    if (l.weight && *l.weight < 0.0) {
      throw std::invalid_argument("label " + std::to_string(l.id) +
                                  ": negative weight");
    }
    if (!ids.insert(l.id).second) {
      throw std::invalid_argument("duplicate label id " +
                                  std::to_string(l.id));
    }
  }
  std::vector<Point> anchors;
  anchors.reserve(labels_.size());
  for (const auto& l : labels_) anchors.push_back(l.anchor);
  std::sort(anchors.begin(), anchors.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end()) {
    throw std::invalid_argument("two labels share an anchor point");
  }
}

std::optional<std::size_t> Instance::index_of(int id) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].id == id) return i;
  }
  return std::nullopt;
}

double Instance::max_diagonal() const {
  double d = 0.0;
  for (const auto& l : labels_) d = std::max(d, l.diagonal());
  return d;
}

namespace {

struct Box {
  double x0, y0, x1, y1;
};

Box static_box(const AnchoredLabel& l) {
  const Point off = l.corner_offset();
  const double x0 = l.anchor.x + off.x;
  const double y0 = l.anchor.y + off.y;
  return {x0, y0, x0 + l.width, y0 + l.height};
}

bool interiors_overlap(const Box& a, const Box& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

}  // namespace

std::vector<std::pair<int, int>> validate_static(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const auto& l : inst.labels()) boxes.push_back(static_box(l));

  // Sweep over x: sort by left edge, compare against boxes still open.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].x0 < boxes[b].x0 || (boxes[a].x0 == boxes[b].x0 && a < b);
  });
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < n; ++p) {
    const Box& a = boxes[order[p]];
    for (std::size_t q = p + 1; q < n && boxes[order[q]].x0 < a.x1; ++q) {
      if (interiors_overlap(a, boxes[order[q]])) {
        int i = inst[order[p]].id;
        int j = inst[order[q]].id;
        if (i > j) std::swap(i, j);
        out.emplace_back(i, j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModelConfig ModelConfig::zero_one(ConflictMode mode) {
  return {RangeModel::kZeroOne, 1, mode};
}

ModelConfig ModelConfig::k_ranges(int k, ConflictMode mode) {
  ModelConfig cfg{RangeModel::kBounded, k, mode};
  cfg.validate();
  return cfg;
}

ModelConfig ModelConfig::unbounded(ConflictMode mode) {
  return {RangeModel::kUnbounded, 1, mode};
}

std::optional<int> ModelConfig::range_budget() const {
  switch (ranges) {
    case RangeModel::kZeroOne:
      return 1;
    case RangeModel::kBounded:
      return k;
    case RangeModel::kUnbounded:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string ModelConfig::model_tag() const {
  switch (ranges) {
    case RangeModel::kZeroOne:
      return "01";
    case RangeModel::kBounded:
      return "kR:" + std::to_string(k);
    case RangeModel::kUnbounded:
      return "inf";
  }
  return "";
}

std::string ModelConfig::conflict_tag() const {
  return conflicts == ConflictMode::kHard ? "hard" : "soft";
}

std::string ModelConfig::to_string() const {
  return model_tag() + "/" + conflict_tag();
}

void ModelConfig::validate() const {
  if (ranges == RangeModel::kBounded && k < 1) {
    throw std::invalid_argument("kR model needs k >= 1, got " +
                                std::to_string(k));
  }
}

ModelConfig ModelConfig::parse(std::string_view model_tag,
                               std::string_view conflict_tag) {
  ModelConfig cfg;
  if (conflict_tag == "soft") {
    cfg.conflicts = ConflictMode::kSoft;
  } else if (conflict_tag == "hard") {
    cfg.conflicts = ConflictMode::kHard;
  } else {
    throw std::invalid_argument("unknown conflict mode '" +
                                std::string(conflict_tag) + "'");
  }
  if (model_tag == "01" || model_tag == "0/1") {
    cfg.ranges = RangeModel::kZeroOne;
  } else if (model_tag == "inf") {
    cfg.ranges = RangeModel::kUnbounded;
  } else if (model_tag.starts_with("kR:")) {
    const std::string_view digits = model_tag.substr(3);
    int k = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed model tag '" +
                                  std::string(model_tag) + "'");
    }
    cfg.ranges = RangeModel::kBounded;
    cfg.k = k;
  } else {
    throw std::invalid_argument("unknown model '" + std::string(model_tag) +
                                "' (expected 01, kR:<k> or inf)");
  }
  cfg.validate();
  return cfg;
}

RotationLabeling RotationLabeling::empty(std::size_t n,
                                         const ModelConfig& model) {
  RotationLabeling phi;
  phi.active.assign(n, AngularSet{});
  phi.model = model;
  return phi;
}

double total_activity(const RotationLabeling& phi) {
  double t = 0.0;
  for (const auto& s : phi.active) t += s.measure();
  return t;
}

}  // namespace rotlabel
