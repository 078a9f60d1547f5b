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


// Instance and labeling files, geographic ingestion, static labeling,
// synthetic instances and SVG snapshots.

#ifndef ROTLABEL_IO_H_
#define ROTLABEL_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotlabel/model.h"

namespace rotlabel {

// Instance CSV: a "#rotlabel-instance v1 units=<u>" line, the column header
// "id,x,y,width,height,corner,name,weight", one row per label. Numbers are
// written in shortest round-trip form, so reading back is exact.
struct InstanceFile {
  Instance instance;
  std::string units = "map";
};

std::string write_instance(const InstanceFile& file);
inline std::string write_instance(const Instance& inst) {
  return write_instance(InstanceFile{inst, "map"});
}
// Throws std::runtime_error with a line number on malformed input.
InstanceFile read_instance(std::string_view text);

// Labeling CSV: "#rotlabel-labeling v1 model=<tag> conflicts=<tag>" (plus
// " extension=unbounded-greedy" when set), the header "id,ranges", one row
// per label. Ranges are "start:end" pairs joined by ';' (start > end wraps
// through 0), "full" for the whole circle, empty for none; 12 significant
// digits.
std::string write_labeling(const Instance& inst, const RotationLabeling& phi);
RotationLabeling read_labeling(const Instance& inst, std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct GeoRecord {
  std::string name;
  double latitude = 0.0;   // degrees
  double longitude = 0.0;  // degrees
  double weight = 0.0;
};

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kMaxMercatorLatitude = 85.06;

// CSV with header "name,lat,lon,weight".
std::vector<GeoRecord> read_geo_records(std::string_view text);

// Spherical Mercator in kilometres times `scale`. Throws
// std::invalid_argument outside |lat| < 85.06 or |lon| <= 180.
std::vector<Point> mercator_project(const std::vector<GeoRecord>& recs,
                                    double scale);

struct StaticCandidate {
  Point point;
  double width = 1.0;
  double height = 1.0;
  std::optional<std::string> name;
  std::optional<double> weight;
};

// Greedy 4P labeling: points by descending weight (input order on ties),
// corners tried BL, BR, TL, TR; a position is taken if it overlaps no
// accepted label in the interior. Unlabeled points are dropped; ids are the
// candidates' input positions.
Instance prepare_static_labeling(const std::vector<StaticCandidate>& points);

struct IngestOptions {
  double scale = 0.1;       // map units per kilometre
  double height = 1.0;      // label height in map units
  double char_width = 0.6;  // width per character of the name
  double padding = 0.4;     // added to every width
};

Instance ingest(const std::vector<GeoRecord>& recs, const IngestOptions& options = {});

struct GenerateOptions {
  std::size_t n = 10;
  double region_width = 10.0;
  double region_height = 10.0;
  double min_width = 1.0;
  double max_width = 1.0;
  double min_height = 1.0;
  double max_height = 1.0;
  std::uint64_t seed = 1;

  static GenerateOptions unit_squares(std::size_t n, double side,
                                      std::uint64_t seed);
};

// Draws anchors uniformly in the region and dimensions uniformly in the
// ranges, placing each with the static 4P rule, until n labels are placed.
// Throws std::invalid_argument for empty ranges or when the region is too
// crowded to place n labels.
Instance generate_random(const GenerateOptions& options);

struct SvgOptions {
  double pixels_per_unit = 40.0;
  double margin = 10.0;
};

// Anchors as dots; labels active at alpha drawn rotated by alpha about their
// anchors. The map's y axis points up.
std::string svg_snapshot(const Instance& inst, const RotationLabeling& phi,
                         double alpha, const SvgOptions& options = {});

}  // namespace rotlabel

#endif  // ROTLABEL_IO_H_
