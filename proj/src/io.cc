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


#include "rotlabel/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rotlabel {
namespace {

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string digits12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string quote(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"' && fields.back().empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": unterminated quote");
  }
  return fields;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

std::runtime_error parse_error(std::size_t line_no, const std::string& what) {
  return std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

double parse_double(std::string_view s, std::size_t line_no, const char* what) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || s.empty()) {
    throw parse_error(line_no, std::string("bad ") + what + " '" +
                                   std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s, std::size_t line_no) {
  int v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || s.empty()) {
    throw parse_error(line_no, "bad id '" + std::string(s) + "'");
  }
  return v;
}

// Value of "key=value" among the space-separated words of a header line.
std::optional<std::string> header_value(std::string_view line,
                                        std::string_view key) {
  std::istringstream is{std::string(line)};
  std::string word;
  const std::string prefix = std::string(key) + "=";
  while (is >> word) {
    if (word.rfind(prefix, 0) == 0) return word.substr(prefix.size());
  }
  return std::nullopt;
}

struct Rect {
  double x0, y0, x1, y1;
};

Rect rect_of(Point p, double w, double h, AnchorCorner c) {
  AnchoredLabel l;
  l.anchor = p;
  l.width = w;
  l.height = h;
  l.corner = c;
  const Point o = l.corner_offset();
  return {p.x + o.x, p.y + o.y, p.x + o.x + w, p.y + o.y + h};
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

// Accepted static labels on a uniform grid.
class StaticPlacer {
 public:
  explicit StaticPlacer(double cell) : cell_(cell > 0 ? cell : 1.0) {}

  // Places the candidate at its first free corner; returns false if none.
  bool place(const StaticCandidate& c, int id) {
    if (anchors_.count(key_of(c.point)) &&
        std::any_of(anchors_[key_of(c.point)].begin(),
                    anchors_[key_of(c.point)].end(),
                    [&](const Point& p) { return p == c.point; })) {
      return false;
    }
    for (const AnchorCorner corner : kAllCorners) {
      const Rect r = rect_of(c.point, c.width, c.height, corner);
      if (blocked(r)) continue;
      insert(r);
      anchors_[key_of(c.point)].push_back(c.point);
      AnchoredLabel l;
      l.id = id;
      l.anchor = c.point;
      l.width = c.width;
      l.height = c.height;
      l.corner = corner;
      l.name = c.name;
      l.weight = c.weight;
      labels_.push_back(std::move(l));
      return true;
    }
    return false;
  }

  std::vector<AnchoredLabel> take() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::int64_t cell(double v) const {
    return static_cast<std::int64_t>(std::floor(v / cell_));
  }
  static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^
           (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
  }
  std::uint64_t key_of(Point p) const { return key(cell(p.x), cell(p.y)); }

  bool blocked(const Rect& r) const {
    for (std::int64_t cx = cell(r.x0); cx <= cell(r.x1); ++cx) {
      for (std::int64_t cy = cell(r.y0); cy <= cell(r.y1); ++cy) {
        const auto it = grid_.find(key(cx, cy));
        if (it == grid_.end()) continue;
        for (const std::size_t k : it->second) {
          if (interiors_overlap(r, rects_[k])) return true;
        }
      }
    }
    return false;
  }

  void insert(const Rect& r) {
    const std::size_t k = rects_.size();
    rects_.push_back(r);
    for (std::int64_t cx = cell(r.x0); cx <= cell(r.x1); ++cx) {
      for (std::int64_t cy = cell(r.y0); cy <= cell(r.y1); ++cy) {
        grid_[key(cx, cy)].push_back(k);
      }
    }
  }

  double cell_;
  std::vector<Rect> rects_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid_;
  std::unordered_map<std::uint64_t, std::vector<Point>> anchors_;
  std::vector<AnchoredLabel> labels_;
};

}  // namespace

std::string write_instance(const InstanceFile& file) {
  if (file.units.find_first_of(" \t\n") != std::string::npos || file.units.empty()) {
    throw std::invalid_argument("units must be a single word");
  }
  std::string out = "#rotlabel-instance v1 units=" + file.units + "\n";
  out += "id,x,y,width,height,corner,name,weight\n";
  for (const AnchoredLabel& l : file.instance.labels()) {
    out += std::to_string(l.id) + ',' + shortest(l.anchor.x) + ',' +
           shortest(l.anchor.y) + ',' + shortest(l.width) + ',' +
           shortest(l.height) + ',' + std::string(corner_tag(l.corner)) + ',' +
           (l.name ? quote(*l.name) : "") + ',' +
           (l.weight ? shortest(*l.weight) : "") + '\n';
  }
  return out;
}

InstanceFile read_instance(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("#rotlabel-instance v1", 0) != 0) {
    throw parse_error(1, "expected '#rotlabel-instance v1' header");
  }
  InstanceFile file;
  file.units = header_value(lines[0], "units").value_or("map");
  if (lines.size() < 2 || lines[1] != "id,x,y,width,height,corner,name,weight") {
    throw parse_error(2, "expected column header");
  }
  std::vector<AnchoredLabel> labels;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    if (lines[k].empty()) continue;
    const auto f = split_csv(lines[k], line_no);
    if (f.size() != 8) throw parse_error(line_no, "expected 8 fields");
    AnchoredLabel l;
    l.id = parse_int(f[0], line_no);
    l.anchor.x = parse_double(f[1], line_no, "x");
    l.anchor.y = parse_double(f[2], line_no, "y");
    l.width = parse_double(f[3], line_no, "width");
    l.height = parse_double(f[4], line_no, "height");
    try {
      l.corner = parse_corner_tag(f[5]);
    } catch (const std::invalid_argument& e) {
      throw parse_error(line_no, e.what());
    }
    if (!f[6].empty()) l.name = f[6];
    if (!f[7].empty()) l.weight = parse_double(f[7], line_no, "weight");
    labels.push_back(std::move(l));
  }
  try {
    file.instance = Instance(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return file;
}

std::string write_labeling(const Instance& inst, const RotationLabeling& phi) {
  if (phi.size() != inst.size()) {
    throw std::invalid_argument("labeling does not match the instance");
  }
  std::string out = "#rotlabel-labeling v1 model=" + phi.model.model_tag() +
                    " conflicts=" + phi.model.conflict_tag();
  if (phi.unbounded_greedy_extension) out += " extension=unbounded-greedy";
  out += "\nid,ranges\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out += std::to_string(inst[i].id) + ',';
    const AngularSet& s = phi.active[i];
    if (s.is_full()) {
      out += "full";
    } else {
      bool first = true;
      for (const CircularInterval& a : s.intervals()) {
        if (!first) out += ';';
        first = false;
        out += digits12(a.start()) + ':' + digits12(a.end());
      }
    }
    out += '\n';
  }
  return out;
}

RotationLabeling read_labeling(const Instance& inst, std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("#rotlabel-labeling v1", 0) != 0) {
    throw parse_error(1, "expected '#rotlabel-labeling v1' header");
  }
  ModelConfig cfg;
  try {
    cfg = ModelConfig::parse(header_value(lines[0], "model").value_or(""),
                             header_value(lines[0], "conflicts").value_or("soft"));
  } catch (const std::invalid_argument& e) {
    throw parse_error(1, e.what());
  }
  RotationLabeling phi = RotationLabeling::empty(inst.size(), cfg);
  phi.unbounded_greedy_extension =
      header_value(lines[0], "extension") == std::optional<std::string>("unbounded-greedy");
  if (lines.size() < 2 || lines[1] != "id,ranges") {
    throw parse_error(2, "expected column header");
  }
  std::vector<bool> seen(inst.size(), false);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    if (lines[k].empty()) continue;
    const auto f = split_csv(lines[k], line_no);
    if (f.size() != 2) throw parse_error(line_no, "expected 2 fields");
    const auto idx = inst.index_of(parse_int(f[0], line_no));
    if (!idx) throw parse_error(line_no, "unknown label id " + f[0]);
    if (seen[*idx]) throw parse_error(line_no, "repeated label id " + f[0]);
    seen[*idx] = true;
    if (f[1] == "full") {
      phi.active[*idx] = AngularSet::full();
      continue;
    }
    std::vector<CircularInterval> arcs;
    std::string_view rest = f[1];
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string_view item = rest.substr(0, semi);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw parse_error(line_no, "range without ':'");
      }
      arcs.emplace_back(parse_double(item.substr(0, colon), line_no, "angle"),
                        parse_double(item.substr(colon + 1), line_no, "angle"));
      rest = semi == std::string_view::npos ? std::string_view{}
                                            : rest.substr(semi + 1);
    }
    phi.active[*idx] = AngularSet::from_intervals(arcs);
  }
  return phi;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<GeoRecord> read_geo_records(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "name,lat,lon,weight") {
    throw parse_error(1, "expected header 'name,lat,lon,weight'");
  }
  std::vector<GeoRecord> recs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    if (lines[k].empty()) continue;
    const auto f = split_csv(lines[k], line_no);
    if (f.size() != 4) throw parse_error(line_no, "expected 4 fields");
    GeoRecord r;
    r.name = f[0];
    r.latitude = parse_double(f[1], line_no, "latitude");
    r.longitude = parse_double(f[2], line_no, "longitude");
    r.weight = f[3].empty() ? 0.0 : parse_double(f[3], line_no, "weight");
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<Point> mercator_project(const std::vector<GeoRecord>& recs,
                                    double scale) {
  std::vector<Point> out;
  out.reserve(recs.size());
  for (const GeoRecord& r : recs) {
    if (!(std::abs(r.latitude) < kMaxMercatorLatitude) ||
        !(std::abs(r.longitude) <= 180.0)) {
      throw std::invalid_argument("coordinates outside the projection domain: " +
                                  r.name);
    }
    const double lambda = r.longitude * kPi / 180.0;
    const double phi = r.latitude * kPi / 180.0;
    out.push_back({kEarthRadiusKm * lambda * scale,
                   kEarthRadiusKm * std::log(std::tan(kPi / 4 + phi / 2)) * scale});
  }
  return out;
}

Instance prepare_static_labeling(const std::vector<StaticCandidate>& points) {
  double cell = 0.0;
  for (const auto& c : points) cell = std::max({cell, c.width, c.height});
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].weight.value_or(0.0) > points[b].weight.value_or(0.0);
  });
  StaticPlacer placer(cell);
  for (const std::size_t i : order) placer.place(points[i], static_cast<int>(i));
  auto labels = placer.take();
  std::sort(labels.begin(), labels.end(),
            [](const AnchoredLabel& a, const AnchoredLabel& b) { return a.id < b.id; });
  return Instance(std::move(labels));
}

namespace {

// UTF-8 code points; continuation bytes are not counted.
std::size_t name_length(std::string_view name) {
  return static_cast<std::size_t>(
      std::count_if(name.begin(), name.end(), [](char ch) {
        return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
      }));
}

}  // namespace

Instance ingest(const std::vector<GeoRecord>& recs, const IngestOptions& options) {
  const std::vector<Point> pts = mercator_project(recs, options.scale);
  std::vector<StaticCandidate> cands;
  cands.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    StaticCandidate c;
    c.point = pts[i];
    c.height = options.height;
    c.width = options.char_width * static_cast<double>(name_length(recs[i].name)) +
              options.padding;
    c.name = recs[i].name;
    c.weight = recs[i].weight;
    cands.push_back(std::move(c));
  }
  return prepare_static_labeling(cands);
}

GenerateOptions GenerateOptions::unit_squares(std::size_t n, double side,
                                              std::uint64_t seed) {
  GenerateOptions o;
  o.n = n;
  o.region_width = side;
  o.region_height = side;
  o.seed = seed;
  return o;
}

Instance generate_random(const GenerateOptions& o) {
  if (o.n < 1 || !(o.region_width > 0) || !(o.region_height > 0) ||
      !(o.min_width > 0) || !(o.min_height > 0) || o.max_width < o.min_width ||
      o.max_height < o.min_height) {
    throw std::invalid_argument("generate_random: degenerate ranges");
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> ux(0.0, o.region_width);
  std::uniform_real_distribution<double> uy(0.0, o.region_height);
  auto draw = [&](double lo, double hi) {
    return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  StaticPlacer placer(std::max(o.max_width, o.max_height));
  const std::size_t max_attempts = 1000 * o.n;
  for (std::size_t attempt = 0; placer.size() < o.n; ++attempt) {
    if (attempt == max_attempts) {
      throw std::invalid_argument("generate_random: region too crowded");
    }
    StaticCandidate c;
    c.point = {ux(rng), uy(rng)};
    c.width = draw(o.min_width, o.max_width);
    c.height = draw(o.min_height, o.max_height);
    placer.place(c, static_cast<int>(placer.size()));
  }
  return Instance(placer.take());
}

std::string svg_snapshot(const Instance& inst, const RotationLabeling& phi,
                         double alpha, const SvgOptions& options) {
  if (phi.size() != inst.size()) {
    throw std::invalid_argument("labeling does not match the instance");
  }
  const double reach = inst.max_diagonal();
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  if (!inst.empty()) {
    x0 = x1 = inst[0].anchor.x;
    y0 = y1 = inst[0].anchor.y;
    for (const auto& l : inst.labels()) {
      x0 = std::min(x0, l.anchor.x);
      x1 = std::max(x1, l.anchor.x);
      y0 = std::min(y0, l.anchor.y);
      y1 = std::max(y1, l.anchor.y);
    }
    x0 -= reach;
    y0 -= reach;
    x1 += reach;
    y1 += reach;
  }
  const double s = options.pixels_per_unit;
  const double m = options.margin;
  auto sx = [&](double x) { return digits12(m + (x - x0) * s); };
  auto sy = [&](double y) { return digits12(m + (y1 - y) * s); };
  const double a = normalize_angle(alpha);
  const double c = std::cos(a);
  const double sn = std::sin(a);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << digits12(2 * m + (x1 - x0) * s) << "\" height=\""
     << digits12(2 * m + (y1 - y0) * s) << "\">\n"
     << "<!-- rotation " << digits12(a) << " rad -->\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!phi.active[i].contains(a)) continue;
    const AnchoredLabel& l = inst[i];
    const Point o = l.corner_offset();
    const double local[4][2] = {{o.x, o.y},
                                {o.x + l.width, o.y},
                                {o.x + l.width, o.y + l.height},
                                {o.x, o.y + l.height}};
    os << "<polygon fill=\"#ffe9a8\" fill-opacity=\"0.8\" stroke=\"#333\" "
          "points=\"";
    for (int k = 0; k < 4; ++k) {
      const double px = l.anchor.x + c * local[k][0] - sn * local[k][1];
      const double py = l.anchor.y + sn * local[k][0] + c * local[k][1];
      os << (k ? " " : "") << sx(px) << ',' << sy(py);
    }
    os << '"';
    if (l.name) {
      std::string text;
      for (const char ch : *l.name) {
        switch (ch) {
          case '<': text += "&lt;"; break;
          case '>': text += "&gt;"; break;
          case '&': text += "&amp;"; break;
          default: text += ch;
        }
      }
      os << "><title>" << text << "</title></polygon>\n";
    } else {
      os << "/>\n";
    }
  }
  for (const auto& l : inst.labels()) {
    os << "<circle cx=\"" << sx(l.anchor.x) << "\" cy=\"" << sy(l.anchor.y)
       << "\" r=\"2.5\" fill=\"#c00\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rotlabel
