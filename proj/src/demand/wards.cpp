#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <string>

#include "outpost/demand.hpp"
#include "outpost/error.hpp"

namespace outpost {

bool WardGeometry::contains(Point2 p) const {
  if (bbox) {
    const auto& b = *bbox;
    return p.x >= b[0] && p.x < b[2] && p.y >= b[1] && p.y < b[3];
  }
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

std::array<double, 4> WardGeometry::bounds() const {
  if (bbox) return *bbox;
  std::array<double, 4> b{std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity()};
  for (const auto& p : polygon) {
    b[0] = std::min(b[0], p.x);
    b[1] = std::min(b[1], p.y);
    b[2] = std::max(b[2], p.x);
    b[3] = std::max(b[3], p.y);
  }
  return b;
}

Point2 WardGeometry::centroid() const {
  if (bbox) return {((*bbox)[0] + (*bbox)[2]) / 2.0, ((*bbox)[1] + (*bbox)[3]) / 2.0};
  // Area-weighted polygon centroid; vertex mean for degenerate outlines.
  double area2 = 0.0, cx = 0.0, cy = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % n];
    const double cross = a.x * b.y - b.x * a.y;
    area2 += cross;
    cx += (a.x + b.x) * cross;
    cy += (a.y + b.y) * cross;
  }
  if (std::abs(area2) < 1e-12) {
    Point2 m;
    for (const auto& p : polygon) {
      m.x += p.x / static_cast<double>(n);
      m.y += p.y / static_cast<double>(n);
    }
    return m;
  }
  return {cx / (3.0 * area2), cy / (3.0 * area2)};
}

void WardProfile::validate() const {
  const std::string where = "ward " + std::to_string(ward);
  if (!(0.0 <= lambda_min && lambda_min <= lambda_peak && lambda_peak <= lambda_max)) {
    throw Error(ErrorKind::kInvalidArgument, where, where + ": need 0 <= lambda_min <= peak <= max");
  }
  if (!(0.0 <= delta_mean && delta_mean <= 1.0) || !(delta_sd >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, where, where + ": delta mean must lie in [0,1], sd >= 0");
  }
  if (!(day_pop >= 0.0) || !(night_pop >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, where, where + ": populations must be non-negative");
  }
  if (!geometry.bbox && geometry.polygon.size() < 3) {
    throw Error(ErrorKind::kInvalidArgument, where, where + ": needs a bbox or a polygon");
  }
}

double expected_demand(const WardProfile& w, Period period) {
  const double pop = period == Period::kDay ? w.day_pop : w.night_pop;
  return pop * w.lambda_mean() * w.delta_mean;
}

namespace {

int nearest_node(const RoadNetwork& net, Point2 p) {
  int best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const auto& node : net.nodes()) {
    const double dx = node.x - p.x;
    const double dy = node.y - p.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = node.id;
    }
  }
  return best;
}

}  // namespace

WardNodeMap build_ward_node_map(const RoadNetwork& net, std::span<const WardProfile> profiles,
                                double grid_spacing) {
  if (!(grid_spacing > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "grid_spacing", "grid spacing must be positive");
  }
  WardNodeMap map;
  map.weights.resize(profiles.size());
  map.grid_points.assign(profiles.size(), 0);
  for (std::size_t w = 0; w < profiles.size(); ++w) {
    const auto& geom = profiles[w].geometry;
    const auto b = geom.bounds();
    const long long i0 = static_cast<long long>(std::ceil(b[0] / grid_spacing));
    const long long i1 = static_cast<long long>(std::floor(b[2] / grid_spacing));
    const long long j0 = static_cast<long long>(std::ceil(b[1] / grid_spacing));
    const long long j1 = static_cast<long long>(std::floor(b[3] / grid_spacing));
    std::map<int, long long> counts;
    long long total = 0;
    for (long long i = i0; i <= i1; ++i) {
      for (long long j = j0; j <= j1; ++j) {
        const Point2 p{static_cast<double>(i) * grid_spacing, static_cast<double>(j) * grid_spacing};
        if (!geom.contains(p)) continue;
        ++counts[nearest_node(net, p)];
        ++total;
      }
    }
    map.grid_points[w] = static_cast<int>(total);
    if (total == 0) {
      map.weights[w].push_back({nearest_node(net, geom.centroid()), 1.0});
      continue;
    }
    for (const auto& [node, count] : counts) {
      map.weights[w].push_back({node, static_cast<double>(count) / static_cast<double>(total)});
    }
  }
  return map;
}

std::vector<WardProfile> parse_ward_profiles(const nlohmann::json& doc) {
  std::vector<WardProfile> out;
  try {
    if (!doc.is_array()) throw Error(ErrorKind::kParse, "document", "ward JSON must be an array");
    for (const auto& j : doc) {
      WardProfile w;
      w.ward = j.at("ward").get<int>();
      w.day_pop = j.at("day_pop").get<double>();
      w.night_pop = j.at("night_pop").get<double>();
      const auto& lam = j.at("lambda");
      if (!lam.is_array() || lam.size() != 3) {
        throw Error(ErrorKind::kParse, "ward " + std::to_string(w.ward),
                    "\"lambda\" must be [min, peak, max]");
      }
      w.lambda_min = lam[0].get<double>();
      w.lambda_peak = lam[1].get<double>();
      w.lambda_max = lam[2].get<double>();
      w.delta_mean = j.at("delta_mean").get<double>();
      w.delta_sd = j.at("delta_sd").get<double>();
      if (j.contains("bbox")) {
        const auto& b = j.at("bbox");
        if (!b.is_array() || b.size() != 4) {
          throw Error(ErrorKind::kParse, "ward " + std::to_string(w.ward),
                      "\"bbox\" must be [x0, y0, x1, y1]");
        }
        w.geometry.bbox = std::array<double, 4>{b[0].get<double>(), b[1].get<double>(),
                                                b[2].get<double>(), b[3].get<double>()};
      } else if (j.contains("polygon")) {
        for (const auto& p : j.at("polygon")) {
          w.geometry.polygon.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
      }
      w.validate();
      out.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, "document", std::string("malformed ward JSON: ") + ex.what());
  }
  return out;
}

std::vector<WardProfile> load_ward_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string(), "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, path.string(), std::string("invalid JSON: ") + ex.what());
  }
  return parse_ward_profiles(doc);
}

nlohmann::json to_json(std::span<const WardProfile> profiles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : profiles) {
    nlohmann::json j{{"ward", w.ward},
                     {"day_pop", w.day_pop},
                     {"night_pop", w.night_pop},
                     {"lambda", {w.lambda_min, w.lambda_peak, w.lambda_max}},
                     {"delta_mean", w.delta_mean},
                     {"delta_sd", w.delta_sd}};
    if (w.geometry.bbox) {
      const auto& b = *w.geometry.bbox;
      j["bbox"] = {b[0], b[1], b[2], b[3]};
    } else {
      nlohmann::json poly = nlohmann::json::array();
      for (const auto& p : w.geometry.polygon) poly.push_back({p.x, p.y});
      j["polygon"] = poly;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<WardProfile> synthetic_wards(const RoadNetwork& net, int rows, int cols,
                                         std::uint64_t seed) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const auto& n : net.nodes()) {
    x0 = std::min(x0, n.x);
    y0 = std::min(y0, n.y);
    x1 = std::max(x1, n.x);
    y1 = std::max(y1, n.y);
  }
  // Pad so nodes on the max edge fall inside the half-open boxes.
  x1 += 1.0;
  y1 += 1.0;
  Rng rng(seed);
  std::uniform_real_distribution<double> pop(5000.0, 60000.0);
  std::uniform_real_distribution<double> swing(0.6, 1.4);
  std::uniform_real_distribution<double> share(0.02, 0.25);
  std::vector<WardProfile> out;
  const double w = (x1 - x0) / cols;
  const double h = (y1 - y0) / rows;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      WardProfile p;
      p.ward = r * cols + c;
      p.night_pop = std::round(pop(rng));
      p.day_pop = std::round(p.night_pop * swing(rng));
      p.lambda_min = 0.23;
      p.lambda_peak = 0.40;
      p.lambda_max = 0.46;
      p.delta_mean = share(rng);
      p.delta_sd = 0.25 * p.delta_mean;
      p.geometry.bbox = std::array<double, 4>{x0 + c * w, y0 + r * h, x0 + (c + 1) * w,
                                              y0 + (r + 1) * h};
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace outpost
