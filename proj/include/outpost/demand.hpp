#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "outpost/network.hpp"
#include "outpost/sampling.hpp"

namespace outpost {

enum class Period { kDay, kNight };

// Which population the scenario sampler draws from: the triangle between
// the day and night populations, or one period's population exactly.
enum class PopulationMode { kMixed, kDay, kNight };

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Ward outline in meters: either an axis-aligned box or a simple polygon.
struct WardGeometry {
  std::optional<std::array<double, 4>> bbox;  // x0, y0, x1, y1
  std::vector<Point2> polygon;

  // Half-open for boxes ([x0,x1) x [y0,y1)) so tiled boxes never share a
  // grid point; even-odd rule for polygons.
  bool contains(Point2 p) const;
  std::array<double, 4> bounds() const;
  Point2 centroid() const;
};

struct WardProfile {
  int ward = 0;
  double day_pop = 0.0;
  double night_pop = 0.0;
  double lambda_min = 0.0;   // ED visits / person / year
  double lambda_peak = 0.0;
  double lambda_max = 0.0;
  double delta_mean = 0.0;   // share of visits by the modelled mode
  double delta_sd = 0.0;
  WardGeometry geometry;

  void validate() const;
  double lambda_mean() const { return (lambda_min + lambda_peak + lambda_max) / 3.0; }
};

// Expected annual trips n_w^period * mean(lambda_w) * delta_w.
double expected_demand(const WardProfile& w, Period period);

// Per-ward distribution of demand over network nodes; each ward's weights
// sum to 1. Wards are listed in profile order.
struct WardNodeMap {
  std::vector<std::vector<std::pair<int, double>>> weights;
  std::vector<int> grid_points;  // interior grid points per ward (0 = centroid fallback)
};

constexpr double kDefaultGridSpacing = 25.0;

// Spreads each ward uniformly over a global grid (points at integer multiples
// of `grid_spacing`) and attaches every grid point to its Euclidean-nearest
// node (lowest id on ties). Wards without interior grid points attach fully
// to the node nearest their centroid.
WardNodeMap build_ward_node_map(const RoadNetwork& net, std::span<const WardProfile> profiles,
                                double grid_spacing = kDefaultGridSpacing);

// One demand vector: per ward population, lambda and delta draws, product
// spread over nodes by the map. Also returns per-ward sampled totals when
// `ward_totals` is given.
std::vector<double> sample_scenario(std::span<const WardProfile> profiles, const WardNodeMap& map,
                                    int node_count, Rng& rng,
                                    PopulationMode mode = PopulationMode::kMixed,
                                    std::vector<double>* ward_totals = nullptr);

class DemandScenarioSet {
 public:
  DemandScenarioSet() = default;
  DemandScenarioSet(std::vector<std::vector<double>> scenarios, std::uint64_t seed = 0);

  int size() const { return static_cast<int>(scenarios_.size()); }
  int node_count() const { return node_count_; }
  std::span<const double> scenario(int k) const { return scenarios_[k]; }
  const std::vector<std::vector<double>>& all() const { return scenarios_; }
  double total(int k) const;
  std::uint64_t seed() const { return seed_; }
  std::vector<double> mean() const;
  DemandScenarioSet subset(std::span<const int> ids) const;

  std::string parameters;  // free-form generation record

 private:
  std::vector<std::vector<double>> scenarios_;
  int node_count_ = 0;
  std::uint64_t seed_ = 0;
};

// Scenario k is drawn from an Rng seeded with seed + k.
DemandScenarioSet generate_scenario_set(std::span<const WardProfile> profiles,
                                        const WardNodeMap& map, int node_count, int count,
                                        std::uint64_t seed,
                                        PopulationMode mode = PopulationMode::kMixed);

// Ward profile JSON: [{"ward":1,"day_pop":..,"night_pop":..,
//   "lambda":[min,peak,max],"delta_mean":..,"delta_sd":..,
//   "bbox":[x0,y0,x1,y1]} | ...,"polygon":[[x,y],...]}]
std::vector<WardProfile> parse_ward_profiles(const nlohmann::json& doc);
std::vector<WardProfile> load_ward_profiles(const std::filesystem::path& path);
nlohmann::json to_json(std::span<const WardProfile> profiles);

// Scenario CSV: header "scenario,0,1,...,n-1", then one row per scenario
// (id, demand per node). Values use 17 significant digits so they re-read
// bit-exactly.
void write_scenarios_csv(const DemandScenarioSet& set, std::ostream& out);
void save_scenarios(const DemandScenarioSet& set, const std::filesystem::path& path);
DemandScenarioSet read_scenarios_csv(std::istream& in);
DemandScenarioSet load_scenarios(const std::filesystem::path& path);

// Synthetic ward layout for desk-scale instances: a rows x cols tiling of the
// network's bounding box with random populations, lambda support
// [0.23, 0.40, 0.46] and random delta means.
std::vector<WardProfile> synthetic_wards(const RoadNetwork& net, int rows, int cols,
                                         std::uint64_t seed);

}  // namespace outpost
