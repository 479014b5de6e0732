#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "outpost/demand.hpp"
#include "outpost/error.hpp"

namespace outpost {

std::vector<double> sample_scenario(std::span<const WardProfile> profiles, const WardNodeMap& map,
                                    int node_count, Rng& rng, PopulationMode mode,
                                    std::vector<double>* ward_totals) {
  if (map.weights.size() != profiles.size()) {
    throw Error(ErrorKind::kInvalidArgument, "mapping", "ward map does not cover every ward");
  }
  std::vector<double> demand(node_count, 0.0);
  if (ward_totals) ward_totals->assign(profiles.size(), 0.0);
  for (std::size_t w = 0; w < profiles.size(); ++w) {
    const auto& p = profiles[w];
    double pop;
    switch (mode) {
      case PopulationMode::kDay: pop = p.day_pop; break;
      case PopulationMode::kNight: pop = p.night_pop; break;
      default: {
        const double lo = std::min(p.day_pop, p.night_pop);
        const double hi = std::max(p.day_pop, p.night_pop);
        pop = TriangleDistribution(lo, (p.day_pop + p.night_pop) / 2.0, hi)(rng);
      }
    }
    const double lambda = TriangleDistribution(p.lambda_min, p.lambda_peak, p.lambda_max)(rng);
    const double delta = TruncatedNormal(p.delta_mean, p.delta_sd, 0.0, 1.0)(rng);
    const double ward_demand = pop * lambda * delta;
    if (ward_totals) (*ward_totals)[w] = ward_demand;
    for (const auto& [node, weight] : map.weights[w]) demand[node] += ward_demand * weight;
  }
  return demand;
}

DemandScenarioSet::DemandScenarioSet(std::vector<std::vector<double>> scenarios, std::uint64_t seed)
    : scenarios_(std::move(scenarios)), seed_(seed) {
  if (scenarios_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "scenarios", "scenario set must not be empty");
  }
  node_count_ = static_cast<int>(scenarios_.front().size());
  for (std::size_t k = 0; k < scenarios_.size(); ++k) {
    if (static_cast<int>(scenarios_[k].size()) != node_count_) {
      throw Error(ErrorKind::kInvalidArgument, "scenario " + std::to_string(k),
                  "scenario " + std::to_string(k) + " has the wrong dimension");
    }
    for (std::size_t v = 0; v < scenarios_[k].size(); ++v) {
      const double d = scenarios_[k][v];
      if (!std::isfinite(d) || d < 0.0) {
        throw Error(ErrorKind::kInvalidArgument, "scenario " + std::to_string(k),
                    "scenario " + std::to_string(k) + " has invalid demand at node " +
                        std::to_string(v));
      }
    }
  }
}

double DemandScenarioSet::total(int k) const {
  return std::accumulate(scenarios_[k].begin(), scenarios_[k].end(), 0.0);
}

std::vector<double> DemandScenarioSet::mean() const {
  std::vector<double> m(node_count_, 0.0);
  for (const auto& s : scenarios_) {
    for (int v = 0; v < node_count_; ++v) m[v] += s[v];
  }
  for (double& x : m) x /= static_cast<double>(scenarios_.size());
  return m;
}

DemandScenarioSet DemandScenarioSet::subset(std::span<const int> ids) const {
  std::vector<std::vector<double>> picked;
  picked.reserve(ids.size());
  for (int k : ids) picked.push_back(scenarios_.at(k));
  DemandScenarioSet out(std::move(picked), seed_);
  out.parameters = parameters;
  return out;
}

DemandScenarioSet generate_scenario_set(std::span<const WardProfile> profiles,
                                        const WardNodeMap& map, int node_count, int count,
                                        std::uint64_t seed, PopulationMode mode) {
  if (count < 1) throw Error(ErrorKind::kInvalidArgument, "n", "scenario count must be >= 1");
  std::vector<std::vector<double>> scenarios(count);
  for (int k = 0; k < count; ++k) {
    Rng rng(seed + static_cast<std::uint64_t>(k));
    scenarios[k] = sample_scenario(profiles, map, node_count, rng, mode);
  }
  DemandScenarioSet set(std::move(scenarios), seed);
  set.parameters = "count=" + std::to_string(count) + " seed=" + std::to_string(seed);
  return set;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view cell, int line) {
  double v = 0.0;
  const auto* first = cell.data();
  const auto* last = cell.data() + cell.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\r')) --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line),
                "scenario CSV line " + std::to_string(line) + ": bad number '" +
                    std::string(cell) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    cells.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

}  // namespace

void write_scenarios_csv(const DemandScenarioSet& set, std::ostream& out) {
  out << "scenario";
  for (int v = 0; v < set.node_count(); ++v) out << ',' << v;
  out << '\n';
  for (int k = 0; k < set.size(); ++k) {
    out << k;
    for (double d : set.scenario(k)) out << ',' << format_double(d);
    out << '\n';
  }
}

void save_scenarios(const DemandScenarioSet& set, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, path.string(), "cannot write " + path.string());
  write_scenarios_csv(set, out);
}

DemandScenarioSet read_scenarios_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (line_no == 1 && cells[0].starts_with("scenario")) continue;
    if (cells.size() < 2) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no),
                  "scenario CSV line " + std::to_string(line_no) + " has no demand columns");
    }
    const double id = parse_double(cells[0], line_no);
    if (id != static_cast<double>(rows.size())) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no),
                  "scenario ids must run 0,1,2,... (line " + std::to_string(line_no) + ")");
    }
    std::vector<double> row;
    row.reserve(cells.size() - 1);
    for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(parse_double(cells[c], line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no),
                  "scenario CSV line " + std::to_string(line_no) + " has a different column count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::kParse, "document", "scenario CSV has no rows");
  return DemandScenarioSet(std::move(rows));
}

DemandScenarioSet load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string(), "cannot open " + path.string());
  return read_scenarios_csv(in);
}

}  // namespace outpost
