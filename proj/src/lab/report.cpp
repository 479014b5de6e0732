#include <fstream>
#include <iomanip>

#include "outpost/error.hpp"
#include "outpost/lab.hpp"

namespace outpost {
namespace {

// Quote only when the label needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "kind,configuration,param,outposts,median_s,min_s,max_s,mean_s,worst_objective,"
         "binding_scenario,lost_demand,median_gain_pct,worst_gain_pct,seconds\n";
  out << std::setprecision(17);
  for (const auto& r : report.rows) {
    out << report.kind << ',' << csv_field(r.configuration) << ',' << r.param << ',';
    for (std::size_t i = 0; i < r.outposts.size(); ++i) out << (i ? " " : "") << r.outposts[i];
    out << ',' << r.mean_response.median << ',' << r.mean_response.min << ','
        << r.mean_response.max << ',' << r.mean_response.mean << ',' << r.worst_objective << ','
        << r.binding_scenario << ',' << r.lost_demand << ',' << r.median_gain_pct << ','
        << r.worst_gain_pct << ',' << r.seconds << '\n';
  }
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"configuration", r.configuration},
                    {"param", r.param},
                    {"outposts", r.outposts},
                    {"mean_response_s",
                     {{"median", r.mean_response.median},
                      {"min", r.mean_response.min},
                      {"max", r.mean_response.max},
                      {"mean", r.mean_response.mean}}},
                    {"worst_objective", r.worst_objective},
                    {"binding_scenario", r.binding_scenario},
                    {"lost_demand", r.lost_demand},
                    {"median_gain_pct", r.median_gain_pct},
                    {"worst_gain_pct", r.worst_gain_pct},
                    {"seconds", r.seconds}});
  }
  return {{"kind", report.kind}, {"parameters", report.parameters}, {"rows", rows}};
}

void save_report(const ExperimentReport& report, const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path) {
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw Error(ErrorKind::kInvalidArgument, csv_path.string(), "cannot write report");
    write_report_csv(report, out);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error(ErrorKind::kInvalidArgument, json_path.string(), "cannot write report");
    out << to_json(report).dump(2) << '\n';
  }
}

}  // namespace outpost
