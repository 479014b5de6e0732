#include <fstream>

#include "outpost/error.hpp"
#include "outpost/solver.hpp"

namespace outpost {

nlohmann::json to_json(const Solution& sol) {
  nlohmann::json j;
  j["outposts"] = std::vector<int>(sol.outposts.ids().begin(), sol.outposts.ids().end());
  j["objective"] = sol.objective;
  j["epigraph"] = sol.epigraph;
  j["binding_scenario"] = sol.binding_scenario;
  j["iterations"] = sol.meta.iterations;
  j["generated"] = sol.meta.generated;
  j["method"] = sol.meta.method;
  j["lower_bounds"] = sol.meta.lower_bounds;
  j["iteration_seconds"] = sol.meta.iteration_seconds;
  j["wall_seconds"] = sol.meta.wall_seconds;
  j["nodes_explored"] = sol.meta.nodes_explored;
  j["scenario_objectives"] = sol.scenario_objectives;
  return j;
}

void save_solution(const Solution& sol, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, path.string(), "cannot write " + path.string());
  // doubles are written in shortest round-trip form, so objectives re-read exactly
  out << to_json(sol).dump(2) << '\n';
}

std::vector<int> parse_outpost_ids(const nlohmann::json& doc) {
  try {
    const auto& arr = doc.is_object() ? doc.at("outposts") : doc;
    if (!arr.is_array()) {
      throw Error(ErrorKind::kParse, "outposts", "outposts must be an array of node ids");
    }
    std::vector<int> ids;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) {
        throw Error(ErrorKind::kParse, "outposts", "outpost ids must be integers");
      }
      ids.push_back(v.get<int>());
    }
    return ids;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, "outposts", std::string("malformed outposts JSON: ") + ex.what());
  }
}

OutpostSet load_outposts(const std::filesystem::path& path, int node_count) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string(), "cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, path.string(), std::string("invalid JSON: ") + ex.what());
  }
  return OutpostSet(parse_outpost_ids(doc), node_count);
}

}  // namespace outpost
