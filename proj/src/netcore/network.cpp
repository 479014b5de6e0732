#include "outpost/network.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "outpost/error.hpp"

namespace outpost {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kDuplicateNode: return "duplicate_node";
    case ErrorKind::kNonContiguousIds: return "non_contiguous_ids";
    case ErrorKind::kDanglingEdge: return "dangling_edge";
    case ErrorKind::kNegativeCost: return "negative_cost";
    case ErrorKind::kDisconnected: return "disconnected_graph";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kCapacityExceeded: return "capacity_exceeded";
  }
  return "unknown";
}

namespace {

Digraph build_graph(int n, const std::vector<NetworkEdge>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& e : edges) arcs.push_back({e.tail, e.head});
  return Digraph(n, std::move(arcs));
}

}  // namespace

RoadNetwork::RoadNetwork(std::vector<NetworkNode> nodes, std::vector<NetworkEdge> edges)
    : edges_(std::move(edges)) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "nodes", "network has no nodes");

  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int id = nodes[i].id;
    if (id < 0 || id >= n) {
      throw Error(ErrorKind::kNonContiguousIds, "node " + std::to_string(id),
                  "node id " + std::to_string(id) + " outside contiguous range [0, " +
                      std::to_string(n) + ")");
    }
    if (slot[id] >= 0) {
      throw Error(ErrorKind::kDuplicateNode, "node " + std::to_string(id),
                  "duplicate node id " + std::to_string(id));
    }
    slot[id] = i;
  }
  nodes_.resize(n);
  for (int id = 0; id < n; ++id) nodes_[id] = nodes[slot[id]];

  base_costs_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    for (int end : {ed.tail, ed.head}) {
      if (end < 0 || end >= n) {
        throw Error(ErrorKind::kDanglingEdge, "edge " + std::to_string(e),
                    "edge " + std::to_string(e) + " references missing node " +
                        std::to_string(end));
      }
    }
    if (!std::isfinite(ed.base_cost) || ed.base_cost < 0.0) {
      throw Error(ErrorKind::kNegativeCost, "edge " + std::to_string(e),
                  "edge " + std::to_string(e) + " has invalid cost " +
                      std::to_string(ed.base_cost));
    }
    base_costs_.push_back(ed.base_cost);
  }

  graph_ = build_graph(n, edges_);
  if (const int bad = graph_.first_not_strongly_connected(); bad >= 0) {
    throw Error(ErrorKind::kDisconnected, "node " + std::to_string(bad),
                "graph is not strongly connected: node " + std::to_string(bad) +
                    " is not mutually reachable with node 0");
  }
}

RoadNetwork RoadNetwork::with_costs(std::span<const double> costs) const {
  if (static_cast<int>(costs.size()) != edge_count()) {
    throw Error(ErrorKind::kInvalidArgument, "costs",
                "cost vector has " + std::to_string(costs.size()) + " entries, expected " +
                    std::to_string(edge_count()));
  }
  auto edges = edges_;
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].base_cost = costs[e];
  return RoadNetwork(nodes_, std::move(edges));
}

RoadNetwork parse_network(const nlohmann::json& doc) {
  using nlohmann::json;
  try {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
      throw Error(ErrorKind::kParse, "document",
                  "network JSON must be an object with \"nodes\" and \"edges\"");
    }
    std::vector<NetworkNode> nodes;
    for (const auto& jn : doc.at("nodes")) {
      NetworkNode node;
      node.id = jn.at("id").get<int>();
      node.x = jn.value("x", 0.0);
      node.y = jn.value("y", 0.0);
      node.ward = jn.value("ward", -1);
      nodes.push_back(node);
    }
    const bool undirected = doc.value("undirected", false);
    std::vector<NetworkEdge> edges;
    for (const auto& je : doc.at("edges")) {
      NetworkEdge edge;
      edge.tail = je.at("u").get<int>();
      edge.head = je.at("v").get<int>();
      edge.base_cost = je.at("cost_s").get<double>();
      edges.push_back(edge);
      if (undirected) edges.push_back({edge.head, edge.tail, edge.base_cost});
    }
    return RoadNetwork(std::move(nodes), std::move(edges));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, "document", std::string("malformed network JSON: ") + ex.what());
  }
}

RoadNetwork parse_network(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, "document", std::string("invalid JSON: ") + ex.what());
  }
  return parse_network(doc);
}

RoadNetwork load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string(), "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_network(std::string_view(buf.str()));
}

nlohmann::json to_json(const RoadNetwork& net) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : net.nodes()) {
    nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"ward", n.ward}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : net.edges()) {
    edges.push_back({{"u", e.tail}, {"v", e.head}, {"cost_s", e.base_cost}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

void save_network(const RoadNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, path.string(), "cannot write " + path.string());
  out << to_json(net).dump(1) << '\n';
}

}  // namespace outpost
