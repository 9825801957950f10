#include "fragwl/graph_json.hpp"

#include <fstream>
#include <sstream>

namespace fragwl {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["node_labels"] = std::vector<Label>(g.labels().begin(), g.labels().end());
  if (g.has_edge_labels()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [uv, lab] : g.edge_label_map()) {
      labels[std::to_string(uv.first) + "-" + std::to_string(uv.second)] = lab;
    }
    j["edge_labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Label> labels(n, 0);
    if (j.contains("node_labels")) labels = j.at("node_labels").get<std::vector<Label>>();
    if (labels.size() != n) {
      throw GraphError("node_labels has " + std::to_string(labels.size()) + " entries, expected " +
                       std::to_string(n));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("each edge must be a [u, v] pair");
      edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
    }
    if (j.contains("edge_labels")) {
      EdgeLabelMap elabels;
      for (const auto& [key, value] : j.at("edge_labels").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw GraphError("edge label key must be \"u-v\": " + key);
        NodeId u = std::stoi(key.substr(0, dash));
        NodeId v = std::stoi(key.substr(dash + 1));
        elabels[{std::min(u, v), std::max(u, v)}] = value.get<Label>();
      }
      return build_graph(edges, std::move(labels), &elabels);
    }
    return build_graph(edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const GraphError*>(&e) != nullptr) throw;
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::vector<Graph> parse_graphs_json(const std::string& text) {
  std::vector<Graph> out;
  nlohmann::json whole = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const auto& item : whole) out.push_back(graph_from_json(item));
    } else {
      out.push_back(graph_from_json(whole));
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw GraphError("line " + std::to_string(lineno) + ": invalid JSON");
    out.push_back(graph_from_json(j));
  }
  return out;
}

std::vector<Graph> read_graphs_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graphs_json(buf.str());
}

}  // namespace fragwl
