#ifndef FRAGWL_GRAPH_JSON_HPP
#define FRAGWL_GRAPH_JSON_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fragwl/graph.hpp"

namespace fragwl {

/// {"n": int, "edges": [[u,v],...], "node_labels": [...], "edge_labels": {"u-v": int}?}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads one graph per file, a JSON array of graphs, or JSON-lines.
std::vector<Graph> read_graphs_json(const std::filesystem::path& path);
std::vector<Graph> parse_graphs_json(const std::string& text);

}  // namespace fragwl

#endif  // FRAGWL_GRAPH_JSON_HPP
