#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"

namespace gencon {

using json = nlohmann::ordered_json;

/// Parses {"order": n, "labels": [...]?, "edges": [[a,b],...]}.
/// Errors carry the offending location (byte offset or edge index).
Graph parse_graph(std::string_view text);
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);
/// Compact canonical text; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

/// Undirected DOT rendering. Terminals are drawn as double circles.
std::string export_dot(const Graph& g, const std::optional<TerminalSet>& s = std::nullopt);

TreeCertificate certificate_from_json(const json& j);
json certificate_to_json(const TreeCertificate& cert);
TreeCertificate parse_certificate(std::string_view text);

/// "0,2,5" -> sorted terminal set.
TerminalSet parse_terminal_list(const Graph& g, std::string_view csv);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace gencon
