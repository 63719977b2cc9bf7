#pragma once

#include "bbcage/bigraph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bbcage {

/// Undirected simple graph as stored in the text formats; edges are (u, w)
/// with u < w in lexicographic order.
struct PlainGraph {
  std::uint32_t n = 0;
  std::vector<Edge> edges;
  bool operator==(const PlainGraph&) const = default;
};

enum class GraphFormat { graph6, dimacs, edges };

GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

PlainGraph plain(const BipartiteGraph& g);

/// graph6, header-free, one line terminated by '\n'.
std::string to_graph6(const PlainGraph& g);
PlainGraph from_graph6(std::string_view text);

/// "p edge N M" followed by "e u v" lines, 1-based.
std::string to_dimacs(const PlainGraph& g);
PlainGraph from_dimacs(std::string_view text);

/// "u v" per line, 0-based. The vertex count is max index + 1.
std::string to_edge_list(const PlainGraph& g);
PlainGraph from_edge_list(std::string_view text);

std::string encode(const PlainGraph& g, GraphFormat f);
PlainGraph decode(std::string_view text, GraphFormat f);

struct PartSizes {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool operator==(const PartSizes&) const = default;
};

/// Rebuilds the bipartite view. Without explicit part sizes the split point
/// is inferred from a 2-colouring: the smallest s such that every component
/// has one colour class inside [0, s) and the other inside [s, n).
/// Throws FormatError if the graph is not bipartite or no such s exists.
BipartiteGraph to_bipartite(const PlainGraph& g, std::optional<PartSizes> parts = std::nullopt);

/// Sidecar carrying part sizes next to a graph file: "<path>.parts.json".
std::filesystem::path sidecar_path(const std::filesystem::path& graph_file);
std::string parts_json(const PartSizes& p);
PartSizes parse_parts_json(std::string_view text);

} // namespace bbcage
