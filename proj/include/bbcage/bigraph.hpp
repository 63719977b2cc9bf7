#pragma once

#include "bbcage/design.hpp"
#include "bbcage/exec.hpp"
#include "bbcage/geometry.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bbcage {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bipartite graph with parts A = [0, size_a) and B = [size_a, size_a + size_b).
/// Neighbor lists are sorted; every edge joins A to B.
class BipartiteGraph {
public:
  BipartiteGraph() = default;

  /// Edges are (u, w) pairs in global vertex numbering, in either orientation.
  /// Throws ParameterError on loops, intra-part edges, multi-edges or
  /// out-of-range endpoints.
  BipartiteGraph(std::uint32_t size_a, std::uint32_t size_b, std::span<const Edge> edges);

  std::uint32_t size_a() const noexcept { return size_a_; }
  std::uint32_t size_b() const noexcept { return size_b_; }
  std::uint32_t order() const noexcept { return size_a_ + size_b_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool in_a(Vertex v) const noexcept { return v < size_a_; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  /// Edges (u, w) with u < w, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const BipartiteGraph&) const = default;

private:
  std::uint32_t size_a_ = 0;
  std::uint32_t size_b_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Points form part A, blocks (lines) form part B.
BipartiteGraph incidence_graph(const Design& d);
BipartiteGraph incidence_graph(const IncidenceStructure& g);

/// Length of a shortest cycle; infinite for forests.
class Girth {
public:
  static constexpr Girth infinite() noexcept { return Girth(); }
  constexpr explicit Girth(std::uint32_t length) noexcept : length_(length) {}

  constexpr bool is_finite() const noexcept { return length_ != kInfinite; }
  constexpr std::uint32_t value() const noexcept { return length_; }
  std::string str() const { return is_finite() ? std::to_string(length_) : "INFINITE"; }

  constexpr auto operator<=>(const Girth&) const = default;

private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  constexpr Girth() noexcept = default;
  std::uint32_t length_ = kInfinite;
};

/// Minimum over roots of the shortest cycle found by a breadth-first search
/// from that root, each search truncated once it cannot beat the current
/// best. The parallel kernel distributes roots over OpenMP threads.
Girth girth(const BipartiteGraph& g, Exec exec = Exec::parallel);

/// Shortest cycle through root, or infinite; searches stop at cycles of
/// length >= bound.
Girth girth_through(const BipartiteGraph& g, Vertex root,
                    Girth bound = Girth::infinite());

/// Degree -> number of vertices with that degree, per part.
struct DegreeSets {
  std::map<std::uint32_t, std::uint32_t> a;
  std::map<std::uint32_t, std::uint32_t> b;
  bool operator==(const DegreeSets&) const = default;
};

DegreeSets degree_sets(const BipartiteGraph& g);

/// One part uniformly of degree n and the other uniformly of degree m,
/// in either assignment. Empty parts never qualify.
bool is_biregular(const BipartiteGraph& g, std::uint32_t n, std::uint32_t m);

/// Uniform degree of each part, if both parts are nonempty and uniform.
std::optional<std::pair<std::uint32_t, std::uint32_t>> part_degrees(const BipartiteGraph& g);

struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<Vertex> original; // new index -> old index
};

/// Subgraph induced by keep (any order, duplicates ignored); surviving
/// vertices are renumbered contiguously, A before B, preserving order.
InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> keep);

std::uint32_t component_count(const BipartiteGraph& g);

/// True iff some two vertices share two common neighbors.
bool has_four_cycle(const BipartiteGraph& g);

} // namespace bbcage
