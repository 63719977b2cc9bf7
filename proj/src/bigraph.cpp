#include "bbcage/bigraph.hpp"

#include "bbcage/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bbcage {

BipartiteGraph::BipartiteGraph(std::uint32_t size_a, std::uint32_t size_b,
                               std::span<const Edge> edges)
    : size_a_(size_a), size_b_(size_b), edges_(edges.size()),
      adj_(static_cast<std::size_t>(size_a) + size_b) {
  const std::uint32_t n = size_a + size_b;
  for (auto [u, w] : edges) {
    if (u >= n || w >= n) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(w) +
                           ") out of range for " + std::to_string(n) + " vertices");
    }
    if (in_a(u) == in_a(w)) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(w) +
                           ") lies inside one part");
    }
    adj_[u].push_back(w);
    adj_[w].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ParameterError("multi-edge in bipartite graph");
    }
  }
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex w : adj_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

namespace {

template <class Lines>
BipartiteGraph incidence_of(std::uint32_t points, const Lines& lines) {
  std::vector<Edge> edges;
  const auto b = static_cast<std::uint32_t>(lines.size());
  for (std::uint32_t i = 0; i < b; ++i) {
    for (std::uint32_t p : lines[i]) edges.emplace_back(p, points + i);
  }
  return BipartiteGraph(points, b, edges);
}

} // namespace

BipartiteGraph incidence_graph(const Design& d) { return incidence_of(d.v, d.blocks); }

BipartiteGraph incidence_graph(const IncidenceStructure& g) {
  return incidence_of(static_cast<std::uint32_t>(g.points.size()), g.lines);
}

DegreeSets degree_sets(const BipartiteGraph& g) {
  DegreeSets out;
  for (Vertex v = 0; v < g.order(); ++v) {
    ++(g.in_a(v) ? out.a : out.b)[g.degree(v)];
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> part_degrees(const BipartiteGraph& g) {
  const DegreeSets ds = degree_sets(g);
  if (ds.a.size() != 1 || ds.b.size() != 1) return std::nullopt;
  return std::make_pair(ds.a.begin()->first, ds.b.begin()->first);
}

bool is_biregular(const BipartiteGraph& g, std::uint32_t n, std::uint32_t m) {
  const auto degs = part_degrees(g);
  if (!degs) return false;
  return *degs == std::make_pair(n, m) || *degs == std::make_pair(m, n);
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> keep) {
  std::vector<std::uint8_t> kept(g.order(), 0);
  for (Vertex v : keep) {
    if (v >= g.order()) {
      throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(g.order()));
    }
    kept[v] = 1;
  }
  InducedSubgraph out;
  std::vector<Vertex> renumber(g.order(), 0);
  std::uint32_t new_a = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!kept[v]) continue;
    renumber[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
    if (g.in_a(v)) ++new_a;
  }
  std::vector<Edge> edges;
  for (auto [u, w] : g.edges()) {
    if (kept[u] && kept[w]) edges.emplace_back(renumber[u], renumber[w]);
  }
  const auto total = static_cast<std::uint32_t>(out.original.size());
  out.graph = BipartiteGraph(new_a, total - new_a, edges);
  return out;
}

std::uint32_t component_count(const BipartiteGraph& g) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Vertex> stack;
  std::uint32_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool has_four_cycle(const BipartiteGraph& g) {
  // Two A-vertices with two common neighbors close a 4-cycle; every
  // 4-cycle has two A-vertices, so scanning pairs of B-neighbors suffices.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.size_b()) * g.size_b(), 0);
  for (Vertex a = 0; a < g.size_a(); ++a) {
    const auto nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto& cell = seen[static_cast<std::size_t>(nb[i] - g.size_a()) * g.size_b() +
                          (nb[j] - g.size_a())];
        if (cell) return true;
        cell = 1;
      }
    }
  }
  return false;
}

} // namespace bbcage
