#pragma once

// Test-only oracles that share no code path with the library kernels.

#include "bbcage/bigraph.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace bbcage::testing {

/// Shortest cycle by depth-first enumeration of simple cycles whose smallest
/// vertex is the start. 0 means acyclic.
inline std::uint32_t brute_force_girth(const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint8_t> on_path(n, 0);

  struct Dfs {
    const std::vector<std::vector<std::uint32_t>>& adj;
    std::vector<std::uint8_t>& on_path;
    std::uint32_t& best;
    std::uint32_t start;
    void go(std::uint32_t v, std::uint32_t len) {
      if (len + 1 >= best) return;
      for (std::uint32_t w : adj[v]) {
        if (w == start && len >= 2) {
          best = len + 1;
        } else if (w > start && !on_path[w]) {
          on_path[w] = 1;
          go(w, len + 1);
          on_path[w] = 0;
        }
      }
    }
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    on_path[s] = 1;
    Dfs{adj, on_path, best, s}.go(s, 0);
    on_path[s] = 0;
  }
  return best == std::numeric_limits<std::uint32_t>::max() ? 0 : best;
}

inline std::vector<std::vector<std::uint32_t>> adjacency(const BipartiteGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return adj;
}

inline BipartiteGraph random_bipartite(std::mt19937_64& rng, std::uint32_t max_order) {
  std::uniform_int_distribution<std::uint32_t> size(1, max_order - 1);
  const std::uint32_t a = size(rng);
  const std::uint32_t b = std::uniform_int_distribution<std::uint32_t>(1, max_order - a)(rng);
  const double p = std::uniform_real_distribution<double>(0.08, 0.45)(rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < a; ++u) {
    for (std::uint32_t w = 0; w < b; ++w) {
      if (coin(rng)) edges.emplace_back(u, a + w);
    }
  }
  return BipartiteGraph(a, b, edges);
}

inline BipartiteGraph cycle(std::uint32_t len) {
  // Even cycle: A = even positions, B = odd positions.
  const std::uint32_t half = len / 2;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < half; ++i) {
    edges.emplace_back(i, half + i);
    edges.emplace_back((i + 1) % half, half + i);
  }
  return BipartiteGraph(half, half, edges);
}

} // namespace bbcage::testing
