#include "bbcage/bigraph.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace bbcage {

namespace {

constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();

// Scratch buffers reused across roots by one thread.
struct BfsScratch {
  explicit BfsScratch(std::uint32_t n) : dist(n, kUnseen), parent(n, kUnseen) {
    queue.reserve(n);
  }
  std::vector<Vertex> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> queue;
};

// A non-tree edge (x, y) met while expanding x at depth d closes a cycle of
// length dist[x] + dist[y] + 1 >= 2d through the root, so the search stops
// once 2d reaches the bound.
std::uint32_t shortest_cycle_from(const BipartiteGraph& g, Vertex root, std::uint32_t bound,
                                  BfsScratch& s) {
  std::uint32_t best = bound;
  s.queue.clear();
  s.queue.push_back(root);
  s.dist[root] = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const Vertex x = s.queue[head];
    const std::uint64_t d = s.dist[x];
    if (2 * d >= best) break;
    for (Vertex y : g.neighbors(x)) {
      if (s.dist[y] == kUnseen) {
        s.dist[y] = static_cast<Vertex>(d + 1);
        s.parent[y] = x;
        s.queue.push_back(y);
      } else if (s.parent[x] != y) {
        const std::uint64_t len = d + s.dist[y] + 1;
        if (len < best) best = static_cast<std::uint32_t>(len);
      }
    }
  }
  for (Vertex v : s.queue) {
    s.dist[v] = kUnseen;
    s.parent[v] = kUnseen;
  }
  return best;
}

constexpr std::uint32_t kNoCycle = std::numeric_limits<std::uint32_t>::max();

Girth to_girth(std::uint32_t len) { return len == kNoCycle ? Girth::infinite() : Girth(len); }

} // namespace

Girth girth_through(const BipartiteGraph& g, Vertex root, Girth bound) {
  BfsScratch scratch(g.order());
  const std::uint32_t found = shortest_cycle_from(g, root, bound.value(), scratch);
  return found < bound.value() ? to_girth(found) : Girth::infinite();
}

Girth girth(const BipartiteGraph& g, Exec exec) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (exec == Exec::serial) {
    BfsScratch scratch(g.order());
    std::uint32_t best = kNoCycle;
    for (std::int64_t v = 0; v < n; ++v) {
      best = shortest_cycle_from(g, static_cast<Vertex>(v), best, scratch);
    }
    return to_girth(best);
  }

  // The shared bound only prunes; each root still reports an exact minimum
  // below whatever bound it saw, so the reduction is schedule-independent.
  std::atomic<std::uint32_t> shared{kNoCycle};
#pragma omp parallel
  {
    BfsScratch scratch(g.order());
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t v = 0; v < n; ++v) {
      const std::uint32_t found =
          shortest_cycle_from(g, static_cast<Vertex>(v), shared.load(std::memory_order_relaxed),
                              scratch);
      std::uint32_t cur = shared.load(std::memory_order_relaxed);
      while (found < cur && !shared.compare_exchange_weak(cur, found)) {
      }
    }
  }
  return to_girth(shared.load());
}

} // namespace bbcage
