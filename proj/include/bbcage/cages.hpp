#pragma once

#include "bbcage/bigraph.hpp"
#include "bbcage/bounds.hpp"
#include "bbcage/design.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bbcage {

/// Everything measured about a constructed graph plus what is claimed for it.
struct CageCertificate {
  std::string construction;
  CageParams params;
  std::int64_t order = 0;
  std::pair<std::uint32_t, std::uint32_t> part_sizes;
  std::pair<std::uint32_t, std::uint32_t> degrees; // uniform degree of part A, part B
  Girth girth = Girth::infinite();
  BoundName bound_name = BoundName::moore_bound;
  std::int64_t bound_value = 0;
  std::int64_t excess = 0;
  bool is_moore = false;
  bool is_known_cage = false;
  std::string notes;
};

/// Stable key order, integers only; an infinite girth is null.
std::string to_json(const CageCertificate& c);

struct CertifiedGraph {
  BipartiteGraph graph;
  CageCertificate certificate;
};

/// Measures degrees, girth and excess against expect. Throws
/// VerificationError when the graph is not (n, m)-biregular or its girth
/// differs from expect.girth. Never sets is_known_cage.
CageCertificate certify(const BipartiteGraph& g, const CageParams& expect);

/// Incidence graph of a Steiner system S(2, k, v), k >= 3, certified as a
/// (k, (v-1)/(k-1); 6) Moore cage. Throws ParameterError if d is not a
/// Steiner 2-design and IntegrityError if the certificate does not hold.
CertifiedGraph design_cage(const Design& d, std::string construction = "steiner_incidence");

/// Induced subgraph on V minus x and its neighbourhood; x must be in part A.
BipartiteGraph delete_point_neighborhood(const BipartiteGraph& g, Vertex x);

/// Smallest (3, m; 6) bipartite biregular graph, m > 3. For m = 0, 1 (mod 3)
/// the STS(2m+1) incidence graph; for m = 2 (mod 3) the STS(2m+3) incidence
/// graph with one point and its blocks deleted (point defaults to 0).
CertifiedGraph cage_3_m_6(std::int64_t m, std::optional<Vertex> delete_point = std::nullopt);

/// Breadth-first double tree of depth r - 1 hanging off both ends of f.
struct MooreTree {
  Edge root;
  std::vector<std::vector<Vertex>> levels_u; // levels_u[d]: depth-d vertices under root.first
  std::vector<std::vector<Vertex>> levels_v;
  std::vector<Vertex> internal; // depth < r - 1, sorted
  std::vector<Vertex> leaves;   // depth r - 1, sorted

  std::size_t vertex_count() const noexcept { return internal.size() + leaves.size(); }
};

/// Throws VerificationError naming the collision depth if the two trees
/// meet or close a cycle above the leaf level (i.e. girth < 2r).
MooreTree moore_tree(const BipartiteGraph& g, Edge f, std::uint32_t r);

/// Removes the internal vertices of the Moore tree at the least edge of a
/// bipartite biregular Moore (n+1, m+1; 2r)-graph with r even. The result
/// has degrees {n, m}, order n^(r/2) m^(r/2-1) + m^(r/2) n^(r/2-1) and girth
/// at least 2r.
CertifiedGraph peel_moore_tree(const BipartiteGraph& g);

} // namespace bbcage
