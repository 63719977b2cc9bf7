#include "bbcage/cages.hpp"

#include "bbcage/checked.hpp"
#include "bbcage/error.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bbcage {

namespace {

std::string params_str(const CageParams& p) {
  std::ostringstream os;
  os << '(' << p.n << ',' << p.m << ';' << p.girth << ')';
  return os.str();
}

// Fills the measured fields; the caller decides whether a mismatch with
// params is fatal.
CageCertificate measure(const BipartiteGraph& g, const CageParams& params, Girth measured,
                        std::string construction) {
  CageCertificate c;
  c.construction = std::move(construction);
  c.params = params;
  c.order = g.order();
  c.part_sizes = {g.size_a(), g.size_b()};
  if (const auto degs = part_degrees(g)) c.degrees = *degs;
  c.girth = measured;
  const AppliedBound bound = applicable_bound(params);
  c.bound_name = bound.name;
  c.bound_value = bound.value;
  c.excess = excess(c.order, params);
  if (params.below_floor()) c.notes = "degree 2 is below the cage floor n >= 3; ";
  return c;
}

void append_note(CageCertificate& c, const std::string& note) {
  if (!c.notes.empty() && c.notes.back() != ' ') c.notes += "; ";
  c.notes += note;
}

} // namespace

std::string to_json(const CageCertificate& c) {
  nlohmann::ordered_json j;
  j["construction"] = c.construction;
  j["params"] = {{"n", c.params.n},
                 {"m", c.params.m},
                 {"girth", c.params.girth},
                 {"half_girth", c.params.half_girth}};
  j["order"] = c.order;
  j["part_sizes"] = {c.part_sizes.first, c.part_sizes.second};
  j["degrees"] = {c.degrees.first, c.degrees.second};
  j["girth"] = c.girth.is_finite() ? nlohmann::ordered_json(c.girth.value()) : nullptr;
  j["bound_name"] = std::string(to_string(c.bound_name));
  j["bound_value"] = c.bound_value;
  j["excess"] = c.excess;
  j["is_moore"] = c.is_moore;
  j["is_known_cage"] = c.is_known_cage;
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

CageCertificate certify(const BipartiteGraph& g, const CageParams& expect) {
  if (!is_biregular(g, static_cast<std::uint32_t>(expect.n), static_cast<std::uint32_t>(expect.m))) {
    std::ostringstream os;
    const DegreeSets ds = degree_sets(g);
    os << "degree mismatch: expected {" << expect.n << ',' << expect.m << "}, found A:{";
    for (auto [d, cnt] : ds.a) os << ' ' << d << 'x' << cnt;
    os << " } B:{";
    for (auto [d, cnt] : ds.b) os << ' ' << d << 'x' << cnt;
    os << " }";
    throw VerificationError(os.str());
  }
  const Girth measured = girth(g);
  if (measured != Girth(static_cast<std::uint32_t>(expect.girth))) {
    throw VerificationError("girth mismatch: expected " + std::to_string(expect.girth) +
                            ", measured " + measured.str());
  }
  CageCertificate c = measure(g, expect, measured, "certify");
  c.is_moore = c.excess == 0 && c.bound_name != BoundName::refined_bound_3m6;
  return c;
}

CertifiedGraph design_cage(const Design& d, std::string construction) {
  if (d.k < 3) throw ParameterError("design cage needs block size k >= 3, got " + std::to_string(d.k));
  const SteinerReport report = verify_steiner(d);
  if (!report.pass) throw ParameterError("not a Steiner 2-design: " + report.describe());

  const std::int64_t k = d.k;
  const std::int64_t r = (static_cast<std::int64_t>(d.v) - 1) / (k - 1);
  const auto params = CageParams::make(std::min(k, r), std::max(k, r), 6);
  BipartiteGraph g = incidence_graph(d);
  CageCertificate c;
  try {
    c = certify(g, params);
  } catch (const VerificationError& e) {
    throw IntegrityError("S(2," + std::to_string(k) + "," + std::to_string(d.v) +
                         ") incidence graph failed certification: " + e.what());
  }
  if (c.bound_name != BoundName::n0_girth6 || c.excess != 0) {
    throw IntegrityError("S(2,k,v) incidence graph does not attain n0_girth6" +
                         params_str(params));
  }
  c.construction = std::move(construction);
  c.is_known_cage = true;
  append_note(c, "point-block incidence graph of S(2," + std::to_string(k) + "," +
                     std::to_string(d.v) + ")");
  return {std::move(g), std::move(c)};
}

BipartiteGraph delete_point_neighborhood(const BipartiteGraph& g, Vertex x) {
  if (x >= g.order()) {
    throw ParameterError("vertex " + std::to_string(x) + " out of range for order " +
                         std::to_string(g.order()));
  }
  if (!g.in_a(x)) {
    throw ParameterError("vertex " + std::to_string(x) + " is a block vertex, expected a point");
  }
  std::vector<std::uint8_t> drop(g.order(), 0);
  drop[x] = 1;
  for (Vertex w : g.neighbors(x)) drop[w] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep).graph;
}

CertifiedGraph cage_3_m_6(std::int64_t m, std::optional<Vertex> delete_point) {
  if (m <= 3) throw ParameterError("(3,m;6) construction needs m > 3, got m=" + std::to_string(m));
  if (m % 3 != 2) {
    if (delete_point) {
      throw ParameterError("a deletion point applies only when m = 2 (mod 3)");
    }
    CertifiedGraph out = design_cage(sts(static_cast<std::uint32_t>(2 * m + 1)), "cage_3_m_6");
    append_note(out.certificate, "STS(" + std::to_string(2 * m + 1) + ")");
    return out;
  }

  const auto v = static_cast<std::uint32_t>(2 * m + 3);
  const BipartiteGraph host = incidence_graph(sts(v));
  const Vertex x = delete_point.value_or(0);
  BipartiteGraph g = delete_point_neighborhood(host, x);

  // Every surviving point loses exactly the block it shared with x.
  if (g.size_a() != v - 1 || g.size_b() != host.size_b() - static_cast<std::uint32_t>(m + 1)) {
    throw IntegrityError("deletion removed an unexpected number of vertices");
  }
  const auto params = CageParams::make(3, m, 6);
  CageCertificate c;
  try {
    c = certify(g, params);
  } catch (const VerificationError& e) {
    throw IntegrityError(std::string("deletion construction failed certification: ") + e.what());
  }
  if (c.order != refined_bound_3m6(m) || c.excess != 0) {
    throw IntegrityError("deletion construction order " + std::to_string(c.order) +
                         " differs from refined bound " + std::to_string(refined_bound_3m6(m)));
  }
  c.construction = "cage_3_m_6";
  c.is_moore = false;
  c.is_known_cage = true;
  append_note(c, "STS(" + std::to_string(v) + ") incidence graph minus point " + std::to_string(x) +
                     " and its " + std::to_string(m + 1) + " blocks; excess over n0_girth6 = " +
                     std::to_string(c.order - n0_girth6(3, m)));
  return {std::move(g), std::move(c)};
}

MooreTree moore_tree(const BipartiteGraph& g, Edge f, std::uint32_t r) {
  auto [u, v] = f;
  if (u >= g.order() || v >= g.order() ||
      !std::binary_search(g.neighbors(u).begin(), g.neighbors(u).end(), v)) {
    throw ParameterError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  if (r < 2) throw ParameterError("Moore tree needs r >= 2");

  constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.order(), kUnseen);
  std::vector<std::uint8_t> seen(g.order(), 0);
  MooreTree t;
  t.root = f;
  t.levels_u = {{u}};
  t.levels_v = {{v}};
  seen[u] = seen[v] = 1;
  parent[u] = v;
  parent[v] = u;

  // Level-synchronous over both trees so every labelled vertex has depth
  // <= d + 1 when depth d is expanded; any already-labelled non-parent
  // neighbour then closes a cycle of length <= 2(d + 1) + 1 < 2r.
  for (std::uint32_t d = 0; d + 1 < r; ++d) {
    for (auto* levels : {&t.levels_u, &t.levels_v}) {
      std::vector<Vertex> next;
      for (Vertex x : (*levels)[d]) {
        for (Vertex y : g.neighbors(x)) {
          if (y == parent[x]) continue;
          if (seen[y]) {
            throw VerificationError("Moore tree collision at depth " + std::to_string(d + 1) +
                                    " (vertex " + std::to_string(y) + "): girth < " +
                                    std::to_string(2 * r));
          }
          seen[y] = 1;
          parent[y] = x;
          next.push_back(y);
        }
      }
      levels->push_back(std::move(next));
    }
  }
  for (std::uint32_t d = 0; d < r; ++d) {
    auto& dest = d + 1 < r ? t.internal : t.leaves;
    dest.insert(dest.end(), t.levels_u[d].begin(), t.levels_u[d].end());
    dest.insert(dest.end(), t.levels_v[d].begin(), t.levels_v[d].end());
  }
  std::sort(t.internal.begin(), t.internal.end());
  std::sort(t.leaves.begin(), t.leaves.end());
  return t;
}

CertifiedGraph peel_moore_tree(const BipartiteGraph& host) {
  const auto degs = part_degrees(host);
  if (!degs) throw VerificationError("peel input is not bipartite biregular");
  const std::int64_t lo = std::min(degs->first, degs->second);
  const std::int64_t hi = std::max(degs->first, degs->second);
  if (lo < 3) throw ParameterError("peel input needs degrees >= 3, got " + std::to_string(lo));
  const Girth host_girth = girth(host);
  if (!host_girth.is_finite()) throw VerificationError("peel input is a forest");
  const auto r = static_cast<std::uint32_t>(host_girth.value() / 2);
  if (r % 2 != 0) {
    throw ParameterError("peeling needs even half-girth, input has girth " + host_girth.str());
  }
  const std::int64_t bound = moore_bound(lo, hi, host_girth.value());
  if (host.order() != bound) {
    throw VerificationError("peel input is not a Moore graph: order " +
                            std::to_string(host.order()) + " vs Moore bound " +
                            std::to_string(bound) + " for (" + std::to_string(lo) + "," +
                            std::to_string(hi) + ";" + host_girth.str() + ")");
  }

  const Edge f = host.edges().front();
  const MooreTree tree = moore_tree(host, f, r);
  std::vector<std::uint8_t> internal(host.order(), 0);
  for (Vertex x : tree.internal) internal[x] = 1;
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < host.order(); ++x) {
    if (!internal[x]) keep.push_back(x);
  }
  BipartiteGraph g = induced_subgraph(host, keep).graph;

  const std::int64_t n = lo - 1;
  const std::int64_t m = hi - 1;
  std::int64_t expected = 0;
  {
    using checked::add;
    using checked::mul;
    std::int64_t nh = 1, mh = 1;
    for (std::uint32_t i = 0; i + 1 < r / 2; ++i) {
      nh = mul(nh, n);
      mh = mul(mh, m);
    }
    expected = add(mul(mul(nh, n), mh), mul(mul(mh, m), nh));
  }
  if (!is_biregular(g, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m))) {
    throw IntegrityError("peeled graph is not (" + std::to_string(n) + "," + std::to_string(m) +
                         ")-biregular");
  }
  if (g.order() != expected || tree.leaves.size() != static_cast<std::size_t>(expected)) {
    throw IntegrityError("peeled order " + std::to_string(g.order()) + " differs from " +
                         std::to_string(expected));
  }
  const Girth measured = girth(g);
  if (measured < Girth(2 * r)) {
    throw IntegrityError("peeled graph has girth " + measured.str() + " < " + std::to_string(2 * r));
  }

  const auto params = CageParams::make(n, m, 2 * r);
  CageCertificate c = measure(g, params, measured, "peel_moore_tree");
  c.is_moore = false;
  c.is_known_cage = false;
  append_note(c, "Moore tree at edge (" + std::to_string(f.first) + "," + std::to_string(f.second) +
                     ") removed from a Moore (" + std::to_string(lo) + "," + std::to_string(hi) +
                     ";" + host_girth.str() + ")-graph; components: " +
                     std::to_string(component_count(g)) + "; measured girth " + measured.str() +
                     "; minimality not established");
  return {std::move(g), std::move(c)};
}

} // namespace bbcage
