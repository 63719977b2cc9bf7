// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "bbcage/bigraph.hpp"
#include "bbcage/bounds.hpp"
#include "bbcage/cages.hpp"
#include "bbcage/design.hpp"
#include "bbcage/formats.hpp"
#include "bbcage/geometry.hpp"

#include "graph_oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace bbcage;

namespace {

// Collects the first failed check of a criterion as its diagnostic.
struct Check {
  bool ok = true;
  std::string why;

  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (ok && !(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      fail(s.str());
    }
  }
  void that(bool cond, const std::string& what) {
    if (ok && !cond) fail(what);
  }
  void fail(std::string what) {
    ok = false;
    why = std::move(what);
  }
};

std::ostream& operator<<(std::ostream& os, const Girth& g) { return os << g.str(); }

void check_graph(Check& c, const BipartiteGraph& g, std::int64_t order, std::uint32_t n,
                 std::uint32_t m, Girth want_girth, const std::string& label) {
  c.eq<std::int64_t>(g.order(), order, label + " order");
  c.that(is_biregular(g, n, m),
         label + " degrees {" + std::to_string(n) + "," + std::to_string(m) + "}");
  c.eq(girth(g), want_girth, label + " girth");
}

void criterion1(Check& c) {
  c.eq(n0_girth6(3, 5), 30, "n0_girth6(3,5)");
  c.eq(refined_bound_3m6(5), 32, "refined_bound_3m6(5)");
}

void criterion2(Check& c) {
  for (std::uint32_t v : {7u, 9u, 13u, 15u, 19u, 21u, 25u, 27u}) {
    const auto g = incidence_graph(sts(v));
    const std::string label = "STS(" + std::to_string(v) + ")";
    const std::uint32_t m = (v - 1) / 2;
    c.eq<std::int64_t>(v + v * (v - 1) / 6, n0_girth6(3, m), label + " n0 identity");
    check_graph(c, g, v + v * (v - 1) / 6, 3, m, Girth(6), label);
    c.eq(excess(g.order(), CageParams::make(3, m, 6)), 0, label + " excess");
  }
}

void criterion3(Check& c) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto g = incidence_graph(affine_plane(q));
    const std::string label = "AG(2," + std::to_string(q) + ")";
    check_graph(c, g, 2 * q * q + q, q, q + 1, Girth(6), label);
    c.eq(static_cast<std::int64_t>(g.order()) - n0_girth6(q, q + 1), 0, label + " excess");
  }
}

void criterion4(Check& c) {
  const std::int64_t expected[] = {32, 66, 112, 170};
  int i = 0;
  for (std::int64_t m : {5, 8, 11, 14}) {
    const auto out = cage_3_m_6(m);
    const std::string label = "cage_3_m_6(" + std::to_string(m) + ")";
    c.eq((2 * m * m + 8 * m + 6) / 3, expected[i++], label + " formula");
    check_graph(c, out.graph, (2 * m * m + 8 * m + 6) / 3, 3, static_cast<std::uint32_t>(m),
                Girth(6), label);
  }
}

void criterion5(Check& c) {
  c.eq(moore_bound(3, 5, 8), 72, "moore_bound(3,5,8)");
  const auto q2 = elliptic_quadric_gq(2);
  c.eq(q2.points.size(), 27u, "Q-(5,2) points");
  c.eq(q2.lines.size(), 45u, "Q-(5,2) lines");
  check_graph(c, incidence_graph(q2), 72, 3, 5, Girth(8), "Q-(5,2)");

  c.eq(moore_bound(4, 10, 8), 392, "moore_bound(4,10,8)");
  const auto q3 = elliptic_quadric_gq(3);
  c.eq(q3.points.size(), 112u, "Q-(5,3) points");
  c.eq(q3.lines.size(), 280u, "Q-(5,3) lines");
  check_graph(c, incidence_graph(q3), 392, 4, 10, Girth(8), "Q-(5,3)");
}

void criterion6(Check& c) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto g = incidence_graph(symplectic_gq(q));
    const std::int64_t order = 2 * (q + 1) * (q * q + 1);
    check_graph(c, g, order, q + 1, q + 1, Girth(8), "W(" + std::to_string(q) + ")");
    c.eq(moore_bound(q + 1, q + 1, 8), order, "moore_bound for W(" + std::to_string(q) + ")");
  }
  c.eq(moore_bound(3, 3, 8), 30, "moore_bound(3,3,8)");
}

void peel_case(Check& c, std::uint32_t q, std::int64_t want_order, std::uint32_t n,
               std::uint32_t m, bool exact_girth) {
  const auto out = peel_moore_tree(incidence_graph(elliptic_quadric_gq(q)));
  const std::string label = "peeled Q-(5," + std::to_string(q) + ")";
  const std::int64_t formula = std::int64_t{n} * n * m + std::int64_t{m} * m * n;
  c.eq<std::int64_t>(out.graph.order(), want_order,
                     label + " order (n^2 m + m^2 n = " + std::to_string(formula) + ")");
  c.that(is_biregular(out.graph, n, m), label + " degrees");
  const Girth gi = girth(out.graph);
  if (exact_girth) {
    c.eq(gi, Girth(8), label + " girth");
  } else {
    c.that(gi >= Girth(8), label + " girth " + gi.str() + " < 8");
  }
}

void criterion7a(Check& c) { peel_case(c, 2, 48, 2, 4, true); }

// The stated target. With degrees {3,9} the parts satisfy 3a = 9b, so an
// order of 390 would need a = 292.5; the order formula gives 324.
void criterion7b(Check& c) { peel_case(c, 3, 390, 3, 9, false); }

void criterion8(Check& c) {
  for (std::int64_t q = 2; q <= 5; ++q) {
    const std::vector<std::tuple<int, std::int64_t, std::int64_t>> cases = {
        {3, q, q}, {4, q, q * q}, {6, q, q * q * q}, {8, q, q * q}, {8, q * q, q}};
    for (auto [n, s, t] : cases) {
      const auto [p, l] = gp_orders(n, s, t);
      c.eq(moore_bound(s + 1, t + 1, 2 * n), p + l,
           "(" + std::to_string(n) + ";" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
  }
}

// Two blocks sharing two points would close a 4-cycle.
bool blocks_meet_at_most_once(const std::vector<Block>& blocks) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!seen.emplace(std::min(b[i], b[j]), std::max(b[i], b[j])).second) return false;
      }
    }
  }
  return true;
}

void criterion9(Check& c) {
  std::vector<BipartiteGraph> constructed;
  for (std::uint32_t v = 7; v <= 99; ++v) {
    if (v % 6 != 1 && v % 6 != 3) continue;
    const Design d = sts(v);
    const auto report = verify_steiner(d);
    c.that(report.pass, "verify_steiner STS(" + std::to_string(v) + "): " + report.describe());
    c.that(blocks_meet_at_most_once(d.blocks), "STS(" + std::to_string(v) + ") blocks meet twice");
    constructed.push_back(incidence_graph(d));
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    constructed.push_back(incidence_graph(projective_plane(q)));
    constructed.push_back(incidence_graph(affine_plane(q)));
  }
  for (std::uint32_t q : {2u, 3u, 4u}) constructed.push_back(incidence_graph(symplectic_gq(q)));
  for (std::uint32_t q : {2u, 3u}) constructed.push_back(incidence_graph(elliptic_quadric_gq(q)));
  for (std::int64_t m = 4; m <= 14; ++m) constructed.push_back(cage_3_m_6(m).graph);

  for (const auto& g : constructed) {
    c.that(!has_four_cycle(g), "4-cycle in a constructed graph of order " +
                                   std::to_string(g.order()));
    const std::string text = to_graph6(plain(g));
    c.eq(to_graph6(from_graph6(text)), text, "graph6 round trip");
  }

  std::mt19937_64 rng(20190617);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_bipartite(rng, 24);
    const std::uint32_t oracle = testing::brute_force_girth(testing::adjacency(g));
    const Girth want = oracle == 0 ? Girth::infinite() : Girth(oracle);
    c.eq(girth(g), want, "girth vs brute force, trial " + std::to_string(trial));
  }
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Check&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "girth-6 bound values", criterion1},
      {"2", "STS incidence graphs are (3,(v-1)/2;6) Moore cages", criterion2},
      {"3", "affine planes are (q,q+1;6) Moore cages", criterion3},
      {"4", "(3,m;6) deletion construction for m = 2 mod 3", criterion4},
      {"5", "girth-8 Moore identity for Q-(5,2) and Q-(5,3)", criterion5},
      {"6", "W(q) regular girth-8 Moore cages", criterion6},
      {"7a", "peeling Q-(5,2) gives 48 vertices, degrees {2,4}, girth 8", criterion7a},
      {"7b", "peeling Q-(5,3) gives 390 vertices, degrees {3,9}, girth >= 8", criterion7b},
      {"8", "Moore bound equals generalized polygon order", criterion8},
      {"9", "property suites", criterion9},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-3s %s (%.1f ms)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, ms,
                c.ok ? "" : " -- ", c.why.c_str());
    failed += c.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
