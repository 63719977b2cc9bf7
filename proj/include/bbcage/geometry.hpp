#pragma once

#include "bbcage/design.hpp"
#include "bbcage/exec.hpp"
#include "bbcage/field.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace bbcage {

/// Point-line geometry of order (s, t): every line carries s+1 points and
/// every point lies on t+1 lines. Lines are sorted point-index lists and
/// the line list is sorted.
struct IncidenceStructure {
  std::vector<std::vector<Element>> points; // coordinates of each point
  std::vector<Block> lines;
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  std::size_t point_count() const noexcept { return points.size(); }
  std::size_t line_count() const noexcept { return lines.size(); }
};

/// Checks uniform line size s+1, uniform point degree t+1, and that two
/// points share at most one line. Throws IntegrityError on violation.
void check_incidence_structure(const IncidenceStructure& g);

/// PG(2, q). Points are canonical vectors of GF(q)^3 (last nonzero
/// coordinate 1) in lexicographic order.
IncidenceStructure projective_plane(std::uint32_t q);

/// AG(2, q). Point (x, y) has index x*q + y.
IncidenceStructure affine_plane(std::uint32_t q);

/// W(q): all points of PG(3, q) with the lines totally isotropic under
/// x1y2 - x2y1 + x3y4 - x4y3.
IncidenceStructure symplectic_gq(std::uint32_t q, Exec exec = Exec::parallel);

/// Q-(5, q): the elliptic quadric x0x1 + x2x3 + f(x4, x5) = 0 in PG(5, q),
/// f the homogenised least monic irreducible quadratic, with its totally
/// singular lines.
IncidenceStructure elliptic_quadric_gq(std::uint32_t q, Exec exec = Exec::parallel);

/// Coefficients (c0, c1, c2) of the least irreducible c0 + c1 T + c2 T^2.
std::array<Element, 3> least_irreducible_quadratic(const Field& f);

/// The structure viewed as a 2-design (block size s+1). Only meaningful
/// for linear spaces such as projective and affine planes.
Design as_design(const IncidenceStructure& g);

/// (|P|, |L|) of a generalized n-gon of order (s, t), n in {3, 4, 6, 8}.
std::pair<std::int64_t, std::int64_t> gp_orders(int n, std::int64_t s, std::int64_t t);

/// Same text format as designs, with k = s+1.
void write_incidence_structure(std::ostream& out, const IncidenceStructure& g);

} // namespace bbcage
