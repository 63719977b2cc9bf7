#include "bbcage/geometry.hpp"

#include "bbcage/checked.hpp"
#include "bbcage/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>


namespace bbcage {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

using Vec = std::vector<Element>;

// Canonical points of PG(dim-1, q) in lexicographic coordinate order.
class ProjectiveSpace {
public:
  ProjectiveSpace(const Field& f, std::uint32_t dim) : f_(f), dim_(dim) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < dim; ++i) total *= f.order();
    index_of_code_.assign(total, kNone);
    Vec v(dim);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      for (std::uint32_t i = dim; i-- > 0;) {
        v[i] = static_cast<Element>(rest % f.order());
        rest /= f.order();
      }
      if (last_nonzero(v) == 1) {
        index_of_code_[code] = static_cast<std::uint32_t>(points_.size());
        points_.push_back(v);
      }
    }
  }

  const Field& field() const noexcept { return f_; }
  const std::vector<Vec>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::uint32_t index_of(Vec v) const {
    const Element lead = last_nonzero(v);
    if (lead == 0) throw IntegrityError("zero vector has no projective point");
    const Element s = f_.inv(lead);
    std::uint64_t code = 0;
    for (Element& x : v) {
      x = f_.mul(x, s);
      code = code * f_.order() + x;
    }
    return index_of_code_[code];
  }

  // Sorted indices of the q+1 points on the line through points i and j.
  Block line_through(std::uint32_t i, std::uint32_t j) const {
    const Vec& x = points_[i];
    const Vec& y = points_[j];
    Block out;
    out.reserve(f_.order() + 1);
    out.push_back(j);
    Vec w(dim_);
    for (Element c = 0; c < f_.order(); ++c) {
      for (std::uint32_t d = 0; d < dim_; ++d) w[d] = f_.add(x[d], f_.mul(c, y[d]));
      out.push_back(index_of(w));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  static Element last_nonzero(const Vec& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] != 0) return v[i];
    }
    return 0;
  }

  const Field& f_;
  std::uint32_t dim_;
  std::vector<Vec> points_;
  std::vector<std::uint32_t> index_of_code_;
};

// Lines spanned by pairs of the selected points whose every point is also
// selected. selected[i] is the structure index of space point i, or kNone.
// A line is emitted only from its two smallest members, so no dedup pass
// is needed and the output is schedule-independent after sorting.
std::vector<Block> span_lines(const ProjectiveSpace& space,
                              const std::vector<std::uint32_t>& selected, Exec exec) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    if (selected[i] != kNone) members.push_back(i);
  }
  const auto n = static_cast<std::int64_t>(members.size());

  const auto scan = [&](std::int64_t a, std::vector<Block>& out) {
    const std::uint32_t i = members[a];
    for (std::int64_t b = a + 1; b < n; ++b) {
      const std::uint32_t j = members[b];
      Block line = space.line_through(i, j);
      if (line[0] != i || line[1] != j) continue;
      bool inside = true;
      for (std::uint32_t& p : line) {
        p = selected[p];
        if (p == kNone) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back(std::move(line));
    }
  };

  std::vector<Block> lines;
  if (exec == Exec::serial) {
    for (std::int64_t a = 0; a < n; ++a) scan(a, lines);
  } else {
#pragma omp parallel
    {
      std::vector<Block> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::int64_t a = 0; a < n; ++a) scan(a, local);
#pragma omp critical(bbcage_span_lines)
      lines.insert(lines.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
  }
  for (Block& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  return lines;
}

Field field_for(std::uint32_t q) {
  if (!is_prime_power(q)) throw ParameterError(std::to_string(q) + " is not a prime power");
  return make_field_of_order(q);
}

} // namespace

void check_incidence_structure(const IncidenceStructure& g) {
  std::vector<std::uint32_t> degree(g.points.size(), 0);
  for (const Block& line : g.lines) {
    if (line.size() != g.s + 1) {
      throw IntegrityError("line with " + std::to_string(line.size()) + " points, expected " +
                           std::to_string(g.s + 1));
    }
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw IntegrityError("line repeats a point");
    }
    for (std::uint32_t p : line) {
      if (p >= g.points.size()) throw IntegrityError("line references a missing point");
      ++degree[p];
    }
  }
  for (std::size_t p = 0; p < degree.size(); ++p) {
    if (degree[p] != g.t + 1) {
      throw IntegrityError("point " + std::to_string(p) + " lies on " +
                           std::to_string(degree[p]) + " lines, expected " +
                           std::to_string(g.t + 1));
    }
  }
  const std::size_t v = g.points.size();
  std::vector<std::uint8_t> seen(v * v, 0);
  for (const Block& line : g.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto& cell = seen[line[i] * v + line[j]];
        if (cell) {
          throw IntegrityError("points " + std::to_string(line[i]) + " and " +
                               std::to_string(line[j]) + " share two lines");
        }
        cell = 1;
      }
    }
  }
}

IncidenceStructure projective_plane(std::uint32_t q) {
  const Field f = field_for(q);
  const ProjectiveSpace space(f, 3);
  IncidenceStructure g;
  g.points = space.points();
  g.s = q;
  g.t = q;
  // Lines are the kernels of the dual points.
  for (const Vec& a : space.points()) {
    Block line;
    for (std::uint32_t i = 0; i < space.size(); ++i) {
      const Vec& x = space.points()[i];
      Element dot = 0;
      for (int d = 0; d < 3; ++d) dot = f.add(dot, f.mul(a[d], x[d]));
      if (dot == 0) line.push_back(i);
    }
    g.lines.push_back(std::move(line));
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

IncidenceStructure affine_plane(std::uint32_t q) {
  const Field f = field_for(q);
  IncidenceStructure g;
  g.s = q - 1;
  g.t = q;
  for (Element x = 0; x < q; ++x) {
    for (Element y = 0; y < q; ++y) g.points.push_back({x, y});
  }
  const auto idx = [q](Element x, Element y) { return x * q + y; };
  for (Element slope = 0; slope < q; ++slope) {
    for (Element c = 0; c < q; ++c) {
      Block line;
      for (Element x = 0; x < q; ++x) line.push_back(idx(x, f.add(f.mul(slope, x), c)));
      std::sort(line.begin(), line.end());
      g.lines.push_back(std::move(line));
    }
  }
  for (Element c = 0; c < q; ++c) {
    Block line;
    for (Element y = 0; y < q; ++y) line.push_back(idx(c, y));
    g.lines.push_back(std::move(line));
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

IncidenceStructure symplectic_gq(std::uint32_t q, Exec exec) {
  const Field f = field_for(q);
  const ProjectiveSpace space(f, 4);
  const auto form = [&f](const Vec& x, const Vec& y) {
    Element r = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    return f.add(r, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
  };

  // Every point of PG(3, q) is a point of W(q); restrict candidate lines to
  // those spanned by orthogonal pairs.
  std::vector<std::uint32_t> selected(space.size());
  for (std::uint32_t i = 0; i < space.size(); ++i) selected[i] = i;

  IncidenceStructure g;
  g.points = space.points();
  g.s = q;
  g.t = q;
  for (Block& line : span_lines(space, selected, exec)) {
    if (form(space.points()[line[0]], space.points()[line[1]]) == 0) {
      g.lines.push_back(std::move(line));
    }
  }
  return g;
}

std::array<Element, 3> least_irreducible_quadratic(const Field& f) {
  const std::uint32_t q = f.order();
  for (Element c0 = 0; c0 < q; ++c0) {
    for (Element c1 = 0; c1 < q; ++c1) {
      bool has_root = false;
      for (Element x = 0; x < q && !has_root; ++x) {
        has_root = f.add(f.add(c0, f.mul(c1, x)), f.mul(x, x)) == 0;
      }
      if (!has_root) return {c0, c1, 1};
    }
  }
  throw IntegrityError("no irreducible quadratic over GF(" + std::to_string(q) + ")");
}

IncidenceStructure elliptic_quadric_gq(std::uint32_t q, Exec exec) {
  const Field f = field_for(q);
  const ProjectiveSpace space(f, 6);
  const auto [c0, c1, c2] = least_irreducible_quadratic(f);
  const auto quadric = [&](const Vec& x) {
    Element r = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
    r = f.add(r, f.mul(c0, f.mul(x[4], x[4])));
    r = f.add(r, f.mul(c1, f.mul(x[4], x[5])));
    return f.add(r, f.mul(c2, f.mul(x[5], x[5])));
  };

  IncidenceStructure g;
  g.s = q;
  g.t = q * q;
  std::vector<std::uint32_t> selected(space.size(), kNone);
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    if (quadric(space.points()[i]) == 0) {
      selected[i] = static_cast<std::uint32_t>(g.points.size());
      g.points.push_back(space.points()[i]);
    }
  }
  g.lines = span_lines(space, selected, exec);
  return g;
}

Design as_design(const IncidenceStructure& g) {
  return make_design(static_cast<std::uint32_t>(g.points.size()), g.s + 1, g.lines);
}

std::pair<std::int64_t, std::int64_t> gp_orders(int n, std::int64_t s, std::int64_t t) {
  using checked::add;
  using checked::mul;
  if (s < 1 || t < 1) throw ParameterError("generalized polygon order needs s, t >= 1");
  const std::int64_t st = mul(s, t);
  const std::int64_t st2 = mul(st, st);
  switch (n) {
  case 3:
    return {add(add(mul(s, s), s), 1), add(add(mul(t, t), t), 1)};
  case 4:
    return {mul(1 + s, add(1, st)), mul(1 + t, add(1, st))};
  case 6: {
    const std::int64_t tail = add(add(1, st), st2);
    return {mul(1 + s, tail), mul(1 + t, tail)};
  }
  case 8: {
    const std::int64_t tail = mul(add(1, st), add(1, st2));
    return {mul(1 + s, tail), mul(1 + t, tail)};
  }
  default:
    throw ParameterError("generalized " + std::to_string(n) +
                         "-gons do not exist: finite generalized n-gons exist only for "
                         "n = 3, 4, 6, 8 (Feit-Higman)");
  }
}

void write_incidence_structure(std::ostream& out, const IncidenceStructure& g) {
  out << g.points.size() << ' ' << g.lines.size() << ' ' << g.s + 1 << '\n';
  for (const Block& line : g.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << ' ';
      out << line[i];
    }
    out << '\n';
  }
}

} // namespace bbcage
