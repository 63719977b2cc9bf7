#include "bbcage/bounds.hpp"

#include "bbcage/checked.hpp"
#include "bbcage/error.hpp"

#include <string>
#include <utility>

namespace bbcage {

CageParams CageParams::make(std::int64_t n, std::int64_t m, std::int64_t girth) {
  if (n < 2 || n > m) {
    throw ParameterError("cage degrees need 2 <= n <= m, got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m));
  }
  if (girth < 4 || girth % 2 != 0) {
    throw ParameterError("bipartite girth must be even and >= 4, got " + std::to_string(girth));
  }
  return CageParams{n, m, girth, girth / 2};
}

namespace {

// 1 + a + ab + aba + ... with r terms, a = first - 1, b = second - 1.
std::int64_t branch(std::int64_t first, std::int64_t second, std::int64_t r) {
  std::int64_t sum = 0;
  std::int64_t term = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    sum = checked::add(sum, term);
    if (i + 1 < r) term = checked::mul(term, (i % 2 == 0 ? first : second) - 1);
  }
  return sum;
}

} // namespace

std::int64_t moore_bound(std::int64_t n, std::int64_t m, std::int64_t girth) {
  if (n < 2 || m < 2) throw ParameterError("Moore bound needs degrees >= 2");
  if (girth < 4 || girth % 2 != 0) {
    throw ParameterError("Moore bound needs even girth >= 4, got " + std::to_string(girth));
  }
  const std::int64_t r = girth / 2;
  return checked::add(branch(m, n, r), branch(n, m, r));
}

std::int64_t moore_bound(const CageParams& p) { return moore_bound(p.n, p.m, p.girth); }

std::int64_t n0_girth6(std::int64_t n, std::int64_t m) {
  if (n < 2 || n > m) {
    throw ParameterError("n0_girth6 needs 2 <= n <= m, got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m));
  }
  const std::int64_t num = checked::mul(checked::add(m, n), checked::add(checked::mul(m, n) - m, 1));
  return num / n + (num % n != 0 ? 1 : 0);
}

std::int64_t refined_bound_3m6(std::int64_t m) {
  if (m <= 4 || m % 3 != 2) {
    throw ParameterError("refined (3,m;6) bound needs m > 4 and m = 2 (mod 3), got m=" +
                         std::to_string(m));
  }
  const std::int64_t num =
      checked::add(checked::add(checked::mul(2, checked::mul(m, m)), checked::mul(8, m)), 6);
  return num / 3;
}

std::string_view to_string(BoundName b) noexcept {
  switch (b) {
  case BoundName::moore_bound: return "moore_bound";
  case BoundName::n0_girth6: return "n0_girth6";
  case BoundName::refined_bound_3m6: return "refined_bound_3m6";
  }
  return "?";
}

AppliedBound applicable_bound(const CageParams& p) {
  if (p.girth == 6) {
    if (p.n == 3 && p.m > 4 && p.m % 3 == 2) {
      return {BoundName::refined_bound_3m6, refined_bound_3m6(p.m)};
    }
    return {BoundName::n0_girth6, n0_girth6(p.n, p.m)};
  }
  return {BoundName::moore_bound, moore_bound(p)};
}

std::int64_t excess(std::int64_t order, const CageParams& p) {
  const AppliedBound b = applicable_bound(p);
  if (order < b.value) {
    throw VerificationError("order " + std::to_string(order) + " is below " +
                            std::string(to_string(b.name)) + " = " + std::to_string(b.value) +
                            " for (" + std::to_string(p.n) + "," + std::to_string(p.m) + ";" +
                            std::to_string(p.girth) + ")");
  }
  return order - b.value;
}

} // namespace bbcage
