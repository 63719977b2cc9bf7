#pragma once

#include <cstdint>
#include <string_view>

namespace bbcage {

/// Degrees n <= m and even girth g = 2 * half_girth.
///
/// Cages proper need n >= 3; n = 2 is admitted so that peeled graphs and
/// cycles can be certified, and below_floor() reports it.
struct CageParams {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t girth = 0;
  std::int64_t half_girth = 0;

  /// Throws ParameterError unless 2 <= n <= m and girth is even and >= 4.
  static CageParams make(std::int64_t n, std::int64_t m, std::int64_t girth);

  bool below_floor() const noexcept { return n < 3; }
  bool operator==(const CageParams&) const = default;
};

/// B(n, m; 2r): vertex count of the Moore tree, one branch rooted at a
/// vertex of degree m and one at its neighbour of degree n, each of depth
/// r - 1. Symmetric in (n, m); degrees must be >= 2. Throws OverflowError
/// rather than wrapping.
std::int64_t moore_bound(std::int64_t n, std::int64_t m, std::int64_t girth);
std::int64_t moore_bound(const CageParams& p);

/// ceil((m + n)(mn - m + 1) / n) for 2 <= n <= m.
std::int64_t n0_girth6(std::int64_t n, std::int64_t m);

/// (2m^2 + 8m + 6) / 3 for m > 4, m = 2 (mod 3): the lower bound on
/// (3, m; 6)-graphs once divisibility of the part sizes is accounted for.
std::int64_t refined_bound_3m6(std::int64_t m);

enum class BoundName { moore_bound, n0_girth6, refined_bound_3m6 };

std::string_view to_string(BoundName b) noexcept;

struct AppliedBound {
  BoundName name = BoundName::moore_bound;
  std::int64_t value = 0;
};

/// refined_bound_3m6 for (3, m; 6) with m = 2 (mod 3) and m > 4,
/// else n0_girth6 for girth 6, else moore_bound.
AppliedBound applicable_bound(const CageParams& p);

/// order - applicable bound. Throws VerificationError if order is below it.
std::int64_t excess(std::int64_t order, const CageParams& p);

} // namespace bbcage
