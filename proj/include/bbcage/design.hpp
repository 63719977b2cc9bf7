#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bbcage {

using Block = std::vector<std::uint32_t>;

/// A block design on points 0..v-1 in canonical form: each block sorted,
/// block list sorted lexicographically, no duplicates.
struct Design {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  std::uint32_t lambda = 1;
  std::vector<Block> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  bool operator==(const Design&) const = default;
};

/// Sorts blocks into canonical form and checks the structural invariants
/// (block size k, points in range, no repeated point in a block, no
/// duplicate blocks). Throws ParameterError on violation.
Design make_design(std::uint32_t v, std::uint32_t k, std::vector<Block> blocks,
                   std::uint32_t lambda = 1);

/// (v, b, r, k, lambda) of a 2-design. r is the replication number.
struct DesignParams {
  std::uint64_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  bool operator==(const DesignParams&) const = default;
};

/// Solves r(k-1) = lambda(v-1), vr = bk. Throws ParameterError when either
/// quotient is not an integer.
DesignParams bibd_params(std::uint64_t v, std::uint64_t k, std::uint64_t lambda);

/// STS(6n+3) from the idempotent commutative quasigroup on Z_{2n+1}.
Design bose_sts(std::uint32_t n);

/// STS(6n+1) from the half-idempotent commutative quasigroup on Z_{2n}.
/// Point 0 is the point at infinity.
Design skolem_sts(std::uint32_t n);

/// STS(v) for admissible v (v >= 7, v = 1 or 3 mod 6).
Design sts(std::uint32_t v);

struct SteinerReport {
  bool pass = true;
  // First offending pair in (i, j) lexicographic order, if any.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> pair;
  std::uint32_t multiplicity = 0;

  std::string describe() const;
};

/// Every pair of points must lie in exactly one block.
SteinerReport verify_steiner(const Design& d);

/// "v b k" header, then one block per line.
void write_design(std::ostream& out, const Design& d);
Design read_design(std::istream& in);

} // namespace bbcage
