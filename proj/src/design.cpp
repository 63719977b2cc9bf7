#include "bbcage/design.hpp"

#include "bbcage/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace bbcage {

Design make_design(std::uint32_t v, std::uint32_t k, std::vector<Block> blocks,
                   std::uint32_t lambda) {
  for (Block& b : blocks) {
    if (b.size() != k) {
      throw ParameterError("block of size " + std::to_string(b.size()) + ", expected " +
                           std::to_string(k));
    }
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw ParameterError("block contains a repeated point");
    }
    if (!b.empty() && b.back() >= v) {
      throw ParameterError("point " + std::to_string(b.back()) + " out of range for v=" +
                           std::to_string(v));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) {
    throw ParameterError("duplicate block");
  }
  return Design{v, k, lambda, std::move(blocks)};
}

DesignParams bibd_params(std::uint64_t v, std::uint64_t k, std::uint64_t lambda) {
  if (k < 2 || k >= v || lambda < 1) {
    throw ParameterError("bibd_params requires 2 <= k < v and lambda >= 1");
  }
  const std::uint64_t num = lambda * (v - 1);
  if (num % (k - 1) != 0) {
    throw ParameterError("r(k-1) = lambda(v-1) has no integral solution: r = " +
                         std::to_string(num) + "/" + std::to_string(k - 1));
  }
  const std::uint64_t r = num / (k - 1);
  if ((v * r) % k != 0) {
    throw ParameterError("vr = bk has no integral solution: b = " + std::to_string(v * r) +
                         "/" + std::to_string(k));
  }
  return DesignParams{v, v * r / k, r, k, lambda};
}

Design bose_sts(std::uint32_t n) {
  if (n < 1) throw ParameterError("bose_sts requires n >= 1 (v = 6n+3 >= 9)");
  const std::uint32_t mod = 2 * n + 1;
  const auto pt = [](std::uint32_t x, std::uint32_t j) { return 3 * x + j; };
  const auto op = [&](std::uint32_t x, std::uint32_t y) { return ((x + y) * (n + 1)) % mod; };

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(mod) * (3 * n + 1));
  for (std::uint32_t x = 0; x < mod; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (std::uint32_t x = 0; x < mod; ++x) {
    for (std::uint32_t y = x + 1; y < mod; ++y) {
      for (std::uint32_t j = 0; j < 3; ++j) {
        blocks.push_back({pt(x, j), pt(y, j), pt(op(x, y), (j + 1) % 3)});
      }
    }
  }
  return make_design(6 * n + 3, 3, std::move(blocks));
}

Design skolem_sts(std::uint32_t n) {
  if (n < 1) throw ParameterError("skolem_sts requires n >= 1 (v = 6n+1 >= 7)");
  const std::uint32_t mod = 2 * n;
  constexpr std::uint32_t inf = 0;
  const auto pt = [](std::uint32_t x, std::uint32_t j) { return 1 + 3 * x + j; };
  const auto op = [&](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t s = (x + y) % mod;
    return s % 2 == 0 ? s / 2 : n + s / 2;
  };

  std::vector<Block> blocks;
  blocks.reserve(6 * static_cast<std::size_t>(n) * n + n);
  for (std::uint32_t i = 0; i < n; ++i) {
    blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    blocks.push_back({inf, pt(n + i, 0), pt(i, 1)});
    blocks.push_back({inf, pt(n + i, 1), pt(i, 2)});
    blocks.push_back({inf, pt(n + i, 2), pt(i, 0)});
  }
  for (std::uint32_t x = 0; x < mod; ++x) {
    for (std::uint32_t y = x + 1; y < mod; ++y) {
      for (std::uint32_t j = 0; j < 3; ++j) {
        blocks.push_back({pt(x, j), pt(y, j), pt(op(x, y), (j + 1) % 3)});
      }
    }
  }
  return make_design(6 * n + 1, 3, std::move(blocks));
}

Design sts(std::uint32_t v) {
  if (v < 7 || (v % 6 != 1 && v % 6 != 3)) {
    throw ParameterError("STS(" + std::to_string(v) +
                         ") does not exist: need v >= 7 and v = 1 or 3 (mod 6)");
  }
  return v % 6 == 1 ? skolem_sts((v - 1) / 6) : bose_sts((v - 3) / 6);
}

std::string SteinerReport::describe() const {
  if (pass) return "PASS";
  std::ostringstream os;
  os << "FAIL: pair (" << pair->first << ", " << pair->second << ") occurs in "
     << multiplicity << " blocks";
  return os.str();
}

SteinerReport verify_steiner(const Design& d) {
  const std::size_t v = d.v;
  std::vector<std::uint32_t> count(v * v, 0);
  for (const Block& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const auto lo = std::min(b[i], b[j]);
        const auto hi = std::max(b[i], b[j]);
        ++count[lo * v + hi];
      }
    }
  }
  for (std::uint32_t i = 0; i < v; ++i) {
    for (std::uint32_t j = i + 1; j < v; ++j) {
      const std::uint32_t c = count[i * v + j];
      if (c != 1) return SteinerReport{false, std::make_pair(i, j), c};
    }
  }
  return SteinerReport{};
}

void write_design(std::ostream& out, const Design& d) {
  out << d.v << ' ' << d.blocks.size() << ' ' << d.k << '\n';
  for (const Block& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out << ' ';
      out << b[i];
    }
    out << '\n';
  }
}

Design read_design(std::istream& in) {
  std::uint64_t v = 0, b = 0, k = 0;
  if (!(in >> v >> b >> k)) throw FormatError("design file: missing 'v b k' header");
  if (v > UINT32_MAX || k > v) throw FormatError("design file: bad header");
  std::vector<Block> blocks(b, Block(k));
  for (auto& blk : blocks) {
    for (auto& x : blk) {
      std::uint64_t value = 0;
      if (!(in >> value)) throw FormatError("design file: truncated block list");
      if (value >= v) throw FormatError("design file: point out of range");
      x = static_cast<std::uint32_t>(value);
    }
  }
  try {
    return make_design(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(k),
                       std::move(blocks));
  } catch (const ParameterError& e) {
    throw FormatError(std::string("design file: ") + e.what());
  }
}

} // namespace bbcage
