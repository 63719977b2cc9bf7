#include "bbcage/formats.hpp"

#include "bbcage/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace bbcage {

namespace {

void normalise(PlainGraph& g) {
  for (auto& [u, w] : g.edges) {
    if (u == w) throw FormatError("loop at vertex " + std::to_string(u));
    if (u > w) std::swap(u, w);
    if (w >= g.n) throw FormatError("edge endpoint " + std::to_string(w) + " out of range");
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
    throw FormatError("duplicate edge");
  }
}

// Non-empty, whitespace-separated lines with '#'/'c' comments stripped by callers.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::uint64_t> numbers_in(std::string_view line, std::string_view what) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw FormatError(std::string(what) + ": bad number in line '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

std::uint32_t narrow(std::uint64_t v, std::string_view what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError(std::string(what) + ": value too large");
  }
  return static_cast<std::uint32_t>(v);
}

} // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edges") return GraphFormat::edges;
  throw ParameterError("unknown graph format '" + std::string(name) +
                       "' (expected graph6, dimacs or edges)");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
  case GraphFormat::graph6: return "graph6";
  case GraphFormat::dimacs: return "dimacs";
  case GraphFormat::edges: return "edges";
  }
  return "?";
}

PlainGraph plain(const BipartiteGraph& g) { return PlainGraph{g.order(), g.edges()}; }

std::string to_graph6(const PlainGraph& g) {
  std::string out;
  const std::uint64_t n = g.n;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (auto [u, w] : g.edges) {
    const std::uint64_t pos = static_cast<std::uint64_t>(w) * (w - 1) / 2 + u;
    packed[pos / 6] |= static_cast<std::uint8_t>(1u << (5 - pos % 6));
  }
  for (std::uint8_t c : packed) out.push_back(static_cast<char>(c + 63));
  out.push_back('\n');
  return out;
}

PlainGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw FormatError("graph6: invalid character");
  }
  const auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw FormatError("graph6: truncated size");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw FormatError("graph6: truncated size");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  }
  PlainGraph g;
  g.n = narrow(n, "graph6");
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  if (text.size() - pos != (bits + 5) / 6) {
    throw FormatError("graph6: expected " + std::to_string((bits + 5) / 6) +
                      " data bytes for n=" + std::to_string(n));
  }
  std::uint64_t bit = 0;
  for (std::uint32_t w = 1; w < g.n; ++w) {
    for (std::uint32_t u = 0; u < w; ++u, ++bit) {
      if ((val(pos + bit / 6) >> (5 - bit % 6)) & 1) g.edges.emplace_back(u, w);
    }
  }
  if (bits % 6 != 0 && (val(text.size() - 1) & ((1u << (6 - bits % 6)) - 1)) != 0) {
    throw FormatError("graph6: nonzero padding bits");
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string to_dimacs(const PlainGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, w] : g.edges) os << "e " << u + 1 << ' ' << w + 1 << '\n';
  return os.str();
}

PlainGraph from_dimacs(std::string_view text) {
  PlainGraph g;
  bool have_header = false;
  std::uint64_t declared = 0;
  for (std::string_view line : lines_of(text)) {
    if (line[0] == 'c') continue;
    if (line.substr(0, 7) == "p edge ") {
      if (have_header) throw FormatError("dimacs: duplicate 'p' line");
      const auto nums = numbers_in(line.substr(7), "dimacs");
      if (nums.size() != 2) throw FormatError("dimacs: malformed 'p edge N M' line");
      g.n = narrow(nums[0], "dimacs");
      declared = nums[1];
      have_header = true;
    } else if (line.substr(0, 2) == "e ") {
      if (!have_header) throw FormatError("dimacs: edge before 'p' line");
      const auto nums = numbers_in(line.substr(2), "dimacs");
      if (nums.size() != 2 || nums[0] == 0 || nums[1] == 0) {
        throw FormatError("dimacs: malformed edge line '" + std::string(line) + "'");
      }
      g.edges.emplace_back(narrow(nums[0] - 1, "dimacs"), narrow(nums[1] - 1, "dimacs"));
    } else {
      throw FormatError("dimacs: unexpected line '" + std::string(line) + "'");
    }
  }
  if (!have_header) throw FormatError("dimacs: missing 'p edge N M' line");
  if (declared != g.edges.size()) {
    throw FormatError("dimacs: header declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(g.edges.size()));
  }
  normalise(g);
  return g;
}

std::string to_edge_list(const PlainGraph& g) {
  std::ostringstream os;
  for (auto [u, w] : g.edges) os << u << ' ' << w << '\n';
  return os.str();
}

PlainGraph from_edge_list(std::string_view text) {
  PlainGraph g;
  for (std::string_view line : lines_of(text)) {
    if (line[0] == '#') continue;
    const auto nums = numbers_in(line, "edge list");
    if (nums.size() != 2) throw FormatError("edge list: expected 'u v' in '" + std::string(line) + "'");
    const auto u = narrow(nums[0], "edge list");
    const auto w = narrow(nums[1], "edge list");
    g.edges.emplace_back(u, w);
    g.n = std::max(g.n, std::max(u, w) + 1);
  }
  normalise(g);
  return g;
}

std::string encode(const PlainGraph& g, GraphFormat f) {
  switch (f) {
  case GraphFormat::graph6: return to_graph6(g);
  case GraphFormat::dimacs: return to_dimacs(g);
  case GraphFormat::edges: return to_edge_list(g);
  }
  return {};
}

PlainGraph decode(std::string_view text, GraphFormat f) {
  switch (f) {
  case GraphFormat::graph6: return from_graph6(text);
  case GraphFormat::dimacs: return from_dimacs(text);
  case GraphFormat::edges: return from_edge_list(text);
  }
  return {};
}

BipartiteGraph to_bipartite(const PlainGraph& g, std::optional<PartSizes> parts) {
  if (parts) {
    if (static_cast<std::uint64_t>(parts->a) + parts->b != g.n) {
      throw FormatError("part sizes " + std::to_string(parts->a) + "+" + std::to_string(parts->b) +
                        " do not match " + std::to_string(g.n) + " vertices");
    }
    try {
      return BipartiteGraph(parts->a, parts->b, g.edges);
    } catch (const ParameterError& e) {
      throw FormatError(e.what());
    }
  }

  std::vector<std::vector<Vertex>> adj(g.n);
  for (auto [u, w] : g.edges) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  // Feasible split points form an interval [lo, hi] once intersected over
  // all components.
  std::uint32_t lo = 0;
  std::uint32_t hi = g.n;
  std::vector<int> colour(g.n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    stack.push_back(s);
    // [min, max] of each colour class.
    std::uint32_t mn[2] = {g.n, g.n};
    std::uint32_t mx[2] = {0, 0};
    bool nonempty[2] = {false, false};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const int c = colour[v];
      mn[c] = std::min(mn[c], v);
      mx[c] = std::max(mx[c], v);
      nonempty[c] = true;
      for (Vertex w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - c;
          stack.push_back(w);
        } else if (colour[w] == c) {
          throw FormatError("graph is not bipartite (odd cycle through vertex " +
                            std::to_string(w) + ")");
        }
      }
    }
    // An isolated vertex fits on either side of any split.
    if (!nonempty[1]) continue;
    // Orientation with class c in A: split in [max_c + 1, min_other].
    std::uint32_t best_lo = g.n + 1;
    std::uint32_t best_hi = 0;
    for (int c = 0; c < 2; ++c) {
      const std::uint32_t a_lo = mx[c] + 1;
      const std::uint32_t a_hi = mn[1 - c];
      const std::uint32_t l = std::max(lo, a_lo);
      const std::uint32_t h = std::min(hi, a_hi);
      if (l <= h && l < best_lo) {
        best_lo = l;
        best_hi = h;
      }
    }
    if (best_lo > best_hi) {
      throw FormatError("cannot infer part sizes: parts are not contiguous (supply a sidecar)");
    }
    lo = best_lo;
    hi = best_hi;
  }
  return BipartiteGraph(lo, g.n - lo, g.edges);
}

std::filesystem::path sidecar_path(const std::filesystem::path& graph_file) {
  std::filesystem::path out = graph_file;
  out += ".parts.json";
  return out;
}

std::string parts_json(const PartSizes& p) {
  nlohmann::ordered_json j;
  j["size_a"] = p.a;
  j["size_b"] = p.b;
  return j.dump() + "\n";
}

PartSizes parse_parts_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return PartSizes{j.at("size_a").get<std::uint32_t>(), j.at("size_b").get<std::uint32_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("parts sidecar: ") + e.what());
  }
}

} // namespace bbcage
