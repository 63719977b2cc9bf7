#include "bbcage/cli.hpp"

#include "bbcage/bounds.hpp"
#include "bbcage/cages.hpp"
#include "bbcage/error.hpp"
#include "bbcage/formats.hpp"
#include "bbcage/geometry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace bbcage::cli {

namespace {

struct Options {
  // bound
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t girth = 0;
  bool refined = false;
  // build
  std::uint32_t v = 0;
  std::uint32_t q = 0;
  bool elliptic = false;
  std::int64_t cage_m = 0;
  std::optional<std::uint32_t> delete_point;
  std::string format = "graph6";
  std::string output;
  std::string cert;
  // peel / verify / convert
  std::string input;
  std::string from = "graph6";
  std::string to;
  std::optional<std::int64_t> expect_girth;
  std::vector<std::int64_t> expect_degrees;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

std::string read_text(const std::string& path, Io& io) {
  if (path.empty() || path == "-") return slurp(io.in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open '" + path + "'");
  return slurp(f);
}

std::optional<PartSizes> read_sidecar(const std::string& path) {
  if (path.empty() || path == "-") return std::nullopt;
  const auto side = sidecar_path(path);
  std::ifstream f(side, std::ios::binary);
  if (!f) return std::nullopt;
  return parse_parts_json(slurp(f));
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    fallback.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << text;
}

void emit_graph(const Options& o, const BipartiteGraph& g, Io& io) {
  write_text(o.output, encode(plain(g), parse_format(o.format)), io.out);
  if (!o.output.empty() && o.output != "-") {
    write_text(sidecar_path(o.output).string(), parts_json({g.size_a(), g.size_b()}), io.out);
  }
}

void emit(const Options& o, const CertifiedGraph& cg, Io& io) {
  emit_graph(o, cg.graph, io);
  write_text(o.cert, to_json(cg.certificate), io.err);
}

int cmd_bound(const Options& o, Io& io) {
  std::int64_t value = 0;
  if (o.refined) {
    if (o.n != 3 || o.girth != 6) {
      throw ParameterError("--refined applies only to n = 3, girth 6");
    }
    value = refined_bound_3m6(o.m);
  } else {
    const auto p = CageParams::make(o.n, o.m, o.girth);
    value = p.girth == 6 ? n0_girth6(p.n, p.m) : moore_bound(p);
  }
  io.out << value << '\n';
  return kOk;
}

// Certification failures of a construction are integrity failures.
template <class F>
auto constructing(F&& f) {
  try {
    return f();
  } catch (const VerificationError& e) {
    throw IntegrityError(e.what());
  }
}

CertifiedGraph build_geometry(const IncidenceStructure& s, std::string name) {
  BipartiteGraph g = incidence_graph(s);
  const auto lo = std::min<std::int64_t>(s.s, s.t) + 1;
  const auto hi = std::max<std::int64_t>(s.s, s.t) + 1;
  CageCertificate c = constructing([&] { return certify(g, CageParams::make(lo, hi, 8)); });
  c.construction = std::move(name);
  c.notes += "generalized quadrangle of order (" + std::to_string(s.s) + "," +
             std::to_string(s.t) + ")";
  return {std::move(g), std::move(c)};
}

int cmd_build(const std::string& which, const Options& o, Io& io) {
  CertifiedGraph cg;
  if (which == "sts") {
    cg = design_cage(sts(o.v), "sts");
  } else if (which == "pg") {
    cg = design_cage(as_design(projective_plane(o.q)), "projective_plane");
  } else if (which == "ag") {
    const IncidenceStructure plane = affine_plane(o.q);
    if (plane.s + 1 >= 3) {
      cg = design_cage(as_design(plane), "affine_plane");
    } else {
      BipartiteGraph g = incidence_graph(plane);
      CageCertificate c = constructing([&] { return certify(g, CageParams::make(2, 3, 6)); });
      c.construction = "affine_plane";
      cg = {std::move(g), std::move(c)};
    }
  } else if (which == "gq") {
    cg = o.elliptic ? build_geometry(elliptic_quadric_gq(o.q), "elliptic_quadric_gq")
                    : build_geometry(symplectic_gq(o.q), "symplectic_gq");
  } else if (which == "cage36") {
    cg = cage_3_m_6(o.cage_m, o.delete_point);
  } else if (which == "design") {
    std::istringstream is(read_text(o.input, io));
    cg = design_cage(read_design(is), "design");
  }
  emit(o, cg, io);
  return kOk;
}

BipartiteGraph load_graph(const Options& o, Io& io, bool& bipartite) {
  const PlainGraph pg = decode(read_text(o.input, io), parse_format(o.from));
  const auto parts = read_sidecar(o.input);
  try {
    bipartite = true;
    return to_bipartite(pg, parts);
  } catch (const FormatError& e) {
    bipartite = false;
    io.err << "FAIL: " << e.what() << '\n';
    return {};
  }
}

int cmd_peel(const Options& o, Io& io) {
  bool bipartite = false;
  const BipartiteGraph g = load_graph(o, io, bipartite);
  if (!bipartite) return kVerifyFailed;
  CertifiedGraph peeled;
  try {
    peeled = peel_moore_tree(g);
  } catch (const ParameterError& e) {
    // The input parsed fine but is not a peelable Moore graph.
    throw VerificationError(e.what());
  }
  emit(o, peeled, io);
  return kOk;
}

int cmd_verify(const Options& o, Io& io) {
  bool bipartite = false;
  const BipartiteGraph g = load_graph(o, io, bipartite);
  if (!bipartite) return kVerifyFailed;
  if (!o.expect_degrees.empty() && o.expect_degrees.size() != 2) {
    throw ParameterError("--degrees expects N,M");
  }

  const DegreeSets ds = degree_sets(g);
  const Girth measured = girth(g);
  io.out << "order " << g.order() << "\nparts " << g.size_a() << ' ' << g.size_b() << "\ndegrees A:";
  for (auto [d, c] : ds.a) io.out << ' ' << d << 'x' << c;
  io.out << " B:";
  for (auto [d, c] : ds.b) io.out << ' ' << d << 'x' << c;
  io.out << "\ngirth " << measured.str() << '\n';

  std::vector<std::string> failures;
  if (o.expect_girth && measured != Girth(static_cast<std::uint32_t>(*o.expect_girth))) {
    failures.push_back("girth " + measured.str() + " != " + std::to_string(*o.expect_girth));
  }
  if (!o.expect_degrees.empty()) {
    const auto a = static_cast<std::uint32_t>(std::min(o.expect_degrees[0], o.expect_degrees[1]));
    const auto b = static_cast<std::uint32_t>(std::max(o.expect_degrees[0], o.expect_degrees[1]));
    if (!is_biregular(g, a, b)) {
      failures.push_back("not (" + std::to_string(a) + "," + std::to_string(b) + ")-biregular");
    }
  }
  if (failures.empty()) {
    io.out << "PASS\n";
    return kOk;
  }
  for (const auto& f : failures) io.out << "FAIL: " << f << '\n';
  return kVerifyFailed;
}

int cmd_convert(const Options& o, Io& io) {
  const std::string text = read_text(o.input, io);
  const PlainGraph g = decode(text, parse_format(o.from));
  write_text(o.output, encode(g, parse_format(o.to)), io.out);
  if (const auto parts = read_sidecar(o.input); parts && !o.output.empty() && o.output != "-") {
    write_text(sidecar_path(o.output).string(), parts_json(*parts), io.out);
  }
  return kOk;
}

void add_output_options(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Graph output format")
      ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
  app->add_option("--output", o.output, "Graph output path (default stdout)");
  app->add_option("--cert", o.cert, "Certificate JSON path (default stderr)");
}

void add_input_options(CLI::App* app, Options& o, bool required) {
  auto* opt = app->add_option("--input", o.input, "Input graph path ('-' for stdin)");
  if (required) opt->required();
  app->add_option("--from", o.from, "Input format")
      ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  Io io{in, out, err};

  CLI::App app{"Bipartite biregular cage constructions and certificates", "bbcage"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Print the applicable lower bound");
  bound->add_option("--n", o.n, "Smaller degree")->required();
  bound->add_option("--m", o.m, "Larger degree")->required();
  bound->add_option("--girth", o.girth, "Even girth")->required();
  bound->add_flag("--refined", o.refined, "Refined (3,m;6) bound for m = 2 (mod 3)");

  auto* build = app.add_subcommand("build", "Construct and certify a graph");
  build->require_subcommand(1);
  auto* b_sts = build->add_subcommand("sts", "Steiner triple system incidence graph");
  b_sts->add_option("--v", o.v, "Number of points")->required();
  auto* b_pg = build->add_subcommand("pg", "Projective plane PG(2,q) incidence graph");
  b_pg->add_option("--q", o.q, "Prime power")->required();
  auto* b_ag = build->add_subcommand("ag", "Affine plane AG(2,q) incidence graph");
  b_ag->add_option("--q", o.q, "Prime power")->required();
  auto* b_gq = build->add_subcommand("gq", "Generalized quadrangle W(q) or Q-(5,q)");
  b_gq->add_option("--q", o.q, "Prime power")->required();
  b_gq->add_flag("--elliptic", o.elliptic, "Use the elliptic quadric Q-(5,q)");
  auto* b_c36 = build->add_subcommand("cage36", "Smallest (3,m;6) bipartite biregular graph");
  b_c36->add_option("--m", o.cage_m, "Larger degree, m > 3")->required();
  b_c36->add_option("--delete-point", o.delete_point, "Point removed when m = 2 (mod 3)");
  auto* b_design = build->add_subcommand("design", "Incidence graph of an S(2,k,v) design file");
  b_design->add_option("--input", o.input, "Design file ('v b k' header)")->required();
  for (auto* sub : {b_sts, b_pg, b_ag, b_gq, b_c36, b_design}) add_output_options(sub, o);

  auto* peel = app.add_subcommand("peel", "Remove a Moore tree from a Moore graph");
  add_input_options(peel, o, true);
  add_output_options(peel, o);

  auto* verify = app.add_subcommand("verify", "Check girth and degrees of a graph");
  add_input_options(verify, o, false);
  verify->add_option("--girth", o.expect_girth, "Expected girth");
  verify->add_option("--degrees", o.expect_degrees, "Expected degrees N,M")->delimiter(',');

  auto* convert = app.add_subcommand("convert", "Convert between graph formats");
  add_input_options(convert, o, true);
  convert->get_option("--from")->required();
  convert->add_option("--to", o.to, "Output format")
      ->required()
      ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
  convert->add_option("--output", o.output, "Output path (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(o, io);
    if (build->parsed()) {
      for (auto* sub : build->get_subcommands()) {
        if (sub->parsed()) return cmd_build(sub->get_name(), o, io);
      }
    }
    if (peel->parsed()) return cmd_peel(o, io);
    if (verify->parsed()) return cmd_verify(o, io);
    if (convert->parsed()) return cmd_convert(o, io);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const IntegrityError& e) {
    err << "construction integrity failure: " << e.what() << '\n';
    return kIntegrity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace bbcage::cli
