#include "latfree/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "latfree/io.hpp"

namespace latfree {

namespace {

struct Options {
  std::string input;
  std::string lattice;
  std::string box;
  std::string origin;
  std::string am;
  std::string out;
  std::string svg;
  Int n = 0;
  Int delta = 0;
  int min_vertices = 3;
  unsigned jobs = 1;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write " + path);
  f << text;
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  out << j.dump(2) << "\n";
  if (!o.out.empty()) write_file(o.out, j.dump(2) + "\n");
}

SearchBox parse_box(const std::string& s) {
  std::vector<Int> v = parse_int_list(s, 4);
  SearchBox b{v[0], v[1], v[2], v[3]};
  if (b.x1_min > b.x1_max || b.x2_min > b.x2_max) throw FormatError("empty box " + s);
  return b;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Polygon p = polygon_from_json(load_json_argument(o.input));
  const PickReport pick = pick_identity(p);
  const DiameterWitness dw = lattice_diameter(p);
  const BoundingStats b = bounding_stats(p);
  const MaximalSlopes ms = maximal_slopes(p);

  out << "polygon   " << p.to_string() << "\n";
  out << "vertices  " << p.size() << "\n";
  out << "area2     " << pick.area2 << "\n";
  out << "pick      i=" << pick.interior << " b=" << pick.boundary << " holds=" << (pick.holds ? "yes" : "no") << "\n";
  out << "diameter  " << dw.length << " along " << dw.endpoints.a.to_string() << "-" << dw.endpoints.b.to_string()
      << "\n";
  out << "bounds    S=" << b.S << " [" << b.S_minus << "," << b.S_plus << "]  E=" << b.E << " [" << b.E_minus << ","
      << b.E_plus << "]  N=" << b.N << " [" << b.N_minus << "," << b.N_plus << "]  W=" << b.W << " [" << b.W_minus
      << "," << b.W_plus << "]\n";
  for (int k = 0; k < 4; ++k) out << "Q" << k + 1 << "        N=" << ms.N[k] << " M=" << ms.M[k] << "\n";

  if (!o.svg.empty()) write_file(o.svg, polygon_svg(p));
  if (!o.out.empty()) {
    Json nk = Json::array(), mk = Json::array();
    for (int k = 0; k < 4; ++k) {
      nk.push_back(ms.N[k]);
      mk.push_back(ms.M[k]);
    }
    Json j{{"polygon", to_json(p)},
           {"area2", pick.area2},
           {"interior", pick.interior},
           {"boundary", pick.boundary},
           {"pick_holds", pick.holds},
           {"lattice_diameter", dw.length},
           {"bounding_stats",
            {{"S", {b.S, b.S_minus, b.S_plus}},
             {"E", {b.E, b.E_minus, b.E_plus}},
             {"N", {b.N, b.N_minus, b.N_plus}},
             {"W", {b.W, b.W_minus, b.W_plus}}}},
           {"N_k", nk},
           {"M_k", mk}};
    write_file(o.out, j.dump(2) + "\n");
  }
  return pick.holds ? kExitOk : kExitCounterexample;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const Polygon p = polygon_from_json(load_json_argument(o.input));
  const NormalizationResult r = slab_normalize(p, o.n);
  const CheckReport rep = check_normalization(p, r, o.n);
  Json j = to_json(r);
  j["check"] = to_json(rep);
  emit(j, o, out);
  return rep.ok() ? kExitOk : kExitCounterexample;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Polygon p = polygon_from_json(load_json_argument(o.input));
  emit(to_json(classify_type(p, o.n)), o, out);
  return kExitOk;
}

int cmd_slopes(const Options& o, std::ostream& out) {
  const Slope q = slope_from_json(load_json_argument(o.input));
  const std::vector<Int> xy = parse_int_list(o.origin, 2);
  const Frame frame{{xy[0], xy[1]}, q.f1, q.f2};
  SlopeLatticeHint hint;
  if (!o.lattice.empty()) hint.lattice = lattice_from_json(load_json_argument(o.lattice));
  if (!o.am.empty()) {
    std::vector<Int> am = parse_int_list(o.am, 2);
    hint.am = std::pair{am[0], am[1]};
  }

  std::vector<CheckReport> reports{check_pr_slp(q, hint)};
  Json j{{"slope", to_json(q)}, {"origin", to_json(frame.origin)}};
  const bool splits = frame_splits(frame, q);
  j["splits"] = splits;
  if (splits) {
    const SlopeProfile pr = slope_profile(frame, q);
    Json s = Json::array();
    for (std::size_t i : pr.S) s.push_back(i);
    j["small_angle"] = forms_small_angle(frame, q);
    j["profile"] = {{"N", pr.N},         {"k", pr.k},           {"alpha", pr.alpha.to_string()},
                    {"t", pr.t},         {"s", pr.s},           {"S", s},
                    {"delta", pr.delta_flag}, {"pi1", pr.pi1_E}, {"pi2", pr.pi2_E},
                    {"pihat", pr.pihat_E},    {"pihat_E1", pr.pihat_E1}, {"pihat_E2", pr.pihat_E2}};
    reports.push_back(check_th3_6(frame, q));
    if (hint.lattice && hint.lattice->is_proper()) reports.push_back(check_th3_8(frame, q, *hint.lattice));
    reports.push_back(check_lemma_ledger(frame, q, hint.lattice));
  }
  Json checks = Json::array();
  bool ok = true;
  for (const CheckReport& r : reports) {
    checks.push_back(to_json(r));
    ok = ok && r.ok();
  }
  j["checks"] = checks;
  emit(j, o, out);
  return ok ? kExitOk : kExitCounterexample;
}

int cmd_check_bounds(const Options& o, std::ostream& out) {
  const Polygon p = polygon_from_json(load_json_argument(o.input));
  const Sublattice l = lattice_from_json(load_json_argument(o.lattice));
  const BoundsResult r = check_bounds(p, l);
  Json j{{"polygon", to_json(p)}, {"lattice", to_json(l)}, {"lattice_free", r.lattice_free}};
  if (r.reduced) j["reduced"] = to_json(*r.reduced);
  if (r.classification) j["classification"] = to_json(*r.classification);
  j["check"] = to_json(r.report);
  emit(j, o, out);
  return r.report.ok() ? kExitOk : kExitCounterexample;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Sublattice l = lattice_from_json(load_json_argument(o.lattice));
  const SearchBox box = parse_box(o.box);
  EnumerationOptions opt;
  opt.jobs = o.jobs;
  const EnumerationStats st = enumerate_free_polygons(
      l, box, o.min_vertices, [&](const Polygon& p) { out << to_json(p).dump() << "\n"; }, opt);
  err << "polygons: " << st.polygons << "\n";
  return kExitOk;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  emit(to_json(construct_extremal(o.delta, o.n)), o, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Sublattice l = lattice_from_json(load_json_argument(o.lattice));
  const SearchBox box = o.box.empty() ? SearchBox::around_slab(l.n()) : parse_box(o.box);
  const VerificationReport r = verify_main_theorem(l, box, o.jobs);
  emit(to_json(r), o, out);
  return r.consistent ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice-free integer polygons: reductions, slope inequalities and exhaustive checks", "latfree"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Pick data, lattice diameter, bounding stats and maximal slopes");
  analyze->add_option("polygon", o.input, "Polygon JSON (file or inline)")->required();
  analyze->add_option("--svg", o.svg, "Write an SVG outline");
  analyze->add_option("--out", o.out, "Write a JSON report");

  auto* normalize = app.add_subcommand("normalize", "Map an nZ^2-free polygon into the slab");
  normalize->add_option("polygon", o.input, "Polygon JSON")->required();
  normalize->add_option("--n", o.n, "Lattice scale n")->required();
  normalize->add_option("--out", o.out, "Write the JSON result");

  auto* classify = app.add_subcommand("classify", "Classify an nZ^2-free polygon into types I-VI");
  classify->add_option("polygon", o.input, "Polygon JSON")->required();
  classify->add_option("--n", o.n, "Lattice scale n")->required();
  classify->add_option("--out", o.out, "Write the JSON result");

  auto* slopes = app.add_subcommand("slopes", "Frame splitting, profile and slope inequalities");
  slopes->add_option("slope", o.input, "Slope JSON")->required();
  slopes->add_option("--origin", o.origin, "Frame origin x,y")->required();
  slopes->add_option("--lattice", o.lattice, "Lattice containing the vertices");
  slopes->add_option("--am", o.am, "Vertex lattice basis parameters a,m");
  slopes->add_option("--out", o.out, "Write the JSON result");

  auto* bounds = app.add_subcommand("check-bounds", "Vertex bounds for an L-free polygon");
  bounds->add_option("polygon", o.input, "Polygon JSON")->required();
  bounds->add_option("--lattice", o.lattice, "Lattice JSON")->required();
  bounds->add_option("--out", o.out, "Write the JSON result");

  auto* enumerate = app.add_subcommand("enumerate", "Stream all L-free convex polygons in a box");
  enumerate->add_option("--lattice", o.lattice, "Lattice JSON")->required();
  enumerate->add_option("--box", o.box, "x1min,x1max,x2min,x2max")->required();
  enumerate->add_option("--min-vertices", o.min_vertices, "Minimum vertex count");
  enumerate->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* extremal = app.add_subcommand("extremal", "An L-free polygon with nu - 1 vertices");
  extremal->add_option("--delta", o.delta, "First invariant factor")->required();
  extremal->add_option("--n", o.n, "Second invariant factor")->required();
  extremal->add_option("--out", o.out, "Write the JSON result");

  auto* verify = app.add_subcommand("verify", "Exhaustive maximum vertex count in a box");
  verify->add_option("--lattice", o.lattice, "Lattice JSON")->required();
  verify->add_option("--box", o.box, "x1min,x1max,x2min,x2max (default [-n+1,2n-1]^2)");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "Write the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (normalize->parsed()) return cmd_normalize(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (slopes->parsed()) return cmd_slopes(o, out);
    if (bounds->parsed()) return cmd_check_bounds(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (extremal->parsed()) return cmd_extremal(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latfree
