#include "latfree/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace latfree {

namespace {

Int as_int(const Json& j) {
  if (!j.is_number_integer()) throw FormatError("expected an integer, got " + j.dump());
  return j.get<Int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<IntVec> vec_list(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of points");
  std::vector<IntVec> out;
  for (const Json& e : j) out.push_back(vec_from_json(e));
  return out;
}

}  // namespace

Json to_json(IntVec v) { return Json::array({v.x1, v.x2}); }

Json to_json(const IntMat2& m) { return Json::array({Json::array({m.a11, m.a12}), Json::array({m.a21, m.a22})}); }

Json to_json(const Polygon& p) {
  Json vs = Json::array();
  for (const IntVec& v : p.vertices()) vs.push_back(to_json(v));
  return {{"vertices", vs}};
}

Json to_json(const Sublattice& l) { return {{"matrix", to_json(l.basis())}, {"delta", l.delta()}, {"n", l.n()}}; }

Json to_json(const AffineMap& m) { return {{"linear", to_json(m.linear)}, {"translation", to_json(m.translation)}}; }

Json to_json(const Slope& q) {
  Json vs = Json::array();
  for (const IntVec& v : q.vertices) vs.push_back(to_json(v));
  return {{"vertices", vs}, {"basis", Json::array({to_json(q.f1), to_json(q.f2)})}};
}

Json to_json(const SearchBox& b) {
  return {{"x1_min", b.x1_min}, {"x1_max", b.x1_max}, {"x2_min", b.x2_min}, {"x2_max", b.x2_max}};
}

Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const Inequality& q : r.items())
    items.push_back({{"label", q.label}, {"lhs", q.lhs}, {"rel", to_string(q.rel)}, {"rhs", q.rhs}, {"holds", q.holds()}});
  Json out{{"check", r.name()}, {"items", items}};
  if (r.ok()) {
    out["status"] = "ok";
  } else {
    Json failed = Json::array();
    for (const Inequality& q : r.failures()) failed.push_back(q.to_string());
    Json ctx = Json::object();
    for (const auto& [k, v] : r.context()) ctx[k] = v;
    out["status"] = {{"counterexample", {{"failed", failed}, {"input", ctx}}}};
  }
  return out;
}

Json to_json(const Classification& c) {
  return {{"type", to_string(c.tag.type)}, {"n", c.tag.n}, {"map", to_json(c.map)}, {"image", to_json(c.image)}};
}

Json to_json(const NormalizationResult& r) {
  return {{"map", to_json(r.map)}, {"image", to_json(r.image)}, {"diameter_line_c", r.diameter_line_c}};
}

Json to_json(const VerificationReport& r) {
  return {{"lattice", to_json(r.lattice)},
          {"box", to_json(r.box)},
          {"max_vertices_found", r.max_vertices_found},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"nu", r.nu},
          {"consistent", r.consistent},
          {"instances_checked", r.instances_checked},
          {"elapsed", r.elapsed_seconds}};
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected a point [x1,x2], got " + j.dump());
  return {as_int(j[0]), as_int(j[1])};
}

IntMat2 mat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected a 2x2 matrix, got " + j.dump());
  IntVec r1 = vec_from_json(j[0]), r2 = vec_from_json(j[1]);
  return {r1.x1, r1.x2, r2.x1, r2.x2};
}

Polygon polygon_from_json(const Json& j) {
  std::vector<IntVec> vs = vec_list(field(j, "vertices"));
  return convex_hull(vs);
}

Sublattice lattice_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) {
    IntMat2 m = mat_from_json(j.at("matrix"));
    if (m.det() == 0) throw FormatError("lattice matrix is singular");
    return Sublattice(m);
  }
  Int d = as_int(field(j, "delta")), n = as_int(field(j, "n"));
  if (d < 1 || n < 1) throw FormatError("delta and n must be positive");
  return Sublattice::diagonal(d, n);
}

AffineMap affine_from_json(const Json& j) {
  return {mat_from_json(field(j, "linear")), vec_from_json(field(j, "translation"))};
}

Slope slope_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != 2) throw FormatError("basis must be [[f11,f12],[f21,f22]]");
  return validate_slope(vec_list(field(j, "vertices")), vec_from_json(basis[0]), vec_from_json(basis[1]));
}

Json load_json_argument(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw FormatError("cannot open " + arg);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Int> parse_int_list(const std::string& s, std::size_t count) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    Int v = 0;
    const char* first = s.data() + pos;
    const char* last = s.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw FormatError("expected " + std::to_string(count) + " comma-separated integers, got \"" + s + "\"");
    out.push_back(v);
    pos = end + 1;
  }
  if (out.size() != count) throw FormatError("expected " + std::to_string(count) + " comma-separated integers, got \"" + s + "\"");
  return out;
}

std::string polygon_svg(const Polygon& p, const std::optional<Sublattice>& l) {
  Int x0 = p[0].x1, x1 = p[0].x1, y0 = p[0].x2, y1 = p[0].x2;
  for (const IntVec& v : p.vertices()) {
    x0 = std::min(x0, v.x1);
    x1 = std::max(x1, v.x1);
    y0 = std::min(y0, v.x2);
    y1 = std::max(y1, v.x2);
  }
  --x0, --y0, ++x1, ++y1;
  const Int unit = 40;
  auto sx = [&](Int x) { return (x - x0) * unit; };
  auto sy = [&](Int y) { return (y1 - y) * unit; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x1 - x0) * unit << "\" height=\"" << (y1 - y0) * unit
    << "\">\n";
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y) {
      const bool in_l = l && l->contains({x, y});
      o << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << (in_l ? 5 : 2) << "\" fill=\""
        << (in_l ? "red" : "gray") << "\"/>\n";
    }
  o << "  <polygon fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) o << (i ? " " : "") << sx(p[i].x1) << "," << sy(p[i].x2);
  o << "\"/>\n</svg>\n";
  return o.str();
}

}  // namespace latfree
