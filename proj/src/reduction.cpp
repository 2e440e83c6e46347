#include "latfree/reduction.hpp"

#include <algorithm>

namespace latfree {

DiameterWitness lattice_diameter(const Polygon& p) {
  const std::vector<IntVec> pts = lattice_points_in(p);
  Int best = 0;
  IntVec a = pts.front(), b = pts.back();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Int g = content(pts[j] - pts[i]);
      if (g > best) {
        best = g;
        a = pts[i];
        b = pts[j];
      }
    }
  }
  return {best, Segment(a, b)};
}

const char* to_string(PolygonType t) {
  switch (t) {
    case PolygonType::I: return "I";
    case PolygonType::II: return "II";
    case PolygonType::III: return "III";
    case PolygonType::IV: return "IV";
    case PolygonType::V: return "V";
    case PolygonType::VI: return "VI";
  }
  return "?";
}

PolygonType parse_polygon_type(const std::string& s) {
  for (PolygonType t : {PolygonType::I, PolygonType::II, PolygonType::III, PolygonType::IV, PolygonType::V,
                        PolygonType::VI})
    if (s == to_string(t)) return t;
  throw GeometryError("unknown polygon type: " + s);
}

namespace {

bool splits(const Polygon& p, IntVec a, IntVec b) { return segment_splits(p, Segment(a, b)); }

// Some line x = jn (vertical) or y = jn (horizontal) splits P.
bool grid_line_splits(Int lo, Int hi, Int n) {
  Int next = checked_mul(floor_div(lo, n) + 1, n);  // smallest multiple of n above lo
  return next < hi;
}

}  // namespace

bool satisfies_type(const Polygon& p, PolygonType type, Int n) {
  if (n < 2) throw GeometryError("type classification needs n >= 2");
  const IntVec o{0, 0}, a{n, 0}, c{n, n}, d{0, n};
  switch (type) {
    case PolygonType::I: {
      BoundingStats s = bounding_stats(p);
      return !grid_line_splits(s.W, s.E, n) || !grid_line_splits(s.S, s.N, n);
    }
    case PolygonType::II:
      return splits(p, o, a) && splits(p, a, c) && splits(p, d, c) && splits(p, o, d);
    case PolygonType::III:
      return splits(p, o, a) && splits(p, a, c) && splits(p, c, d) && !line_splits(p, Line::vertical(0));
    case PolygonType::IV:
      return splits(p, o, d) && splits(p, o, a) && splits(p, a, c) && splits(p, c, {2 * n, n}) &&
             !meets_line(p, Line::vertical(-n)) && !meets_line(p, Line::vertical(2 * n));
    case PolygonType::V:
      return splits(p, o, {-n, 0}) && splits(p, o, d) && !line_splits(p, Line::vertical(-n)) &&
             !line_splits(p, Line::horizontal(n));
    case PolygonType::VI:
      return splits(p, o, {-n, 0}) && splits(p, o, d) && splits(p, d, c) && !line_splits(p, Line::vertical(-n)) &&
             !line_splits(p, Line::vertical(n));
  }
  return false;
}

NormalizationResult slab_normalize(const Polygon& p, Int n) {
  if (n < 2) throw GeometryError("slab normalization needs n >= 2");
  if (!polygon_free_of(p, Sublattice::scaled(n))) throw GeometryError("polygon not lattice-free");

  DiameterWitness dw = lattice_diameter(p);
  IntVec dir = dw.endpoints.b - dw.endpoints.a;
  dir = IntVec{dir.x1 / dw.length, dir.x2 / dw.length};
  IntMat2 a = primitive_to(dir, kE2);
  Int m = (a * dw.endpoints.a).x1;
  Int q = floor_div(m, n);
  AffineMap to_slab{a, {checked_neg(checked_mul(q, n)), 0}};
  Polygon image = apply_affine(p, to_slab);

  // Band index of the chord on x1 = x: it lies strictly between u*n and (u+1)*n.
  auto band = [&](Int x) -> std::optional<Int> {
    auto ext = column_extent(image, x);
    if (!ext) return std::nullopt;
    return (ext->first / Rational(n)).floor();
  };
  std::optional<Int> u1 = band(0), u2 = band(n);
  if (!u1) u1 = u2;
  if (!u2) u2 = u1;
  Int k = u1 ? checked_sub(*u1, *u2) : 0;
  Int shift = u1 ? checked_neg(checked_mul(*u1, n)) : 0;
  AffineMap shear{{1, 0, k, 1}, {0, shift}};

  AffineMap map = shear.after(to_slab);
  return {map, apply_affine(image, shear), m - q * n};
}

CheckReport check_normalization(const Polygon& input, const NormalizationResult& r, Int n) {
  CheckReport rep("slab-normalization");
  rep.note("input", input.to_string());
  rep.note("image", r.image.to_string());
  rep.expect_true("map is unimodular", r.map.linear.is_unimodular());
  rep.expect_true("translation lies in nZ^2", r.map.is_automorphism_of(Sublattice::scaled(n)));
  rep.expect_true("image equals mapped input", r.map.linear.is_unimodular() && apply_affine(input, r.map) == r.image);
  rep.expect_true("image is nZ^2-free", polygon_free_of(r.image, Sublattice::scaled(n)));

  BoundingStats s = bounding_stats(r.image);
  rep.expect("W >= -n+1", s.W, Relation::GE, -n + 1);
  rep.expect("E <= 2n-1", s.E, Relation::LE, 2 * n - 1);
  rep.expect("c >= 0", r.diameter_line_c, Relation::GE, 0);
  rep.expect("c <= n-1", r.diameter_line_c, Relation::LE, n - 1);

  Int ell = lattice_diameter(input).length;
  rep.expect("diameter preserved", lattice_diameter(r.image).length, Relation::EQ, ell);
  auto column = column_lattice_range(r.image, r.diameter_line_c);
  rep.expect("integer points on x1 = c", column ? column->second - column->first + 1 : 0, Relation::GE, ell + 1);

  for (Int x : {Int{0}, n}) {
    auto ext = column_extent(r.image, x);
    if (!ext) continue;
    std::string tag = "chord on x1 = " + std::to_string(x);
    rep.expect_true(tag + " starts at or above 0", ext->first >= Rational(0));
    rep.expect_true(tag + " ends at or below n", ext->second <= Rational(n));
  }
  return rep;
}

namespace {

enum class Elem { H, Vr, R, Rot, M, T };

AffineMap elementary(Elem e, Int n) {
  switch (e) {
    case Elem::H: return {IntMat2::diagonal(-1, 1), {n, 0}};
    case Elem::Vr: return {IntMat2::diagonal(1, -1), {0, n}};
    case Elem::R: return {{0, -1, 1, 0}, {n, 0}};
    case Elem::Rot: return {IntMat2::diagonal(-1, -1), {n, n}};
    case Elem::M: return {IntMat2::diagonal(-1, 1), {0, 0}};
    case Elem::T: return {IntMat2::identity(), {n, 0}};
  }
  return AffineMap::identity();
}

// Which of the segments [(-n,y),(0,y)], [(0,y),(n,y)], [(n,y),(2n,y)] splits P
// (1, 2, 3), or 0 if none does.
int split_index(const Polygon& p, Int y, Int n) {
  int found = 0;
  for (int i = 1; i <= 3; ++i) {
    if (splits(p, {(i - 2) * n, y}, {(i - 1) * n, y})) {
      if (found) throw GeometryError("classification failure");
      found = i;
    }
  }
  return found;
}

struct Row {
  bool both_lines;
  int i;
  int j;
  PolygonType type;
  std::vector<Elem> maps;  // applied left to right
};

// The polygon has been normalized so that x1 = 0 splits it. Rows list which
// horizontal segments I_i (on x2 = 0) and J_j (on x2 = n) split it.
const std::vector<Row> kTable{
    {false, 0, 0, PolygonType::I, {}},
    {false, 1, 0, PolygonType::V, {}},
    {false, 2, 0, PolygonType::V, {Elem::M}},
    {false, 0, 1, PolygonType::V, {Elem::Vr}},
    {false, 0, 2, PolygonType::V, {Elem::Vr, Elem::M}},
    {false, 1, 1, PolygonType::III, {Elem::T}},
    {false, 2, 2, PolygonType::III, {Elem::H}},
    {false, 1, 2, PolygonType::VI, {}},
    {false, 2, 1, PolygonType::VI, {Elem::Vr}},
    {true, 0, 0, PolygonType::I, {}},
    {true, 2, 2, PolygonType::II, {}},
    {true, 2, 0, PolygonType::III, {Elem::R}},
    {true, 0, 2, PolygonType::III, {Elem::Vr, Elem::R}},
    {true, 1, 0, PolygonType::V, {}},
    {true, 3, 0, PolygonType::V, {Elem::H}},
    {true, 0, 1, PolygonType::V, {Elem::Vr}},
    {true, 0, 3, PolygonType::V, {Elem::Vr, Elem::H}},
    {true, 1, 1, PolygonType::III, {Elem::T}},
    {true, 3, 3, PolygonType::III, {Elem::H, Elem::T}},
    {true, 1, 2, PolygonType::IV, {Elem::Rot}},
    {true, 2, 3, PolygonType::IV, {}},
    {true, 3, 2, PolygonType::IV, {Elem::Vr}},
    {true, 2, 1, PolygonType::IV, {Elem::H}},
};

}  // namespace

Classification classify_type(const Polygon& p, Int n) {
  NormalizationResult norm = slab_normalize(p, n);
  AffineMap map = norm.map;
  Polygon q = norm.image;

  const bool split0 = line_splits(q, Line::vertical(0));
  const bool splitn = line_splits(q, Line::vertical(n));
  if (!split0 && !splitn) {
    if (!satisfies_type(q, PolygonType::I, n)) throw GeometryError("classification failure");
    return {map, {PolygonType::I, n}, q};
  }
  if (!split0) {
    AffineMap h = elementary(Elem::H, n);
    q = apply_affine(q, h);
    map = h.after(map);
  }
  const bool both = split0 && splitn;
  const int i = split_index(q, 0, n);
  const int j = split_index(q, n, n);

  for (const Row& row : kTable) {
    if (row.both_lines != both || row.i != i || row.j != j) continue;
    AffineMap step = AffineMap::identity();
    for (Elem e : row.maps) step = elementary(e, n).after(step);
    Polygon image = apply_affine(q, step);
    if (!satisfies_type(image, row.type, n)) throw GeometryError("classification failure");
    return {step.after(map), {row.type, n}, image};
  }
  throw GeometryError("classification failure");
}

bool check_slab_lemma(const Polygon& p) {
  Int ell = lattice_diameter(p).length;
  if (!p.contains({0, 0}) || !p.contains({0, ell}))
    throw GeometryError("slab lemma hypothesis violated: P must contain 0 and (0, l)");
  BoundingStats s = bounding_stats(p);
  if (s.W < -(ell + 2) || s.E > ell + 2) return false;
  return !column_lattice_range(p, ell + 1) && !column_lattice_range(p, -(ell + 1));
}

bool check_imposs(const Polygon& p, Int n) {
  bool first = splits(p, {0, n}, {-n, n}) && splits(p, {n, 0}, {2 * n, 0});
  bool second = splits(p, {0, 0}, {-n, 0}) && splits(p, {n, n}, {2 * n, n});
  return !first && !second;
}

}  // namespace latfree
