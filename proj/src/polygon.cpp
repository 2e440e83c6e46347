#include "latfree/polygon.hpp"

#include <algorithm>

namespace latfree {

Segment::Segment(IntVec a_, IntVec b_) : a(a_), b(b_) {
  if (a == b) throw GeometryError("segment endpoints coincide");
}

Line Line::through(IntVec a, IntVec b) {
  if (a == b) throw GeometryError("line needs two distinct points");
  return {a, b - a};
}

int Line::side(IntVec p) const {
  Wide v = cross_wide(direction, p - point);
  return (v > 0) - (v < 0);
}

Polygon Polygon::from_ccw(std::vector<IntVec> vertices) {
  if (vertices.size() < 3) throw GeometryError("polygon needs at least 3 vertices");
  Polygon hull = convex_hull(vertices);
  if (hull.size() != vertices.size())
    throw GeometryError("vertices are not in strictly convex position");
  auto start = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), start, vertices.end());
  if (vertices != hull.vertices_) throw GeometryError("vertices are not in counter-clockwise order");
  return hull;
}

Int Polygon::area2() const {
  Wide sum = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    sum += cross_wide(vertices_[i], vertex(i + 1));
  return narrow(sum);
}

bool Polygon::contains(IntVec p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (orientation(vertices_[i], vertex(i + 1), p) < 0) return false;
  return true;
}

std::string Polygon::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vertices_[i].to_string();
  }
  return s + "]";
}

Polygon convex_hull(std::span<const IntVec> points) {
  std::vector<IntVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw GeometryError("degenerate hull");

  std::vector<IntVec> hull;
  hull.reserve(pts.size() + 1);
  for (const IntVec& p : pts) {
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) throw GeometryError("degenerate hull");
  return Polygon(std::move(hull));
}

std::optional<std::pair<Rational, Rational>> column_extent(const Polygon& p, Int x) {
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& y) {
    if (!lo || y < *lo) lo = y;
    if (!hi || y > *hi) hi = y;
  };
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    IntVec a = p[i];
    IntVec b = p.vertex(i + 1);
    if (a.x1 == x) take(Rational(a.x2));
    if ((a.x1 < x && x < b.x1) || (b.x1 < x && x < a.x1)) {
      Wide num = static_cast<Wide>(a.x2) * (b.x1 - a.x1) + static_cast<Wide>(x - a.x1) * (b.x2 - a.x2);
      take(Rational::from_wide(num, b.x1 - a.x1));
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::optional<std::pair<Int, Int>> column_lattice_range(const Polygon& p, Int x) {
  auto ext = column_extent(p, x);
  if (!ext) return std::nullopt;
  Int lo = ext->first.ceil();
  Int hi = ext->second.floor();
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

namespace {

std::pair<Int, Int> x1_range(const Polygon& p) {
  auto [mn, mx] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                      [](IntVec a, IntVec b) { return a.x1 < b.x1; });
  return {mn->x1, mx->x1};
}

}  // namespace

std::vector<IntVec> lattice_points_in(const Polygon& p) {
  std::vector<IntVec> out;
  auto [w, e] = x1_range(p);
  for (Int x = w; x <= e; ++x) {
    if (auto r = column_lattice_range(p, x))
      for (Int y = r->first; y <= r->second; ++y) out.push_back({x, y});
  }
  return out;
}

Int count_lattice_points(const Polygon& p) {
  Int total = 0;
  auto [w, e] = x1_range(p);
  for (Int x = w; x <= e; ++x)
    if (auto r = column_lattice_range(p, x)) total = checked_add(total, r->second - r->first + 1);
  return total;
}

Int boundary_lattice_points(const Polygon& p) {
  Int b = 0;
  for (std::size_t i = 0; i < p.size(); ++i) b = checked_add(b, content(p.vertex(i + 1) - p[i]));
  return b;
}

PickReport pick_identity(const Polygon& p) {
  PickReport r{};
  r.area2 = p.area2();
  r.boundary = boundary_lattice_points(p);
  r.interior = count_lattice_points(p) - r.boundary;
  r.holds = r.area2 == 2 * r.interior + r.boundary - 2;
  return r;
}

bool polygon_free_of(const Polygon& p, const Sublattice& l) {
  auto [w, e] = x1_range(p);
  const auto& h = l.hermite();
  for (Int x = ceil_div(w, h.a) * h.a; x <= e; x += h.a) {
    auto r = column_lattice_range(p, x);
    if (!r) continue;
    Int residue = *l.column_residue(x);
    Int y = r->first + floor_mod(residue - floor_mod(r->first, h.d), h.d);
    if (y <= r->second) return false;
  }
  return true;
}

BoundingStats bounding_stats(const Polygon& p) {
  const auto& v = p.vertices();
  BoundingStats s{};
  s.N = s.S = v[0].x2;
  s.W = s.E = v[0].x1;
  for (const IntVec& q : v) {
    s.N = std::max(s.N, q.x2);
    s.S = std::min(s.S, q.x2);
    s.W = std::min(s.W, q.x1);
    s.E = std::max(s.E, q.x1);
  }
  s.N_minus = s.S_minus = s.E;
  s.N_plus = s.S_plus = s.W;
  s.W_minus = s.E_minus = s.N;
  s.W_plus = s.E_plus = s.S;
  for (const IntVec& q : v) {
    if (q.x2 == s.N) {
      s.N_minus = std::min(s.N_minus, q.x1);
      s.N_plus = std::max(s.N_plus, q.x1);
    }
    if (q.x2 == s.S) {
      s.S_minus = std::min(s.S_minus, q.x1);
      s.S_plus = std::max(s.S_plus, q.x1);
    }
    if (q.x1 == s.W) {
      s.W_minus = std::min(s.W_minus, q.x2);
      s.W_plus = std::max(s.W_plus, q.x2);
    }
    if (q.x1 == s.E) {
      s.E_minus = std::min(s.E_minus, q.x2);
      s.E_plus = std::max(s.E_plus, q.x2);
    }
  }
  return s;
}

bool line_splits(const Polygon& p, const Line& line) {
  bool pos = false, neg = false;
  for (const IntVec& v : p.vertices()) {
    int s = line.side(v);
    pos |= s > 0;
    neg |= s < 0;
  }
  return pos && neg;
}

bool meets_line(const Polygon& p, const Line& line) {
  bool nonneg = false, nonpos = false;
  for (const IntVec& v : p.vertices()) {
    int s = line.side(v);
    nonneg |= s >= 0;
    nonpos |= s <= 0;
  }
  return nonneg && nonpos;
}

namespace {

// Every boundary crossing of the line a + tau*d must have tau >= 0 (and
// tau <= 1 when `bounded`).
bool chord_within(const Polygon& p, IntVec a, IntVec d, bool bounded) {
  const Wide dd = dot_wide(d, d);
  auto inside = [&](Wide num, Wide den) { return num >= 0 && (!bounded || num <= den); };  // den > 0
  for (std::size_t i = 0; i < p.size(); ++i) {
    IntVec u = p[i];
    IntVec w = p.vertex(i + 1);
    Wide su = cross_wide(d, u - a);
    Wide sw = cross_wide(d, w - a);
    if (su == 0) {
      if (!inside(dot_wide(u - a, d), dd)) return false;
    } else if ((su > 0 && sw < 0) || (su < 0 && sw > 0)) {
      Wide diff = wide_sub(su, sw);
      Wide num = wide_add(wide_mul(dot_wide(u - a, d), diff), wide_mul(su, dot_wide(w - u, d)));
      Wide den = wide_mul(diff, dd);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      if (!inside(num, den)) return false;
    }
  }
  return true;
}

}  // namespace

bool segment_splits(const Polygon& p, const Segment& s) {
  return line_splits(p, Line::supporting(s)) && chord_within(p, s.a, s.b - s.a, true);
}

bool ray_splits(const Polygon& p, IntVec origin, IntVec direction) {
  if (direction == IntVec{}) throw GeometryError("ray direction is zero");
  return line_splits(p, Line{origin, direction}) && chord_within(p, origin, direction, false);
}

Polygon apply_affine(const Polygon& p, const AffineMap& m) {
  if (!m.linear.is_unimodular()) throw GeometryError("affine map is not unimodular");
  std::vector<IntVec> image;
  image.reserve(p.size());
  for (const IntVec& v : p.vertices()) image.push_back(m.apply(v));
  if (m.linear.det() < 0) std::reverse(image.begin(), image.end());
  return Polygon::from_ccw(std::move(image));
}

Polygon apply_linear(const Polygon& p, const IntMat2& m) {
  Int d = m.det();
  if (d == 0) throw GeometryError("linear map is singular");
  std::vector<IntVec> image;
  image.reserve(p.size());
  for (const IntVec& v : p.vertices()) image.push_back(m * v);
  if (d < 0) std::reverse(image.begin(), image.end());
  return Polygon::from_ccw(std::move(image));
}

}  // namespace latfree
