#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latfree/lattice.hpp"

namespace latfree {

/// Strictly convex lattice polygon. Vertices are stored counter-clockwise,
/// starting from the lexicographically smallest one, so two polygons are
/// equal iff their vertex lists are.
class Polygon {
 public:
  /// Validates a counter-clockwise strictly convex vertex cycle (any start).
  static Polygon from_ccw(std::vector<IntVec> vertices);

  const std::vector<IntVec>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const IntVec& operator[](std::size_t i) const { return vertices_[i]; }
  const IntVec& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Twice the area.
  Int area2() const;
  /// Closed-region membership.
  bool contains(IntVec p) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
  std::string to_string() const;

 private:
  friend Polygon convex_hull(std::span<const IntVec> points);
  explicit Polygon(std::vector<IntVec> v) : vertices_(std::move(v)) {}
  std::vector<IntVec> vertices_;
};

struct Segment {
  IntVec a;
  IntVec b;

  Segment(IntVec a_, IntVec b_);
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Line through `point` with nonzero direction `direction`.
struct Line {
  IntVec point;
  IntVec direction;

  static Line vertical(Int c) { return {{c, 0}, {0, 1}}; }
  static Line horizontal(Int c) { return {{0, c}, {1, 0}}; }
  static Line through(IntVec a, IntVec b);
  static Line supporting(const Segment& s) { return through(s.a, s.b); }

  /// +1 / -1 for the two open half-planes, 0 on the line.
  int side(IntVec p) const;
};

struct BoundingStats {
  Int N, N_minus, N_plus;
  Int S, S_minus, S_plus;
  Int W, W_minus, W_plus;
  Int E, E_minus, E_plus;

  friend bool operator==(const BoundingStats&, const BoundingStats&) = default;
};

struct PickReport {
  Int area2;
  Int interior;
  Int boundary;
  bool holds;
};

/// Monotone chain with exact cross products; collinear boundary points are dropped.
/// Throws GeometryError("degenerate hull") if the points do not span the plane.
Polygon convex_hull(std::span<const IntVec> points);

/// Exact extent of P on the vertical line x1 = x, if they meet.
std::optional<std::pair<Rational, Rational>> column_extent(const Polygon& p, Int x);
/// Integer x2-range of P on the vertical line x1 = x (empty if no lattice point).
std::optional<std::pair<Int, Int>> column_lattice_range(const Polygon& p, Int x);

/// Integer points of the closed polygon, ordered lexicographically.
std::vector<IntVec> lattice_points_in(const Polygon& p);
/// Number of integer points of the closed polygon, without materializing them.
Int count_lattice_points(const Polygon& p);
Int boundary_lattice_points(const Polygon& p);

PickReport pick_identity(const Polygon& p);

/// True iff no point of L lies in the closed polygon.
bool polygon_free_of(const Polygon& p, const Sublattice& l);

BoundingStats bounding_stats(const Polygon& p);

/// True iff P has vertices strictly on both sides of the line.
bool line_splits(const Polygon& p, const Line& line);

/// True iff the supporting line splits P and the chord P-cap-line lies in s.
bool segment_splits(const Polygon& p, const Segment& s);

/// True iff the line through the ray splits P and the chord lies on the ray
/// {origin + lambda * direction : lambda >= 0}.
bool ray_splits(const Polygon& p, IntVec origin, IntVec direction);

/// True iff P and the line have a common point.
bool meets_line(const Polygon& p, const Line& line);

/// Image under a unimodular affine map, re-oriented counter-clockwise.
Polygon apply_affine(const Polygon& p, const AffineMap& m);

/// Image under any nonsingular integer linear map (e.g. a scaling).
Polygon apply_linear(const Polygon& p, const IntMat2& m);

}  // namespace latfree
