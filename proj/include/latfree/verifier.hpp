#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "latfree/check_report.hpp"
#include "latfree/reduction.hpp"

namespace latfree {

/// 2n + 2 min(delta, 3) - 3. Requires delta | n and delta * n >= 2.
Int nu(Int delta, Int n);

/// A polygon with nu(delta, n) - 1 vertices free of delta*Z x n*Z.
/// Throws GeometryError("no extremal polygon exists") when nu <= 3.
Polygon construct_extremal(Int delta, Int n);

struct SearchBox {
  Int x1_min, x1_max, x2_min, x2_max;

  /// x1, x2 in [-n+1, 2n-1].
  static SearchBox around_slab(Int n) { return {-n + 1, 2 * n - 1, -n + 1, 2 * n - 1}; }
  Int width() const { return x1_max - x1_min + 1; }
  Int height() const { return x2_max - x2_min + 1; }
  std::string to_string() const;
  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

struct EnumerationOptions {
  unsigned jobs = 1;
  /// Restrict vertices to this lattice (in addition to avoiding L).
  std::optional<Sublattice> vertex_lattice;
};

struct EnumerationStats {
  std::uint64_t polygons = 0;  // polygons emitted
  std::uint64_t visited = 0;   // convex L-free polygons visited by the search
};

/// Streams every strictly convex polygon with vertices in box \ L, free of L,
/// with at least `min_vertices` vertices. Output order is deterministic and
/// independent of `jobs`: grouped by lexicographically smallest vertex.
EnumerationStats enumerate_free_polygons(const Sublattice& l, const SearchBox& box, int min_vertices,
                                         const std::function<void(const Polygon&)>& sink,
                                         const EnumerationOptions& options = {});

struct MaxSearchResult {
  int max_vertices = 0;
  std::optional<Polygon> witness;
  std::uint64_t visited = 0;
};

/// Largest L-free polygon in the box, by branch and bound. The witness is the
/// first maximum in enumeration order, so it does not depend on `jobs`.
MaxSearchResult max_free_polygon(const Sublattice& l, const SearchBox& box, const EnumerationOptions& options = {});

struct VerificationReport {
  Sublattice lattice;
  SearchBox box;
  int max_vertices_found;
  std::optional<Polygon> witness;
  Int nu;
  bool consistent;
  std::uint64_t instances_checked;
  double elapsed_seconds;
};

VerificationReport verify_main_theorem(const Sublattice& l, const SearchBox& box, unsigned jobs = 1);

/// 0 for Z^2, 1 for a (1, n/2)-lattice, 2 for a (1, n)-lattice; throws otherwise.
int vertex_lattice_b(const Sublattice& gamma, Int n);

CheckReport check_subtheorem_C(const Polygon& p, const TypeTag& tag, const Sublattice& vertex_lattice);

/// Runs the type II argument on P as arithmetic: frame splits, per-slope
/// bounds, step bounds, and the summed chain 2N <= 4n + 4 - 4b.
CheckReport type_II_bound_pipeline(const Polygon& p, Int n, const Sublattice& vertex_lattice);

CheckReport check_parity_argument(const Polygon& p);

struct BoundsResult {
  CheckReport report;
  bool lattice_free;
  std::optional<Polygon> reduced;  // nZ^2-free image before classification
  std::optional<Classification> classification;
};

/// Vertex bound N <= nu - 1 for an L-free polygon; for n >= 3 also reduces to
/// an nZ^2-free polygon, classifies it, and checks the type bounds.
BoundsResult check_bounds(const Polygon& p, const Sublattice& l);

}  // namespace latfree
