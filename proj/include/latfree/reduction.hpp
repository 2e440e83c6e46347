#pragma once

#include <string>

#include "latfree/check_report.hpp"
#include "latfree/polygon.hpp"

namespace latfree {

struct DiameterWitness {
  Int length;
  /// Lexicographically first pair of integer points realizing the diameter.
  Segment endpoints;
};

/// Lattice diameter: the maximum of gcd(q - p) over pairs of integer points of P.
/// Quadratic in the number of integer points of P.
DiameterWitness lattice_diameter(const Polygon& p);

enum class PolygonType { I, II, III, IV, V, VI };

const char* to_string(PolygonType t);
PolygonType parse_polygon_type(const std::string& s);

struct TypeTag {
  PolygonType type;
  Int n;
  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

/// Whether P satisfies the defining clause of the given type, evaluated with
/// line/segment split predicates.
bool satisfies_type(const Polygon& p, PolygonType type, Int n);

struct NormalizationResult {
  AffineMap map;  // automorphism of nZ^2
  Polygon image;
  Int diameter_line_c;
};

/// Maps an nZ^2-free polygon into the slab -n+1 <= x1 <= 2n-1 with a
/// diameter segment on x1 = c, 0 <= c < n, and with its chords on x1 = 0 and
/// x1 = n inside [(0,0),(0,n)] and [(n,0),(n,n)].
NormalizationResult slab_normalize(const Polygon& p, Int n);

/// Re-verifies every postcondition of slab_normalize for the given input.
CheckReport check_normalization(const Polygon& input, const NormalizationResult& r, Int n);

struct Classification {
  AffineMap map;  // automorphism of nZ^2
  TypeTag tag;
  Polygon image;
};

/// Maps an nZ^2-free polygon onto one of the types I..VI. The image is
/// re-verified against its type clause; an inconsistency throws
/// GeometryError("classification failure").
Classification classify_type(const Polygon& p, Int n);

/// For P containing 0 and (0, l) with l its lattice diameter: P lies in
/// |x1| <= l + 2 and has no integer point on x1 = +-(l + 1).
bool check_slab_lemma(const Polygon& p);

/// Neither forbidden pair of segments splits P simultaneously.
bool check_imposs(const Polygon& p, Int n);

}  // namespace latfree
