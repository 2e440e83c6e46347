#pragma once

#include <compare>
#include <optional>
#include <string>

#include "latfree/arith.hpp"

namespace latfree {

/// Integer point or vector of the plane. Arithmetic is overflow-checked.
struct IntVec {
  Int x1 = 0;
  Int x2 = 0;

  friend auto operator<=>(const IntVec&, const IntVec&) = default;
  std::string to_string() const;
};

inline IntVec operator+(IntVec a, IntVec b) { return {checked_add(a.x1, b.x1), checked_add(a.x2, b.x2)}; }
inline IntVec operator-(IntVec a, IntVec b) { return {checked_sub(a.x1, b.x1), checked_sub(a.x2, b.x2)}; }
inline IntVec operator-(IntVec a) { return {checked_neg(a.x1), checked_neg(a.x2)}; }
inline IntVec operator*(Int k, IntVec a) { return {checked_mul(k, a.x1), checked_mul(k, a.x2)}; }

inline Int cross(IntVec a, IntVec b) { return det2(a.x1, a.x2, b.x1, b.x2); }
inline Wide cross_wide(IntVec a, IntVec b) {
  return static_cast<Wide>(a.x1) * b.x2 - static_cast<Wide>(a.x2) * b.x1;
}
inline Wide dot_wide(IntVec a, IntVec b) {
  return static_cast<Wide>(a.x1) * b.x1 + static_cast<Wide>(a.x2) * b.x2;
}

/// Orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear.
inline int orientation(IntVec a, IntVec b, IntVec c) {
  Wide v = cross_wide(b - a, c - a);
  return (v > 0) - (v < 0);
}

/// gcd(|x1|, |x2|): the number of lattice steps along the vector.
inline Int content(IntVec v) { return gcd(v.x1, v.x2); }
inline bool is_primitive(IntVec v) { return content(v) == 1; }

inline constexpr IntVec kE1{1, 0};
inline constexpr IntVec kE2{0, 1};

/// 2x2 integer matrix. Columns are basis vectors: column 1 = (a11, a21).
struct IntMat2 {
  Int a11 = 1, a12 = 0;
  Int a21 = 0, a22 = 1;

  static IntMat2 identity() { return {}; }
  static IntMat2 from_columns(IntVec c1, IntVec c2) { return {c1.x1, c2.x1, c1.x2, c2.x2}; }
  static IntMat2 diagonal(Int d1, Int d2) { return {d1, 0, 0, d2}; }

  IntVec col1() const { return {a11, a21}; }
  IntVec col2() const { return {a12, a22}; }

  Int det() const { return det2(a11, a12, a21, a22); }
  bool is_unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
  }
  /// Inverse of a unimodular matrix; throws GeometryError otherwise.
  IntMat2 unimodular_inverse() const;

  friend bool operator==(const IntMat2&, const IntMat2&) = default;
  std::string to_string() const;
};

IntMat2 operator*(const IntMat2& a, const IntMat2& b);
IntVec operator*(const IntMat2& m, IntVec v);

struct InvariantFactors {
  Int delta = 1;
  Int n = 1;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// (gcd of entries, |det| / gcd). Throws GeometryError("degenerate lattice") if det == 0.
InvariantFactors invariant_factors(const IntMat2& a);

struct SmithForm {
  IntMat2 U;
  IntMat2 D;
  IntMat2 V;
};

/// U * A * V == D == diag(delta, n) with U, V unimodular and delta | n.
SmithForm smith_normal_form(const IntMat2& a);

/// Unimodular M with M * f == g, for primitive f and g.
///
/// The matrix is canonical: M = C(g)^-1 * C(f), where C(h) has first row
/// (h2, -h1) and second row the Bezout pair (p, q), p*h1 + q*h2 = 1, with p the
/// smallest nonnegative choice.
IntMat2 primitive_to(IntVec f, IntVec g);

/// A full-rank sublattice of Z^2, given by a basis (columns of `basis`).
class Sublattice {
 public:
  /// Lower-triangular Hermite basis: L = { (u*a, u*b + v*d) : u, v in Z },
  /// with a, d > 0 and 0 <= b < d.
  struct Hermite {
    Int a;
    Int b;
    Int d;
  };

  explicit Sublattice(const IntMat2& basis);

  /// delta*Z x n*Z.
  static Sublattice diagonal(Int delta, Int n);
  /// n*Z^2.
  static Sublattice scaled(Int n) { return diagonal(n, n); }
  static Sublattice integer() { return diagonal(1, 1); }

  const IntMat2& basis() const { return basis_; }
  Int delta() const { return factors_.delta; }
  Int n() const { return factors_.n; }
  InvariantFactors factors() const { return factors_; }
  Int det() const { return checked_mul(factors_.delta, factors_.n); }
  bool is_proper() const { return det() >= 2; }
  const Hermite& hermite() const { return hermite_; }

  /// Exact membership by solving basis * u == p.
  bool contains(IntVec p) const;

  /// If the vertical line x1 = x meets L, the residue r in [0, d) such that
  /// (x, y) is in L iff y == r (mod d).
  std::optional<Int> column_residue(Int x) const;

  std::string to_string() const;

 private:
  IntMat2 basis_;
  InvariantFactors factors_;
  Hermite hermite_;
};

inline bool lattice_contains(const Sublattice& l, IntVec p) { return l.contains(p); }

struct Steps {
  Int small_f1;
  Int large_f1;
  Int small_f2;
  Int large_f2;
};

/// Small and large steps of L with respect to the basis (f1, f2) of Z^2.
Steps steps(const Sublattice& l, IntVec f1, IntVec f2);

/// x -> linear * x + translation.
struct AffineMap {
  IntMat2 linear;
  IntVec translation;

  static AffineMap identity() { return {}; }
  static AffineMap translate(IntVec t) { return {IntMat2::identity(), t}; }

  IntVec apply(IntVec x) const { return linear * x + translation; }
  /// (this o inner)(x) = this(inner(x)).
  AffineMap after(const AffineMap& inner) const {
    return {linear * inner.linear, linear * inner.translation + translation};
  }
  /// Unimodular linear part and translation in L.
  bool is_automorphism_of(const Sublattice& l) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

}  // namespace latfree
