#include "latfree/lattice.hpp"

#include <utility>

namespace latfree {

std::string IntVec::to_string() const {
  return "(" + std::to_string(x1) + "," + std::to_string(x2) + ")";
}

std::string IntMat2::to_string() const {
  return "[[" + std::to_string(a11) + "," + std::to_string(a12) + "],[" + std::to_string(a21) + "," +
         std::to_string(a22) + "]]";
}

IntMat2 operator*(const IntMat2& a, const IntMat2& b) {
  auto dot = [](Int p, Int q, Int r, Int s) {
    return narrow(static_cast<Wide>(p) * q + static_cast<Wide>(r) * s);
  };
  return {dot(a.a11, b.a11, a.a12, b.a21), dot(a.a11, b.a12, a.a12, b.a22),
          dot(a.a21, b.a11, a.a22, b.a21), dot(a.a21, b.a12, a.a22, b.a22)};
}

IntVec operator*(const IntMat2& m, IntVec v) {
  return {narrow(static_cast<Wide>(m.a11) * v.x1 + static_cast<Wide>(m.a12) * v.x2),
          narrow(static_cast<Wide>(m.a21) * v.x1 + static_cast<Wide>(m.a22) * v.x2)};
}

IntMat2 IntMat2::unimodular_inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw GeometryError("matrix is not unimodular: " + to_string());
  // adj / det, det = +-1
  IntMat2 adj{a22, checked_neg(a12), checked_neg(a21), a11};
  if (d == 1) return adj;
  return {checked_neg(adj.a11), checked_neg(adj.a12), checked_neg(adj.a21), checked_neg(adj.a22)};
}

InvariantFactors invariant_factors(const IntMat2& a) {
  Int d = a.det();
  if (d == 0) throw GeometryError("degenerate lattice");
  Int g = gcd(gcd(a.a11, a.a12), gcd(a.a21, a.a22));
  return {g, checked_abs(d) / g};
}

namespace {

void swap_rows(IntMat2& m) {
  std::swap(m.a11, m.a21);
  std::swap(m.a12, m.a22);
}

void swap_cols(IntMat2& m) {
  std::swap(m.a11, m.a12);
  std::swap(m.a21, m.a22);
}

}  // namespace

SmithForm smith_normal_form(const IntMat2& a) {
  if (a.det() == 0) throw GeometryError("degenerate lattice");
  IntMat2 d = a;
  IntMat2 u = IntMat2::identity();
  IntMat2 v = IntMat2::identity();

  for (;;) {
    if (d.a11 == 0) {
      if (d.a21 != 0) {
        swap_rows(d);
        swap_rows(u);
      } else {
        swap_cols(d);
        swap_cols(v);
      }
    }
    if (d.a21 != 0) {
      ExtGcd e = ext_gcd(d.a11, d.a21);
      IntMat2 r{e.x, e.y, checked_neg(d.a21 / e.g), d.a11 / e.g};
      d = r * d;
      u = r * u;
    }
    if (d.a12 != 0) {
      ExtGcd e = ext_gcd(d.a11, d.a12);
      IntMat2 c{e.x, checked_neg(d.a12 / e.g), e.y, d.a11 / e.g};
      d = d * c;
      v = v * c;
    }
    if (d.a21 != 0) continue;
    if (d.a22 % d.a11 != 0) {
      // row1 += row2 brings a22 into the first row; the next pass shrinks a11 to a gcd
      IntMat2 r{1, 1, 0, 1};
      d = r * d;
      u = r * u;
      continue;
    }
    break;
  }
  if (d.a11 < 0) {
    IntMat2 r = IntMat2::diagonal(-1, 1);
    d = r * d;
    u = r * u;
  }
  if (d.a22 < 0) {
    IntMat2 r = IntMat2::diagonal(1, -1);
    d = r * d;
    u = r * u;
  }
  return {u, d, v};
}

namespace {

// Unimodular C with C * h == e2: first row (h2, -h1), second row Bezout (p, q).
IntMat2 to_e2(IntVec h) {
  Int p, q;
  if (h.x2 == 0) {
    p = h.x1;  // h1 = +-1
    q = 0;
  } else {
    ExtGcd e = ext_gcd(h.x1, h.x2);
    Int m = checked_abs(h.x2);
    p = floor_mod(e.x, m);
    q = narrow((1 - static_cast<Wide>(p) * h.x1) / h.x2);
  }
  return {h.x2, checked_neg(h.x1), p, q};
}

}  // namespace

IntMat2 primitive_to(IntVec f, IntVec g) {
  if (!is_primitive(f) || !is_primitive(g)) throw GeometryError("vector not primitive");
  return to_e2(g).unimodular_inverse() * to_e2(f);
}

Sublattice::Sublattice(const IntMat2& basis) : basis_(basis), factors_(invariant_factors(basis)) {
  IntVec c1 = basis.col1();
  IntVec c2 = basis.col2();
  // Column operations until the first row reads (a, 0).
  if (c1.x1 == 0) {
    std::swap(c1, c2);
  } else if (c2.x1 != 0) {
    ExtGcd e = ext_gcd(c1.x1, c2.x1);
    IntVec n1 = e.x * c1 + e.y * c2;
    IntVec n2 = (checked_neg(c2.x1 / e.g)) * c1 + (c1.x1 / e.g) * c2;
    c1 = n1;
    c2 = n2;
  }
  if (c1.x1 < 0) c1 = -c1;
  if (c2.x2 < 0) c2 = -c2;
  Int b = floor_mod(c1.x2, c2.x2);
  hermite_ = {c1.x1, b, c2.x2};
}

Sublattice Sublattice::diagonal(Int delta, Int n) {
  if (delta <= 0 || n <= 0) throw GeometryError("degenerate lattice");
  return Sublattice(IntMat2::diagonal(delta, n));
}

bool Sublattice::contains(IntVec p) const {
  const IntMat2& m = basis_;
  Wide det = static_cast<Wide>(m.a11) * m.a22 - static_cast<Wide>(m.a12) * m.a21;
  Wide u1 = static_cast<Wide>(m.a22) * p.x1 - static_cast<Wide>(m.a12) * p.x2;
  Wide u2 = static_cast<Wide>(m.a11) * p.x2 - static_cast<Wide>(m.a21) * p.x1;
  return u1 % det == 0 && u2 % det == 0;
}

std::optional<Int> Sublattice::column_residue(Int x) const {
  if (x % hermite_.a != 0) return std::nullopt;
  Int u = x / hermite_.a;
  return narrow(((static_cast<Wide>(u) * hermite_.b) % hermite_.d + hermite_.d) % hermite_.d);
}

std::string Sublattice::to_string() const {
  return "lattice" + basis_.to_string() + " (delta=" + std::to_string(delta()) +
         ", n=" + std::to_string(n()) + ")";
}

Steps steps(const Sublattice& l, IntVec f1, IntVec f2) {
  IntMat2 frame = IntMat2::from_columns(f1, f2);
  if (!frame.is_unimodular()) throw GeometryError("(f1, f2) is not a basis of Z^2");
  // Coordinates of the generators of L in the basis (f1, f2).
  IntMat2 m = frame.unimodular_inverse() * l.basis();
  Int det = checked_abs(m.det());
  Int small1 = gcd(m.a11, m.a12);
  Int small2 = gcd(m.a21, m.a22);
  // {c : m*c on the f1-axis} is generated by (m22, -m21)/small2, whose image
  // has f1-coordinate det/small2; symmetrically for f2.
  return {small1, det / small2, small2, det / small1};
}

bool AffineMap::is_automorphism_of(const Sublattice& l) const {
  if (!linear.is_unimodular()) return false;
  return l.contains(linear * l.basis().col1()) && l.contains(linear * l.basis().col2()) &&
         l.contains(translation);
}

}  // namespace latfree
