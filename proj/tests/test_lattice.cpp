#include <doctest.h>

#include <cmath>
#include <limits>

#include "latfree/lattice.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace latfree;

TEST_CASE("checked arithmetic reports overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), OverflowError);
  CHECK_THROWS_AS((IntVec{big, 0} + IntVec{1, 0}), OverflowError);
  CHECK(det2(big, 0, 0, 1) == big);
  CHECK_THROWS_AS(det2(big, 2, 0, 2), OverflowError);
}

TEST_CASE("floor and ceil division round towards the correct side") {
  for (Int a = -20; a <= 20; ++a)
    for (Int b : {-7, -3, -1, 1, 2, 5}) {
      const double q = static_cast<double>(a) / static_cast<double>(b);
      CHECK(floor_div(a, b) == static_cast<Int>(std::floor(q)));
      CHECK(ceil_div(a, b) == static_cast<Int>(std::ceil(q)));
      if (b > 0) {
        CHECK(floor_mod(a, b) >= 0);
        CHECK(floor_mod(a, b) < b);
      }
    }
}

TEST_CASE("extended gcd yields a Bezout identity") {
  for (Int a = -15; a <= 15; ++a)
    for (Int b = -15; b <= 15; ++b) {
      ExtGcd e = ext_gcd(a, b);
      CHECK(e.g == oracle::gcd_abs(a, b));
      CHECK(e.x * a + e.y * b == e.g);
    }
}

TEST_CASE("rationals are normalized and ordered exactly") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(IntMat2::diagonal(2, 2)) == InvariantFactors{2, 2});
  CHECK(invariant_factors(IntMat2::identity()) == InvariantFactors{1, 1});
  CHECK(invariant_factors(IntMat2{2, 4, 0, 6}) == InvariantFactors{2, 6});
  CHECK_THROWS_WITH_AS(invariant_factors(IntMat2{1, 2, 2, 4}), "degenerate lattice", GeometryError);
}

namespace {

void check_snf(const IntMat2& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(s.U.is_unimodular());
  CHECK(s.V.is_unimodular());
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.D.a12 == 0);
  CHECK(s.D.a21 == 0);
  CHECK(s.D.a11 > 0);
  CHECK(s.D.a22 % s.D.a11 == 0);
  InvariantFactors f = invariant_factors(a);
  CHECK(s.D.a11 == f.delta);
  CHECK(s.D.a22 == f.n);
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm id = smith_normal_form(IntMat2::identity());
  CHECK(id.D == IntMat2::identity());
  CHECK(smith_normal_form(IntMat2{2, 1, 0, 3}).D == IntMat2::diagonal(1, 6));
  CHECK(smith_normal_form(IntMat2{0, 3, 3, 0}).D == IntMat2::diagonal(3, 3));
  check_snf(IntMat2{2, 1, 0, 3});
  check_snf(IntMat2{0, 3, 3, 0});
  check_snf(IntMat2{-4, 6, 10, -2});
}

TEST_CASE("smith normal form on random nonsingular matrices") {
  auto rng = gen::rng_for(11);
  int tested = 0;
  while (tested < 500) {
    IntMat2 a{gen::uniform(rng, -30, 30), gen::uniform(rng, -30, 30), gen::uniform(rng, -30, 30),
              gen::uniform(rng, -30, 30)};
    if (a.det() == 0) continue;
    ++tested;
    check_snf(a);
    // Oracle: delta is the gcd of the entries, delta * n = |det|.
    InvariantFactors f = invariant_factors(a);
    Int g = oracle::gcd_abs(oracle::gcd_abs(a.a11, a.a12), oracle::gcd_abs(a.a21, a.a22));
    CHECK(f.delta == g);
    CHECK(f.delta * f.n == checked_abs(a.det()));
  }
}

TEST_CASE("primitive_to maps f to g unimodularly") {
  CHECK(primitive_to({0, 1}, {0, 1}) == IntMat2::identity());
  IntMat2 r = primitive_to({1, 0}, {0, 1});
  CHECK(r * IntVec{1, 0} == IntVec{0, 1});
  CHECK(r.is_unimodular());
  IntMat2 m = primitive_to({3, 5}, {0, 1});
  CHECK(m * IntVec{3, 5} == IntVec{0, 1});
  CHECK(m.det() == 1);
  CHECK_THROWS_WITH_AS(primitive_to({2, 4}, {0, 1}), "vector not primitive", GeometryError);
  CHECK_THROWS_AS(primitive_to({1, 0}, {0, 0}), GeometryError);

  auto rng = gen::rng_for(12);
  for (int i = 0; i < 300; ++i) {
    IntVec f{gen::uniform(rng, -40, 40), gen::uniform(rng, -40, 40)};
    IntVec g{gen::uniform(rng, -40, 40), gen::uniform(rng, -40, 40)};
    IntVec h{gen::uniform(rng, -40, 40), gen::uniform(rng, -40, 40)};
    if (!is_primitive(f) || !is_primitive(g) || !is_primitive(h)) continue;
    IntMat2 fg = primitive_to(f, g), gh = primitive_to(g, h);
    CHECK(fg.is_unimodular());
    CHECK(fg * f == g);
    CHECK((gh * fg) * f == h);
  }
}

TEST_CASE("lattice membership") {
  CHECK(Sublattice::scaled(2).contains({4, 6}));
  CHECK_FALSE(Sublattice::scaled(2).contains({3, 6}));
  Sublattice l(IntMat2::from_columns({1, 1}, {0, 3}));
  CHECK(l.contains({1, 1}));
  CHECK(lattice_contains(l, {2, 5}));
  CHECK_FALSE(l.contains({1, 2}));
}

TEST_CASE("lattice membership agrees with enumeration of lattice points") {
  const IntMat2 bases[] = {IntMat2::diagonal(2, 2), IntMat2::diagonal(1, 3), IntMat2::from_columns({1, 1}, {0, 3}),
                           IntMat2::from_columns({2, 1}, {1, 3}), IntMat2{3, -1, 1, 2}};
  for (const IntMat2& b : bases) {
    Sublattice l(b);
    for (Int x = -20; x <= 20; ++x)
      for (Int y = -20; y <= 20; ++y) CHECK(l.contains({x, y}) == oracle::in_lattice_enum(b, {x, y}, 45));
  }
}

TEST_CASE("sublattice invariants") {
  Sublattice l(IntMat2{2, 4, 0, 6});
  CHECK(l.delta() == 2);
  CHECK(l.n() == 6);
  CHECK(l.det() == 12);
  CHECK(l.is_proper());
  CHECK_FALSE(Sublattice::integer().is_proper());
  CHECK_THROWS_AS(Sublattice(IntMat2{1, 2, 2, 4}), GeometryError);
}

TEST_CASE("steps examples") {
  Steps s = steps(Sublattice::scaled(2), kE1, kE2);
  CHECK(s.small_f1 == 2);
  CHECK(s.large_f2 == 2);
  CHECK(s.small_f1 * s.large_f2 == 4);
  Steps z = steps(Sublattice::integer(), {2, 1}, {1, 1});
  CHECK(z.small_f1 == 1);
  CHECK(z.large_f1 == 1);
  CHECK(z.small_f2 == 1);
  CHECK(z.large_f2 == 1);
  Steps t = steps(Sublattice(IntMat2::from_columns({1, 1}, {0, 2})), kE1, kE2);
  CHECK(t.small_f1 == 1);
  CHECK(t.large_f2 == 2);
  CHECK_THROWS_AS(steps(Sublattice::scaled(2), {2, 0}, kE2), GeometryError);
}

TEST_CASE("steps agree with direct generator search") {
  auto rng = gen::rng_for(13);
  int tested = 0;
  while (tested < 300) {
    IntMat2 a{gen::uniform(rng, -6, 6), gen::uniform(rng, -6, 6), gen::uniform(rng, -6, 6), gen::uniform(rng, -6, 6)};
    if (a.det() == 0) continue;
    ++tested;
    Sublattice l(a);
    IntMat2 b = gen::random_unimodular(rng, 3);
    IntVec f1 = b.col1(), f2 = b.col2();
    Steps s = steps(l, f1, f2);
    const Int lim = l.det();
    CHECK(s.large_f1 == oracle::large_step(a, f1, lim));
    CHECK(s.large_f2 == oracle::large_step(a, f2, lim));
    CHECK(s.small_f1 == oracle::small_step(a, f1, f2, lim));
    CHECK(s.small_f2 == oracle::small_step(a, f2, f1, lim));
    CHECK(s.small_f1 <= s.large_f1);
    CHECK(s.small_f1 * s.large_f2 == l.det());
    CHECK(s.small_f2 * s.large_f1 == l.det());
  }
}

TEST_CASE("affine automorphisms") {
  AffineMap reflect{IntMat2::diagonal(-1, 1), {3, 0}};
  CHECK(reflect.is_automorphism_of(Sublattice::scaled(3)));
  CHECK_FALSE(reflect.is_automorphism_of(Sublattice::scaled(2)));
  CHECK_FALSE((AffineMap{IntMat2::diagonal(2, 1), {0, 0}}).is_automorphism_of(Sublattice::scaled(2)));
  AffineMap shear{{1, 0, 1, 1}, {0, 0}};
  CHECK(shear.is_automorphism_of(Sublattice::scaled(5)));
  // The shear does not preserve delta Z x n Z with delta != n.
  CHECK_FALSE(shear.is_automorphism_of(Sublattice::diagonal(1, 2)));
  AffineMap comp = reflect.after(AffineMap::translate({3, 3}));
  CHECK(comp.apply({1, 1}) == IntVec{-1, 4});
}
