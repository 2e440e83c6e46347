#include <doctest.h>

#include "latfree/reduction.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace latfree;

namespace {

const Polygon kDiamond = Polygon::from_ccw({{1, 0}, {2, 1}, {1, 2}, {0, 1}});
const Polygon kQuad = Polygon::from_ccw({{1, -1}, {4, 1}, {2, 4}, {-1, 2}});
const Polygon kOctagon = Polygon::from_ccw({{1, 0}, {2, 0}, {4, 1}, {4, 2}, {2, 3}, {1, 3}, {-1, 2}, {-1, 1}});

Int diameter_oracle(const Polygon& p) {
  std::vector<IntVec> pts = oracle::points_in(p.vertices());
  Int best = 0;
  for (const IntVec& a : pts)
    for (const IntVec& b : pts) best = std::max(best, oracle::gcd_abs(b.x1 - a.x1, b.x2 - a.x2));
  return best;
}

void check_classification(const Polygon& p, Int n) {
  Classification c = classify_type(p, n);
  CHECK(c.map.linear.is_unimodular());
  CHECK(c.map.is_automorphism_of(Sublattice::scaled(n)));
  CHECK(c.image == apply_affine(p, c.map));
  CHECK(corpus::type_clause(c.image, c.tag.type, n));
  CHECK(c.tag.n == n);
}

}  // namespace

TEST_CASE("lattice diameter examples") {
  CHECK(lattice_diameter(Polygon::from_ccw({{0, 0}, {1, 0}, {0, 1}})).length == 1);
  DiameterWitness t = lattice_diameter(Polygon::from_ccw({{0, 0}, {3, 0}, {0, 1}}));
  CHECK(t.length == 3);
  CHECK(t.endpoints == Segment({0, 0}, {3, 0}));
  CHECK(lattice_diameter(Polygon::from_ccw({{0, 0}, {2, 0}, {2, 2}, {0, 2}})).length == 2);
}

TEST_CASE("lattice diameter agrees with brute force and is affine invariant") {
  auto rng = gen::rng_for(31);
  for (int i = 0; i < 150; ++i) {
    Polygon p = gen::random_polygon(rng, 5);
    DiameterWitness w = lattice_diameter(p);
    CHECK(w.length == diameter_oracle(p));
    CHECK(p.contains(w.endpoints.a));
    CHECK(p.contains(w.endpoints.b));
    CHECK(content(w.endpoints.b - w.endpoints.a) == w.length);
    AffineMap m{gen::random_unimodular(rng), {gen::uniform(rng, -3, 3), gen::uniform(rng, -3, 3)}};
    CHECK(lattice_diameter(apply_affine(p, m)).length == w.length);
  }
}

TEST_CASE("slab normalization examples") {
  NormalizationResult d = slab_normalize(kDiamond, 2);
  CHECK(check_normalization(kDiamond, d, 2).ok());
  Polygon shifted = apply_affine(kDiamond, AffineMap::translate({10, 0}));
  NormalizationResult s = slab_normalize(shifted, 2);
  CHECK(check_normalization(shifted, s, 2).ok());
  CHECK(s.diameter_line_c >= 0);
  CHECK(s.diameter_line_c <= 1);
  NormalizationResult o = slab_normalize(kOctagon, 3);
  CHECK(check_normalization(kOctagon, o, 3).ok());
  for (const IntVec& v : o.image.vertices()) {
    CHECK(v.x1 >= -2);
    CHECK(v.x1 <= 5);
  }
  CHECK_THROWS_WITH_AS(slab_normalize(Polygon::from_ccw({{0, 0}, {1, 0}, {0, 1}}), 2), "polygon not lattice-free",
                       GeometryError);
}

TEST_CASE("normalization check detects a broken result") {
  NormalizationResult r = slab_normalize(kOctagon, 3);
  r.diameter_line_c = 7;
  CHECK_FALSE(check_normalization(kOctagon, r, 3).ok());
  NormalizationResult bad = slab_normalize(kOctagon, 3);
  bad.map = AffineMap::translate({1, 0});
  CHECK_FALSE(check_normalization(kOctagon, bad, 3).ok());
}

TEST_CASE("classification examples") {
  Classification o = classify_type(kOctagon, 3);
  CHECK(o.tag == TypeTag{PolygonType::I, 3});
  CHECK(classify_type(kDiamond, 2).tag.type == PolygonType::I);
  Classification q = classify_type(kQuad, 3);
  CHECK(q.tag.type == PolygonType::II);
  CHECK(satisfies_type(kQuad, PolygonType::II, 3));
  check_classification(kQuad, 3);
  check_classification(kOctagon, 3);
}

TEST_CASE("type names round-trip") {
  for (PolygonType t : {PolygonType::I, PolygonType::II, PolygonType::III, PolygonType::IV, PolygonType::V,
                        PolygonType::VI})
    CHECK(parse_polygon_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_polygon_type("VII"), GeometryError);
}

TEST_CASE("satisfies_type agrees with the clause reading on random polygons") {
  auto rng = gen::rng_for(32);
  for (int i = 0; i < 400; ++i) {
    Polygon p = gen::random_polygon(rng, 7);
    for (Int n : {2, 3, 4})
      for (PolygonType t : {PolygonType::I, PolygonType::II, PolygonType::III, PolygonType::IV, PolygonType::V,
                            PolygonType::VI})
        CHECK(satisfies_type(p, t, n) == corpus::type_clause(p, t, n));
  }
}

TEST_CASE("slab lemma") {
  // Triangle with its diameter on the x1 axis, rotated so it is vertical.
  Polygon t = Polygon::from_ccw({{0, 0}, {3, 0}, {0, 1}});
  IntMat2 r = primitive_to({1, 0}, {0, 1});
  Polygon rt = apply_affine(t, AffineMap{r, {0, 0}});
  CHECK(check_slab_lemma(rt));
  CHECK(check_slab_lemma(Polygon::from_ccw({{0, 0}, {2, 0}, {2, 2}, {0, 2}})));
  CHECK(check_slab_lemma(Polygon::from_ccw({{0, 0}, {1, 0}, {0, 1}})));
  CHECK_THROWS_AS(check_slab_lemma(Polygon::from_ccw({{1, 1}, {2, 1}, {1, 2}})), GeometryError);
}

TEST_CASE("forbidden segment pairs") {
  CHECK(check_imposs(kQuad, 3));
  CHECK(check_imposs(kOctagon, 3));
  // A thin parallelogram split by both segments of the first pair: its chords
  // are [-2/3, -1/3] x {3} and [10/3, 11/3] x {0}.
  Polygon big = convex_hull(std::vector<IntVec>{{-2, 4}, {6, -2}, {5, -1}, {-3, 5}});
  CHECK(segment_splits(big, Segment({0, 3}, {-3, 3})));
  CHECK(segment_splits(big, Segment({3, 0}, {6, 0})));
  CHECK_FALSE(check_imposs(big, 3));
}

TEST_CASE("normalization and classification over the n = 4 corpus") {
  const Int n = 4;
  const std::vector<Polygon> polys = corpus::free_polygons(Sublattice::scaled(n), {-1, 5, -1, 5});
  REQUIRE(polys.size() > 1000);
  std::size_t failures = 0;
  for (const Polygon& p : polys) {
    NormalizationResult r = slab_normalize(p, n);
    if (!check_normalization(p, r, n).ok() || !check_imposs(r.image, n)) ++failures;
    Classification c = classify_type(p, n);
    if (!corpus::type_clause(c.image, c.tag.type, n) || !c.map.is_automorphism_of(Sublattice::scaled(n)))
      ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("slab lemma over normalized corpus polygons") {
  // Place the diameter segment at 0 and (0, l) with a translation after normalization.
  for (const Polygon& p : corpus::scaled_corpus(2)) {
    NormalizationResult r = slab_normalize(p, 2);
    DiameterWitness w = lattice_diameter(r.image);
    IntVec lo = std::min(w.endpoints.a, w.endpoints.b);
    IntVec hi = std::max(w.endpoints.a, w.endpoints.b);
    if (lo.x1 != hi.x1) continue;
    Polygon moved = apply_affine(r.image, AffineMap::translate(-lo));
    CHECK(check_slab_lemma(moved));
  }
}
