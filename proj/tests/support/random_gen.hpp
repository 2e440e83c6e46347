#pragma once

// Seeded instance generators for the property suites. Every instance is built
// from its own seed so a failure can be replayed in isolation.

#include <algorithm>
#include <random>
#include <vector>

#include "latfree/polygon.hpp"
#include "latfree/slopes.hpp"

namespace gen {

using latfree::Int;
using latfree::IntMat2;
using latfree::IntVec;

inline constexpr std::uint64_t kBaseSeed = 0x5eed'2026'0001ULL;

inline std::mt19937_64 rng_for(std::uint64_t instance) { return std::mt19937_64(kBaseSeed ^ (instance * 0x9e3779b97f4a7c15ULL)); }

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

/// Hull of 3..20 random points in [-r, r]^2 (retrying degenerate samples).
inline latfree::Polygon random_polygon(std::mt19937_64& rng, Int r = 15) {
  for (;;) {
    const int k = static_cast<int>(uniform(rng, 3, 20));
    std::vector<IntVec> pts;
    for (int i = 0; i < k; ++i) pts.push_back({uniform(rng, -r, r), uniform(rng, -r, r)});
    try {
      return latfree::convex_hull(pts);
    } catch (const latfree::GeometryError&) {
    }
  }
}

/// Product of a few random elementary unimodular matrices.
inline IntMat2 random_unimodular(std::mt19937_64& rng, int factors = 4) {
  IntMat2 m = IntMat2::identity();
  for (int i = 0; i < factors; ++i) {
    const Int k = uniform(rng, -2, 2);
    IntMat2 e;
    switch (uniform(rng, 0, 3)) {
      case 0: e = {1, k, 0, 1}; break;
      case 1: e = {1, 0, k, 1}; break;
      case 2: e = {0, 1, 1, 0}; break;
      default: e = {-1, 0, 0, 1}; break;
    }
    m = e * m;
  }
  return m;
}

/// Sublattices (in frame coordinates) used for slope vertices; the first is Z^2.
inline std::vector<IntMat2> coordinate_lattices() {
  return {
      IntMat2::identity(), IntMat2::diagonal(2, 2), IntMat2::diagonal(1, 2), IntMat2::diagonal(2, 1),
      IntMat2::diagonal(3, 3), {1, 0, 1, 2}, {1, 0, 1, 3}, {1, 0, 2, 3},
      {1, 0, -1, 2}, {1, 0, -2, 3}, {1, 0, -1, 3},
  };
}

struct SlopeInstance {
  latfree::Frame frame;
  latfree::Slope slope;
  IntMat2 coord_lattice;       // vertices lie in basis * coord_lattice * Z^2
  std::optional<latfree::Sublattice> lattice;
  std::optional<std::pair<Int, Int>> am;  // set when coord_lattice has basis (1,-a),(0,m)
};

/// A slope with edges sampled from a coordinate sublattice (sorted by slope,
/// duplicates of direction dropped), mapped by a random basis, and a frame
/// origin found by rejection sampling so that the frame splits it.
inline SlopeInstance random_splitting_slope(std::mt19937_64& rng) {
  const auto lattices = coordinate_lattices();
  for (;;) {
    const IntMat2 m = lattices[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(lattices.size()) - 1))];
    const latfree::Sublattice coord(m);
    const int edges = static_cast<int>(uniform(rng, 1, 7));
    const Int range = 6 * std::max<Int>(1, coord.n());
    std::vector<IntVec> es;
    for (int tries = 0; static_cast<int>(es.size()) < edges && tries < 400; ++tries) {
      IntVec a{uniform(rng, 1, range), uniform(rng, -range, -1)};
      // Bias towards a2 = -1 runs, which drive the s/t case split.
      if (uniform(rng, 0, 3) == 0) a.x2 = -1;
      if (coord.contains(a)) es.push_back(a);
    }
    if (es.empty()) continue;
    std::sort(es.begin(), es.end(), [](IntVec a, IntVec b) { return latfree::cross_wide(a, b) > 0; });
    es.erase(std::unique(es.begin(), es.end(), [](IntVec a, IntVec b) { return latfree::cross_wide(a, b) == 0; }),
             es.end());

    // Start vertex in the coordinate lattice.
    const Int u1 = uniform(rng, -3, 3), u2 = uniform(rng, -3, 3);
    const IntVec start = m * IntVec{u1, u2};
    std::vector<IntVec> cs{start};
    for (const IntVec& a : es) cs.push_back(cs.back() + a);

    // Origin candidates: integer points of the slope's coordinate box.
    const IntVec v = cs.front(), w = cs.back();
    std::vector<IntVec> origins;
    for (Int x = v.x1 + 1; x <= w.x1 - 1; ++x)
      for (Int y = w.x2 + 1; y <= v.x2 - 1; ++y) origins.push_back({x, y});
    if (origins.empty()) continue;
    const IntVec o = origins[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(origins.size()) - 1))];

    const IntMat2 b = random_unimodular(rng);
    std::vector<IntVec> vs;
    for (const IntVec& c : cs) vs.push_back(b * c);
    latfree::Slope q = latfree::validate_slope(vs, b.col1(), b.col2());
    latfree::Frame f{b * o, b.col1(), b.col2()};
    if (!latfree::frame_splits(f, q)) continue;

    SlopeInstance inst{f, q, m, std::nullopt, std::nullopt};
    if (coord.is_proper()) inst.lattice = latfree::Sublattice(b * m);
    if (m.a12 == 0 && m.a11 == 1 && m.a22 >= 1) {
      // basis (1, a21), (0, a22) = (f1 - a f2, m f2) with a = -a21 taken mod m into [1, m].
      const Int mm = m.a22;
      Int a = latfree::floor_mod(-m.a21, mm);
      if (a == 0) a = mm;
      inst.am = std::pair{a, mm};
    }
    return inst;
  }
}

}  // namespace gen
