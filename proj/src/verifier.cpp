#include "latfree/verifier.hpp"

#include <algorithm>
#include <chrono>

#include "latfree/slopes.hpp"

namespace latfree {

Int nu(Int delta, Int n) {
  if (delta < 1 || n < 1 || n % delta != 0) throw GeometryError("invalid invariant factors (" + std::to_string(delta) + "," + std::to_string(n) + ")");
  if (checked_mul(delta, n) < 2) throw GeometryError("nu needs a proper sublattice");
  return checked_sub(checked_add(checked_mul(2, n), 2 * std::min<Int>(delta, 3)), 3);
}

Polygon construct_extremal(Int delta, Int n) {
  const Int target = nu(delta, n) - 1;
  if (target < 3) throw GeometryError("no extremal polygon exists");
  std::vector<IntVec> pts;
  if (delta >= 3) {
    for (Int j = 0; j <= n; ++j) {
      pts.push_back({1 - j * (n - j), j});
      pts.push_back({2 + j * (n - j), j});
    }
  } else if (delta == 2) {
    for (Int j = 0; j <= n; ++j) {
      pts.push_back({1 - j * (n - j), j});
      pts.push_back({1 + j * (n - j), j});
    }
  } else {
    for (Int j = 1; j <= n - 1; ++j) {
      pts.push_back({-(j - 1) * (n - 1 - j), j});
      pts.push_back({1 + (j - 1) * (n - 1 - j), j});
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon p = convex_hull(pts);
  if (static_cast<Int>(p.size()) != target)
    throw GeometryError("extremal construction produced " + std::to_string(p.size()) + " vertices");
  return p;
}

VerificationReport verify_main_theorem(const Sublattice& l, const SearchBox& box, unsigned jobs) {
  if (!l.is_proper()) throw GeometryError("verification needs a proper sublattice");
  const auto start = std::chrono::steady_clock::now();
  EnumerationOptions opt;
  opt.jobs = jobs;
  MaxSearchResult r = max_free_polygon(l, box, opt);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Int v = nu(l.delta(), l.n());
  return {l, box, r.max_vertices, r.witness, v, r.max_vertices <= v - 1, r.visited, elapsed};
}

int vertex_lattice_b(const Sublattice& gamma, Int n) {
  const InvariantFactors f = gamma.factors();
  if (f.delta == 1 && f.n == 1) return 0;
  if (f.delta == 1 && n % 2 == 0 && f.n == n / 2) return 1;
  if (f.delta == 1 && f.n == n) return 2;
  throw GeometryError("vertex lattice " + gamma.to_string() + " is not Z^2, a (1,n/2)- or a (1,n)-lattice for n = " +
                      std::to_string(n));
}

namespace {

void require_vertices_in(const Polygon& p, const Sublattice& gamma) {
  for (const IntVec& v : p.vertices())
    if (!gamma.contains(v)) throw GeometryError("polygon vertex " + v.to_string() + " is not in " + gamma.to_string());
}

}  // namespace

CheckReport check_subtheorem_C(const Polygon& p, const TypeTag& tag, const Sublattice& vertex_lattice) {
  CheckReport rep("type-bound");
  rep.note("polygon", p.to_string());
  rep.note("type", std::string(to_string(tag.type)) + "_" + std::to_string(tag.n));
  rep.note("vertex lattice", vertex_lattice.to_string());
  require_vertices_in(p, vertex_lattice);
  const int b = vertex_lattice_b(vertex_lattice, tag.n);
  rep.expect("N <= 2n + 2 - 2b", static_cast<Int>(p.size()), Relation::LE, 2 * tag.n + 2 - 2 * b);
  return rep;
}

CheckReport type_II_bound_pipeline(const Polygon& p, Int n, const Sublattice& vertex_lattice) {
  CheckReport rep("type-II");
  rep.note("polygon", p.to_string());
  rep.note("n", std::to_string(n));
  rep.note("vertex lattice", vertex_lattice.to_string());
  if (n < 3) throw GeometryError("type II pipeline needs n >= 3");
  require_vertices_in(p, vertex_lattice);
  const Int b = vertex_lattice_b(vertex_lattice, n);
  rep.note("b", std::to_string(b));

  const MaximalSlopes ms = maximal_slopes(p);
  const BoundingStats bs = bounding_stats(p);
  const Int pb = (b * b - 3 * b) / 2;
  const Frame frames[4] = {
      {{n, 0}, -kE1, kE2},
      {{n, n}, -kE1, -kE2},
      {{0, n}, kE1, -kE2},
      {{0, 0}, kE1, kE2},
  };
  const Int closed[4] = {
      -bs.S_plus + bs.E_minus + n + pb,
      -bs.N_plus - bs.E_plus + 2 * n + pb,
      bs.N_minus - bs.W_plus + n + pb,
      bs.S_minus + bs.W_minus + pb,
  };
  const Int gap[4] = {bs.S_plus - bs.S_minus, bs.E_plus - bs.E_minus, bs.N_plus - bs.N_minus,
                      bs.W_plus - bs.W_minus};

  Int sum_bound = 0;
  Int sum_m = 0;
  Int sum_nk = 0;
  for (int k = 1; k <= 4; ++k) {
    const std::string tag = "Q" + std::to_string(k);
    const Frame& frame = frames[k - 1];
    std::optional<int> hit;
    try {
      hit = frame_splits_maximal(p, frame);
    } catch (const GeometryError&) {
      hit.reset();
    }
    if (!rep.expect_true(tag + ": frame splits Q" + std::to_string(k), hit == k)) {
      sum_bound = checked_add(sum_bound, closed[k - 1]);
      continue;
    }
    const Slope& q = ms.Q[k - 1];
    const SlopeProfile prof = slope_profile(frame, q);
    const Int bound = prof.v.front().x2 + prof.v.back().x1 - (b >= 1 ? 1 : 0);
    rep.expect(tag + ": 2N_k <= v2 + w1 - [b>=1]", 2 * ms.N[k - 1], Relation::LE, bound);
    rep.expect(tag + ": frame bound equals boundary form", bound, Relation::EQ, closed[k - 1]);
    rep.absorb(check_th3_6(frame, q));
    if (b >= 1) rep.absorb(check_th3_8(frame, q, vertex_lattice));
    sum_bound = checked_add(sum_bound, bound);
    sum_m = checked_add(sum_m, ms.M[k - 1]);
    sum_nk = checked_add(sum_nk, ms.N[k - 1]);
  }
  if (!rep.ok()) return rep;

  const Int c = (b * b - b + 2) / 2;
  for (int k = 1; k <= 4; ++k)
    rep.expect("gap_" + std::to_string(k) + " >= c M_" + std::to_string(k), gap[k - 1], Relation::GE,
               c * ms.M[k - 1]);
  if (b == 2) {
    const Steps st = steps(vertex_lattice, kE1, kE2);
    rep.expect("large e1-step >= 2", st.large_f1, Relation::GE, 2);
    rep.expect("large e2-step >= 2", st.large_f2, Relation::GE, 2);
  }
  rep.absorb(check_step_bounds(p, vertex_lattice));

  const Int N = static_cast<Int>(p.size());
  const Int s0 = 2 * N;
  const Int s1 = 2 * sum_nk + 2 * sum_m;
  const Int s2 = sum_bound + 2 * sum_m;
  const Int s3 = 4 * n + 2 * b * b - 6 * b + (2 - c) * sum_m;
  const Int s4 = 4 * n + 4 - 4 * b;
  rep.expect("2N = sum 2N_k + sum 2M_k", s0, Relation::EQ, s1);
  rep.expect("sum 2N_k + sum 2M_k <= sum bounds + sum 2M_k", s1, Relation::LE, s2);
  rep.expect("sum bounds + sum 2M_k <= 4n + 2b^2 - 6b + (2-c) sum M_k", s2, Relation::LE, s3);
  rep.expect("4n + 2b^2 - 6b + (2-c) sum M_k <= 4n + 4 - 4b", s3, Relation::LE, s4);
  rep.expect("N <= 2n + 2 - 2b", N, Relation::LE, 2 * n + 2 - 2 * b);
  return rep;
}

CheckReport check_parity_argument(const Polygon& p) {
  CheckReport rep("parity");
  rep.note("polygon", p.to_string());
  if (p.size() != 5) throw GeometryError("parity argument needs a pentagon");
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      const IntVec d = p[j] - p[i];
      if (floor_mod(d.x1, 2) != 0 || floor_mod(d.x2, 2) != 0) continue;
      rep.note("pair", p[i].to_string() + "," + p[j].to_string());
      rep.expect("integer points on the segment", content(d) + 1, Relation::GE, 3);
      const IntVec mid{p[i].x1 + d.x1 / 2, p[i].x2 + d.x2 / 2};
      rep.expect_true("midpoint " + mid.to_string() + " lies in P", p.contains(mid));
      return rep;
    }
  }
  rep.expect_true("congruent vertex pair exists", false);
  return rep;
}

BoundsResult check_bounds(const Polygon& p, const Sublattice& l) {
  BoundsResult out{CheckReport("bounds"), polygon_free_of(p, l), std::nullopt, std::nullopt};
  CheckReport& rep = out.report;
  rep.note("polygon", p.to_string());
  rep.note("lattice", l.to_string());
  if (!l.is_proper()) throw GeometryError("bounds need a proper sublattice");
  if (!out.lattice_free) return out;

  const Int delta = l.delta(), n = l.n();
  rep.expect("N <= nu - 1", static_cast<Int>(p.size()), Relation::LE, nu(delta, n) - 1);
  if (n < 3) return out;

  // U maps L onto delta Z x n Z, and diag(n/delta, 1) maps that onto n Z^2.
  const SmithForm snf = smith_normal_form(l.basis());
  const IntMat2 scale = IntMat2::diagonal(n / delta, 1);
  const Polygon reduced = apply_linear(p, scale * snf.U);
  out.reduced = reduced;
  rep.expect_true("reduced polygon is nZ^2-free", polygon_free_of(reduced, Sublattice::scaled(n)));

  const Classification cls = classify_type(reduced, n);
  out.classification = cls;
  rep.note("type", std::string(to_string(cls.tag.type)) + "_" + std::to_string(n));
  rep.expect_true("no forbidden segment pair splits the normalized image",
                  check_imposs(slab_normalize(reduced, n).image, n));
  const Sublattice gamma(cls.map.linear * scale);
  rep.absorb(check_subtheorem_C(cls.image, cls.tag, gamma));
  if (cls.tag.type == PolygonType::II) rep.absorb(type_II_bound_pipeline(cls.image, n, gamma));
  return out;
}

}  // namespace latfree
