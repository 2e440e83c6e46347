// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "latfree/slopes.hpp"
#include "latfree/verifier.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "support/slope_suite.hpp"

using namespace latfree;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int k, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", k, title.c_str(), secs,
              o.detail.str().c_str());
  std::fflush(stdout);
}

bool free_by_oracle(const Polygon& p, const Sublattice& l) {
  for (const IntVec& q : oracle::points_in(p.vertices()))
    if (oracle::in_lattice(l.basis(), q)) return false;
  return true;
}

const Inequality* find_item(const CheckReport& r, const std::string& label) {
  for (const Inequality& q : r.items())
    if (q.label == label) return &q;
  return nullptr;
}

}  // namespace

int main() {
  criterion(1, "nu formula and extremal constructions for n <= 6", [](Outcome& o) {
    o.require(nu(1, 2) == 3 && nu(2, 2) == 5 && nu(3, 3) == 9 && nu(1, 3) == 5, "nu examples");
    int built = 0;
    for (Int n = 1; n <= 6; ++n)
      for (Int d = 1; d <= n; ++d) {
        if (n % d != 0 || d * n < 2) continue;
        const Int expect = 2 * n + 2 * std::min<Int>(d, 3) - 3;
        o.require(nu(d, n) == expect, "nu(" + std::to_string(d) + "," + std::to_string(n) + ")");
        if (expect <= 3) continue;
        const Polygon p = construct_extremal(d, n);
        ++built;
        o.require(static_cast<Int>(p.size()) == expect - 1 && free_by_oracle(p, Sublattice::diagonal(d, n)),
                  "construction for (" + std::to_string(d) + "," + std::to_string(n) + ")");
      }
    o.detail << built << " constructions";
  });

  criterion(2, "2Z^2 over [-1,3]^2: max 4, no pentagon", [](Outcome& o) {
    const Sublattice l = Sublattice::scaled(2);
    const SearchBox box{-1, 3, -1, 3};
    const auto pentagons = corpus::free_polygons(l, box, 5);
    const VerificationReport r = verify_main_theorem(l, box, 1);
    o.require(pentagons.empty(), "found a lattice-free pentagon");
    o.require(r.max_vertices_found == 4, "max = " + std::to_string(r.max_vertices_found));
    if (o.pass) o.detail << "max 4, witness " << r.witness->to_string();
  });

  criterion(3, "Z x 2Z over [0,4]^2: no lattice-free polygon", [](Outcome& o) {
    const auto polys = corpus::free_polygons(Sublattice::diagonal(1, 2), {0, 4, 0, 4}, 3);
    o.require(polys.empty(), std::to_string(polys.size()) + " polygons found");
  });

  criterion(4, "3Z^2 over [-2,5]x[-1,4]: max 8 = nu - 1", [](Outcome& o) {
    const VerificationReport r = verify_main_theorem(Sublattice::scaled(3), {-2, 5, -1, 4}, 4);
    o.require(r.max_vertices_found == 8 && r.nu == 9 && r.consistent, "max = " + std::to_string(r.max_vertices_found));
    o.require(r.witness.has_value() && free_by_oracle(*r.witness, Sublattice::scaled(3)), "witness");
    if (o.pass) o.detail << "box " << r.box.to_string() << ", witness " << r.witness->to_string();
  });

  criterion(5, "Pick identity on 1000 random polygons", [](Outcome& o) {
    auto rng = gen::rng_for(1005);
    for (int i = 0; i < 1000; ++i) {
      const Polygon p = gen::random_polygon(rng);
      const PickReport r = pick_identity(p);
      Int interior = 0, boundary = 0;
      for (const IntVec& q : oracle::points_in(p.vertices()))
        (oracle::on_boundary(p.vertices(), q) ? boundary : interior) += 1;
      __int128 area2 = 0;
      for (std::size_t j = 1; j + 1 < p.size(); ++j) area2 += oracle::cross3(p[0], p[j], p[j + 1]);
      const bool ok = r.holds && r.interior == interior && r.boundary == boundary &&
                      static_cast<__int128>(r.area2) == area2 && area2 == 2 * interior + boundary - 2;
      o.require(ok, p.to_string());
    }
  });

  criterion(6, "boundary decomposition N = sum N_k + sum M_k on 1000 random polygons", [](Outcome& o) {
    auto rng = gen::rng_for(1006);
    for (int i = 0; i < 1000; ++i) {
      const Polygon p = gen::random_polygon(rng);
      const MaximalSlopes m = maximal_slopes(p);
      Int total = 0;
      for (int k = 0; k < 4; ++k) total += m.N[k] + m.M[k];
      o.require(total == static_cast<Int>(p.size()), p.to_string());
    }
  });

  criterion(7, "slope inequalities on 10^4 splitting-frame instances", [](Outcome& o) {
    const std::size_t n = slope_suite::run(10000, [&](const slope_suite::Failure& f) { std::cerr << f.what; });
    o.require(n == 0, std::to_string(n) + " failing instances (reproductions on stderr)");
    if (o.pass) o.detail << "10000 instances";
  });

  criterion(8, "normalization, classification and forbidden pairs over the n = 2, 3 corpora (n = 3 also over [-4,7]^2)", [](Outcome& o) {
    std::size_t total = 0;
    const std::pair<Int, SearchBox> corpora[] = {
        {2, SearchBox::around_slab(2)}, {3, SearchBox::around_slab(3)}, {3, {-4, 7, -4, 7}}};
    for (const auto& [n, box] : corpora) {
      EnumerationOptions opt;
      opt.jobs = 4;
      for (const Polygon& p : corpus::free_polygons(Sublattice::scaled(n), box, 3, opt)) {
        ++total;
        const NormalizationResult r = slab_normalize(p, n);
        if (!check_normalization(p, r, n).ok()) o.require(false, "normalization of " + p.to_string());
        if (!check_imposs(r.image, n)) o.require(false, "forbidden pair splits " + r.image.to_string());
        const Classification c = classify_type(p, n);
        if (!corpus::type_clause(c.image, c.tag.type, n) || !c.map.is_automorphism_of(Sublattice::scaled(n)) ||
            c.image != apply_affine(p, c.map))
          o.require(false, "classification of " + p.to_string());
      }
    }
    o.detail << total << " polygons";
  });

  criterion(9, "type II pipeline on the n = 3 corpus over [-4,7]^2 and the documented quad", [](Outcome& o) {
    const Int n = 3;
    std::vector<Polygon> inputs{Polygon::from_ccw({{1, -1}, {4, 1}, {2, 4}, {-1, 2}})};
    EnumerationOptions opt;
    opt.jobs = 4;
    for (const Polygon& p : corpus::free_polygons(Sublattice::scaled(n), {-4, 7, -4, 7}, 4, opt)) {
      const Classification c = classify_type(p, n);
      if (c.tag.type == PolygonType::II) inputs.push_back(c.image);
    }
    for (const Polygon& p : inputs) {
      const CheckReport r = type_II_bound_pipeline(p, n, Sublattice::integer());
      const Inequality* chain = find_item(r, "4n + 2b^2 - 6b + (2-c) sum M_k <= 4n + 4 - 4b");
      const Inequality* total = find_item(r, "2N = sum 2N_k + sum 2M_k");
      const Inequality* fin = find_item(r, "N <= 2n + 2 - 2b");
      const bool ok = r.ok() && chain && total && fin && chain->rhs == 4 * n + 4 &&
                      total->lhs == 2 * static_cast<Int>(p.size()) && fin->rhs == 2 * n + 2;
      o.require(ok, r.summary());
    }
    o.detail << inputs.size() << " polygons";
  });

  criterion(10, "verify results identical for 1 and 8 jobs", [](Outcome& o) {
    struct Case {
      Sublattice l;
      SearchBox box;
    };
    const Case cases[] = {{Sublattice::scaled(3), {-2, 5, -1, 4}},
                          {Sublattice::scaled(2), {-1, 3, -1, 3}},
                          {Sublattice::diagonal(2, 4), {-1, 5, -1, 5}},
                          {Sublattice::diagonal(1, 3), {-2, 4, -1, 4}}};
    for (const Case& c : cases) {
      const VerificationReport a = verify_main_theorem(c.l, c.box, 1);
      const VerificationReport b = verify_main_theorem(c.l, c.box, 8);
      o.require(a.max_vertices_found == b.max_vertices_found && a.consistent == b.consistent &&
                    a.witness == b.witness && a.consistent,
                c.l.to_string());
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
