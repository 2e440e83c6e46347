#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>

#include "latfree/simd/kernels.hpp"
#include "latfree/verifier.hpp"

namespace latfree {

std::string SearchBox::to_string() const {
  return "[" + std::to_string(x1_min) + "," + std::to_string(x1_max) + "]x[" + std::to_string(x2_min) + "," +
         std::to_string(x2_max) + "]";
}

namespace {

constexpr Int kMaxCoordinateSpan = 4096;  // keeps kernel cross products within int32
constexpr std::size_t kMaxCandidates = 256;

template <int W>
struct Mask {
  std::uint64_t w[W] = {};

  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  int count() const {
    int c = 0;
    for (int k = 0; k < W; ++k) c += std::popcount(w[k]);
    return c;
  }
  friend Mask operator&(const Mask& a, const Mask& b) {
    Mask r;
    for (int k = 0; k < W; ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < W; ++k) {
      std::uint64_t x = w[k];
      while (x) {
        f(static_cast<std::size_t>(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

struct Problem {
  std::vector<IntVec> candidates;  // lexicographic order
  std::vector<std::int32_t> lx, ly;  // L-points of the box, relative to the box corner
  IntVec corner;
};

Problem make_problem(const Sublattice& l, const SearchBox& box, const EnumerationOptions& opt) {
  if (box.x1_min > box.x1_max || box.x2_min > box.x2_max) throw GeometryError("empty search box");
  if (box.width() > kMaxCoordinateSpan || box.height() > kMaxCoordinateSpan)
    throw GeometryError("search box too large: " + box.to_string());
  Problem pr;
  pr.corner = {box.x1_min, box.x2_min};
  for (Int x = box.x1_min; x <= box.x1_max; ++x) {
    for (Int y = box.x2_min; y <= box.x2_max; ++y) {
      IntVec p{x, y};
      if (l.contains(p)) {
        pr.lx.push_back(static_cast<std::int32_t>(x - box.x1_min));
        pr.ly.push_back(static_cast<std::int32_t>(y - box.x2_min));
      } else if (!opt.vertex_lattice || opt.vertex_lattice->contains(p)) {
        pr.candidates.push_back(p);
      }
    }
  }
  return pr;
}

// Depth-first search over convex chains anchored at the lexicographically
// smallest vertex p0. Candidates after p0 are sorted by angle around p0, so a
// chain p0, C_i1, C_i2, ... with increasing angles and left turns at every
// C_i closes into a strictly convex polygon. The polygon is the union of the
// fan triangles (p0, C_i, C_j) over consecutive chain vertices, so it is
// L-free iff each of those closed triangles is.
template <int W>
class AnchorSearch {
 public:
  AnchorSearch(const Problem& pr, std::size_t anchor, const simd::Kernels& kern) : p0_(pr.candidates[anchor]) {
    pts_.assign(pr.candidates.begin() + static_cast<std::ptrdiff_t>(anchor) + 1, pr.candidates.end());
    std::sort(pts_.begin(), pts_.end(), [&](IntVec a, IntVec b) {
      Wide c = cross_wide(a - p0_, b - p0_);
      if (c != 0) return c > 0;
      return dot_wide(a - p0_, a - p0_) < dot_wide(b - p0_, b - p0_);
    });
    const std::size_t m = pts_.size();
    std::vector<std::int32_t> xs(m), ys(m);
    for (std::size_t i = 0; i < m; ++i) {
      xs[i] = static_cast<std::int32_t>(pts_[i].x1 - pr.corner.x1);
      ys[i] = static_cast<std::int32_t>(pts_[i].x2 - pr.corner.x2);
    }
    const auto ox = static_cast<std::int32_t>(p0_.x1 - pr.corner.x1);
    const auto oy = static_cast<std::int32_t>(p0_.x2 - pr.corner.x2);

    angular_.resize(m);
    free_.resize(m);
    turn_.resize(m * m);
    std::int32_t tri[6] = {ox, oy, 0, 0, 0, 0};
    for (std::size_t i = 0; i < m; ++i) {
      kern.left_turn_mask(xs.data(), ys.data(), m, ox, oy, xs[i] - ox, ys[i] - oy, angular_[i].w);
      tri[2] = xs[i];
      tri[3] = ys[i];
      angular_[i].for_each([&](std::size_t j) {
        tri[4] = xs[j];
        tri[5] = ys[j];
        if (!kern.any_in_closed_triangle(pr.lx.data(), pr.ly.data(), pr.lx.size(), tri)) free_[i].set(j);
      });
    }
    // The search only steps from h to i when i is in free_[h].
    for (std::size_t h = 0; h < m; ++h)
      free_[h].for_each([&](std::size_t i) {
        kern.left_turn_mask(xs.data(), ys.data(), m, xs[i], ys[i], xs[i] - xs[h], ys[i] - ys[h],
                            turn_[h * m + i].w);
      });
  }

  // Calls visit(count) at every chain (count is 0 below three vertices); visit
  // returns the current threshold and subtrees that cannot reach it are skipped.
  template <class Visit>
  void run(Visit&& visit) {
    chain_.clear();
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      chain_.push_back(i);
      descend(i, free_[i], visit);
      chain_.pop_back();
    }
  }

  Polygon polygon() const {
    std::vector<IntVec> v{p0_};
    for (std::size_t i : chain_) v.push_back(pts_[i]);
    return Polygon::from_ccw(std::move(v));
  }

 private:
  template <class Visit>
  void descend(std::size_t i, const Mask<W>& allowed, Visit& visit) {
    const int count = static_cast<int>(chain_.size()) + 1;
    const int threshold = visit(count >= 3 ? count : 0);
    if (count + allowed.count() < threshold) return;
    allowed.for_each([&](std::size_t j) {
      chain_.push_back(j);
      descend(j, turn_[i * pts_.size() + j] & free_[j], visit);
      chain_.pop_back();
    });
  }

  IntVec p0_;
  std::vector<IntVec> pts_;
  std::vector<Mask<W>> angular_, free_, turn_;
  std::vector<std::size_t> chain_;
};

// Runs `body(anchor, search)` for every anchor, distributing anchors over
// worker threads; `body` must be thread-safe across distinct anchors.
template <int W, class Body>
void for_each_anchor(const Problem& pr, unsigned jobs, Body&& body) {
  const simd::Kernels& kern = simd::active_kernels();
  const std::size_t anchors = pr.candidates.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t a; (a = next.fetch_add(1)) < anchors;) {
      AnchorSearch<W> search(pr, a, kern);
      body(a, search);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

template <class F>
auto dispatch_width(std::size_t candidates, F&& f) {
  if (candidates <= 64) return f.template operator()<1>();
  if (candidates <= 128) return f.template operator()<2>();
  if (candidates <= kMaxCandidates) return f.template operator()<4>();
  throw GeometryError("search box has more than " + std::to_string(kMaxCandidates) + " candidate points");
}

}  // namespace

EnumerationStats enumerate_free_polygons(const Sublattice& l, const SearchBox& box, int min_vertices,
                                         const std::function<void(const Polygon&)>& sink,
                                         const EnumerationOptions& options) {
  const Problem pr = make_problem(l, box, options);
  const int floor_count = std::max(3, min_vertices);
  EnumerationStats stats;
  std::mutex mu;
  std::map<std::size_t, std::vector<Polygon>> pending;
  std::size_t next_emit = 0;

  dispatch_width(pr.candidates.size(), [&]<int W>() {
    for_each_anchor<W>(pr, options.jobs, [&](std::size_t a, AnchorSearch<W>& search) {
      std::vector<Polygon> found;
      std::uint64_t visited = 0;
      search.run([&](int count) {
        if (count >= 3) {
          ++visited;
          if (count >= floor_count) found.push_back(search.polygon());
        }
        return floor_count;
      });
      std::lock_guard<std::mutex> lock(mu);
      stats.visited += visited;
      stats.polygons += found.size();
      pending.emplace(a, std::move(found));
      // Flush the completed prefix in anchor order.
      for (auto it = pending.find(next_emit); it != pending.end(); it = pending.find(next_emit)) {
        for (const Polygon& poly : it->second) sink(poly);
        pending.erase(it);
        ++next_emit;
      }
    });
  });
  return stats;
}

MaxSearchResult max_free_polygon(const Sublattice& l, const SearchBox& box, const EnumerationOptions& options) {
  const Problem pr = make_problem(l, box, options);
  std::atomic<int> global_best{0};
  std::atomic<std::uint64_t> visited_total{0};
  struct AnchorBest {
    int count = 0;
    std::optional<Polygon> witness;
  };
  std::vector<AnchorBest> per_anchor(pr.candidates.size());

  dispatch_width(pr.candidates.size(), [&]<int W>() {
    for_each_anchor<W>(pr, options.jobs, [&](std::size_t a, AnchorSearch<W>& search) {
      AnchorBest best;
      std::uint64_t visited = 0;
      search.run([&](int count) {
        if (count >= 3) {
          ++visited;
          if (count > best.count) {
            best.count = count;
            best.witness = search.polygon();
            int g = global_best.load();
            while (count > g && !global_best.compare_exchange_weak(g, count)) {
            }
          }
        }
        // Ties are explored, so every anchor reaching the final maximum finds
        // its first maximal polygon in search order.
        return std::max(best.count, global_best.load());
      });
      visited_total += visited;
      per_anchor[a] = std::move(best);
    });
  });

  MaxSearchResult r;
  r.visited = visited_total.load();
  for (auto& b : per_anchor) {
    if (b.count > r.max_vertices) {
      r.max_vertices = b.count;
      r.witness = b.witness;
    }
  }
  return r;
}

}  // namespace latfree
