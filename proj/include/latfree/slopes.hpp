#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "latfree/check_report.hpp"
#include "latfree/polygon.hpp"

namespace latfree {

/// Affine frame (origin; f1, f2) with (f1, f2) a basis of Z^2.
struct Frame {
  IntVec origin;
  IntVec f1;
  IntVec f2;

  /// Coordinates of p - origin in the basis (f1, f2).
  IntVec coords(IntVec p) const;
  Frame swapped() const { return {origin, f2, f1}; }
};

/// Convex broken line whose edge vectors a_i = v_i - v_{i-1} have coordinates
/// a_i1 > 0, a_i2 < 0 in the basis (f1, f2), turning strictly:
/// a_i1 * a_{i+1,2} - a_{i+1,1} * a_i2 > 0.
struct Slope {
  std::vector<IntVec> vertices;
  IntVec f1;
  IntVec f2;

  std::size_t edges() const { return vertices.size() - 1; }
  /// The same point set as a slope with respect to (f2, f1).
  Slope swapped() const;
  /// Edge vector a_i (1-based) in basis coordinates.
  IntVec edge(std::size_t i) const;
};

/// Raised by validate_slope; `edge` is the 1-based index of the offending edge
/// (for a turning violation, the first edge of the pair).
class SlopeError : public GeometryError {
 public:
  SlopeError(const std::string& what, std::size_t edge) : GeometryError(what), edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

Slope validate_slope(std::vector<IntVec> vertices, IntVec f1, IntVec f2);

struct MaximalSlopes {
  std::array<Slope, 4> Q;  // Q[k-1] is Q_k
  std::array<Int, 4> N;
  std::array<Int, 4> M;
};

MaximalSlopes maximal_slopes(const Polygon& p);

/// Endpoint sign conditions plus a point of Q with both frame coordinates > 0.
/// The frame basis must be the slope basis or its swap.
bool frame_splits(const Frame& frame, const Slope& q);

/// alpha >= 1 for a splitting frame; throws GeometryError otherwise.
bool forms_small_angle(const Frame& frame, const Slope& q);

struct SlopeProfile {
  std::size_t N;
  std::vector<IntVec> v;  // frame coordinates of the vertices
  std::size_t k;
  Rational alpha;
  Int t;
  Int s;
  std::vector<std::size_t> S;  // 1-based edge indices
  int delta_flag;
  Int pi1_E, pi2_E, pihat_E;
  Int pihat_E1, pihat_E2;
};

SlopeProfile slope_profile(const Frame& frame, const Slope& q);

/// Optional lattice facts about the slope's vertices.
struct SlopeLatticeHint {
  std::optional<Sublattice> lattice;
  /// (a, m) such that the vertices lie in the lattice with basis (f1 - a f2, m f2), 1 <= a <= m.
  std::optional<std::pair<Int, Int>> am;
};

CheckReport check_pr_slp(const Slope& q, const SlopeLatticeHint& hint = {});
CheckReport check_th3_6(const Frame& frame, const Slope& q);
CheckReport check_th3_8(const Frame& frame, const Slope& q, const Sublattice& l);
CheckReport check_lemma_ledger(const Frame& frame, const Slope& q,
                               const std::optional<Sublattice>& l = std::nullopt);

/// For a frame with f1, f2 in {+-e1, +-e2} whose origin lies outside P and
/// whose two rays split P: the index k of the maximal slope it splits.
std::optional<int> frame_splits_maximal(const Polygon& p, const Frame& frame);

CheckReport check_step_bounds(const Polygon& p, const Sublattice& l);

}  // namespace latfree
