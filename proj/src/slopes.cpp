#include "latfree/slopes.hpp"

#include <algorithm>

namespace latfree {

namespace {

IntVec in_basis(IntVec f1, IntVec f2, IntVec v) {
  IntMat2 b = IntMat2::from_columns(f1, f2);
  if (!b.is_unimodular()) throw GeometryError("(f1, f2) is not a basis of Z^2");
  return b.unimodular_inverse() * v;
}

bool same_basis(IntVec a1, IntVec a2, IntVec b1, IntVec b2) { return a1 == b1 && a2 == b2; }

// The slope seen in the frame's basis (either as given or swapped).
Slope oriented(const Frame& frame, const Slope& q) {
  if (same_basis(frame.f1, frame.f2, q.f1, q.f2)) return q;
  if (same_basis(frame.f1, frame.f2, q.f2, q.f1)) return q.swapped();
  throw GeometryError("frame basis differs from the slope basis");
}

void require_splits(const Frame& frame, const Slope& q) {
  if (!frame_splits(frame, q)) throw GeometryError("frame does not split the slope");
}

void require_in_lattice(const Slope& q, const Sublattice& l) {
  for (const IntVec& v : q.vertices)
    if (!l.contains(v)) throw GeometryError("slope vertex " + v.to_string() + " is not in " + l.to_string());
}

std::string vertex_list(const std::vector<IntVec>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i].to_string();
  return s + "]";
}

void note_instance(CheckReport& rep, const Frame& frame, const Slope& q) {
  rep.note("vertices", vertex_list(q.vertices));
  rep.note("basis", "(" + q.f1.to_string() + "," + q.f2.to_string() + ")");
  rep.note("frame", "(" + frame.origin.to_string() + "; " + frame.f1.to_string() + "," + frame.f2.to_string() + ")");
}

}  // namespace

IntVec Frame::coords(IntVec p) const { return in_basis(f1, f2, p - origin); }

Slope Slope::swapped() const {
  Slope s{vertices, f2, f1};
  std::reverse(s.vertices.begin(), s.vertices.end());
  return s;
}

IntVec Slope::edge(std::size_t i) const { return in_basis(f1, f2, vertices.at(i) - vertices.at(i - 1)); }

Slope validate_slope(std::vector<IntVec> vertices, IntVec f1, IntVec f2) {
  if (vertices.empty()) throw GeometryError("slope has no vertices");
  Slope q{std::move(vertices), f1, f2};
  const std::size_t n = q.edges();
  IntVec prev{};
  for (std::size_t i = 1; i <= n; ++i) {
    IntVec a = q.edge(i);
    if (a.x1 <= 0 || a.x2 >= 0)
      throw SlopeError("edge " + std::to_string(i) + " violates the sign condition: a = " + a.to_string(), i);
    if (i > 1 && cross_wide(prev, a) <= 0)
      throw SlopeError("edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                           " violate the turning condition",
                       i - 1);
    prev = a;
  }
  return q;
}

MaximalSlopes maximal_slopes(const Polygon& p) {
  const BoundingStats st = bounding_stats(p);
  const auto& vs = p.vertices();
  auto index_of = [&](IntVec v) {
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  auto walk = [&](IntVec from, IntVec to) {
    std::vector<IntVec> out;
    for (std::size_t i = index_of(from);; ++i) {
      out.push_back(p.vertex(i));
      if (out.back() == to) break;
    }
    return out;
  };
  const IntVec e1 = kE1, e2 = kE2;
  MaximalSlopes m;
  m.Q[3] = validate_slope(walk({st.W, st.W_minus}, {st.S_minus, st.S}), e1, e2);
  m.Q[0] = validate_slope(walk({st.S_plus, st.S}, {st.E, st.E_minus}), e2, -e1);
  m.Q[1] = validate_slope(walk({st.E, st.E_plus}, {st.N_plus, st.N}), -e1, -e2);
  m.Q[2] = validate_slope(walk({st.N_minus, st.N}, {st.W, st.W_plus}), -e2, e1);
  for (int k = 0; k < 4; ++k) m.N[k] = static_cast<Int>(m.Q[k].edges());
  m.M = {st.S_minus != st.S_plus, st.E_minus != st.E_plus, st.N_minus != st.N_plus, st.W_minus != st.W_plus};
  return m;
}

bool frame_splits(const Frame& frame, const Slope& given) {
  const Slope q = oriented(frame, given);
  if (q.edges() == 0) return false;
  const IntVec v = frame.coords(q.vertices.front());
  const IntVec w = frame.coords(q.vertices.back());
  if (!(v.x1 < 0 && v.x2 > 0 && w.x1 > 0 && w.x2 < 0)) return false;
  // First coordinates increase along the slope; locate the edge crossing x1 = 0
  // and test the sign of the crossing height.
  IntVec prev = v;
  for (std::size_t i = 1; i <= q.edges(); ++i) {
    IntVec cur = frame.coords(q.vertices[i]);
    if (cur.x1 >= 0) {
      IntVec a = cur - prev;
      return static_cast<Wide>(prev.x2) * a.x1 - static_cast<Wide>(prev.x1) * a.x2 > 0;
    }
    prev = cur;
  }
  return false;
}

SlopeProfile slope_profile(const Frame& frame, const Slope& given) {
  require_splits(frame, given);
  const Slope q = oriented(frame, given);
  SlopeProfile pr{};
  pr.N = q.edges();
  for (const IntVec& x : q.vertices) pr.v.push_back(frame.coords(x));
  const auto& v = pr.v;

  pr.k = 0;
  while (v[pr.k].x2 >= 0) ++pr.k;
  IntVec ak = v[pr.k] - v[pr.k - 1];
  pr.alpha = Rational(ak.x1, checked_neg(ak.x2));
  pr.t = pr.alpha.ceil() - 1;
  for (std::size_t i = 1; i < pr.k; ++i)
    if (v[i].x2 - v[i - 1].x2 == -1) pr.S.push_back(i);
  pr.s = static_cast<Int>(pr.S.size());
  pr.delta_flag = (v[pr.k - 1].x2 > 0 && pr.alpha.is_integer()) ? 1 : 0;

  Int pihat_prefix = 0;
  for (std::size_t i = 1; i <= pr.N; ++i) {
    Int pi1 = positive_part(v[i].x1) - positive_part(v[i - 1].x1);
    Int pi2 = positive_part(v[i - 1].x2) - positive_part(v[i].x2);
    pr.pi1_E = checked_add(pr.pi1_E, pi1);
    pr.pi2_E = checked_add(pr.pi2_E, pi2);
    pihat_prefix = checked_add(pihat_prefix, pi1 + pi2 - 2);
    if (i == pr.k) pr.pihat_E1 = pihat_prefix;
  }
  pr.pihat_E = pihat_prefix;
  pr.pihat_E2 = pr.pihat_E - pr.pihat_E1;
  return pr;
}

bool forms_small_angle(const Frame& frame, const Slope& q) {
  return slope_profile(frame, q).alpha >= Rational(1);
}

CheckReport check_pr_slp(const Slope& q, const SlopeLatticeHint& hint) {
  CheckReport rep("slope-projection");
  rep.note("vertices", vertex_list(q.vertices));
  rep.note("basis", "(" + q.f1.to_string() + "," + q.f2.to_string() + ")");
  const Int n = static_cast<Int>(q.edges());
  if (n < 1) throw GeometryError("slope needs at least one edge");
  const IntVec b = in_basis(q.f1, q.f2, q.vertices.back() - q.vertices.front());
  const Int b1 = checked_abs(b.x1), b2 = checked_abs(b.x2);
  Int s = 0;
  for (std::size_t i = 1; i <= q.edges(); ++i)
    if (q.edge(i).x1 == 1) ++s;

  rep.expect("2N <= |b1| + s", 2 * n, Relation::LE, checked_add(b1, s));
  rep.expect("2|b2| >= s(s+1)", checked_mul(2, b2), Relation::GE, checked_mul(s, s + 1));
  rep.expect("s >= 0", s, Relation::GE, 0);
  rep.expect("s <= N", s, Relation::LE, n);

  if (hint.lattice) {
    require_in_lattice(q, *hint.lattice);
    rep.note("lattice", hint.lattice->to_string());
    if (steps(*hint.lattice, q.f1, q.f2).small_f1 > 1) {
      rep.expect("s == 0 for small f1-step > 1", s, Relation::EQ, 0);
      rep.expect("2N <= |b1|", 2 * n, Relation::LE, b1);
    }
  }
  if (hint.am) {
    auto [a, m] = *hint.am;
    if (a < 1 || a > m) throw GeometryError("lattice hint needs 1 <= a <= m");
    Sublattice gamma(IntMat2::from_columns(q.f1 - a * q.f2, m * q.f2));
    require_in_lattice(q, gamma);
    rep.note("a,m", std::to_string(a) + "," + std::to_string(m));
    rep.expect("2|b2| >= (2a + (s-1)m)s", checked_mul(2, b2), Relation::GE,
               checked_mul(checked_add(2 * a, checked_mul(s - 1, m)), s));
  }
  return rep;
}

CheckReport check_th3_6(const Frame& frame, const Slope& given) {
  CheckReport rep("splitting-bound");
  note_instance(rep, frame, given);
  const SlopeProfile pr = slope_profile(frame, given);
  const bool small = pr.alpha >= Rational(1);
  const Int s = small ? pr.s : 0;
  const Int t = small ? pr.t : 0;
  const Int n2 = 2 * static_cast<Int>(pr.N);
  const IntVec v = pr.v.front(), w = pr.v.back();
  rep.note("alpha", pr.alpha.to_string());
  rep.note("s,t", std::to_string(s) + "," + std::to_string(t));

  const Int base = checked_add(v.x2, w.x1);
  rep.expect("s >= 0", s, Relation::GE, 0);
  rep.expect("s <= t", s, Relation::LE, t);
  rep.expect("v2 - s >= 0", v.x2 - s, Relation::GE, 0);
  Int rhs_c = checked_add(checked_sub(checked_mul(t, s), (s * s - s) / 2), checked_mul(v.x2 - s, t + 1));
  rep.expect("-v1 < ts - (s^2-s)/2 + (v2-s)(t+1)", checked_neg(v.x1), Relation::LT, rhs_c);
  rep.expect("2N <= v2 + w1 - t + s", n2, Relation::LE, base - t + s);
  const Int half = ceil_div(checked_neg(w.x2), 2);
  if (small) rep.expect("small angle: 2N <= v2 + w1 - t + s - ceil(-w2/2) + 1", n2, Relation::LE, base - t + s - half + 1);
  rep.expect("2N <= v2 + w1", n2, Relation::LE, base);
  if (small) rep.expect("small angle: 2N <= v2 + w1 - ceil(-w2/2) + 1", n2, Relation::LE, base - half + 1);
  return rep;
}

CheckReport check_th3_8(const Frame& frame, const Slope& given, const Sublattice& l) {
  CheckReport rep("sublattice-splitting-bound");
  note_instance(rep, frame, given);
  rep.note("lattice", l.to_string());
  if (!l.is_proper()) throw GeometryError("th3-8 needs a proper sublattice");
  require_in_lattice(given, l);
  const SlopeProfile pr = slope_profile(frame, given);
  rep.expect("2N <= v2 + w1 - 1", 2 * static_cast<Int>(pr.N), Relation::LE,
             checked_add(pr.v.front().x2, pr.v.back().x1) - 1);
  return rep;
}

CheckReport check_lemma_ledger(const Frame& frame, const Slope& given, const std::optional<Sublattice>& l) {
  CheckReport rep("profile-ledger");
  note_instance(rep, frame, given);
  const SlopeProfile pr = slope_profile(frame, given);
  const auto& v = pr.v;
  const IntVec w = v.back();
  const bool small = pr.alpha >= Rational(1);
  const bool proper = l && l->is_proper();
  if (l) {
    require_in_lattice(given, *l);
    rep.note("lattice", l->to_string());
  }

  rep.expect("s <= t", pr.s, Relation::LE, pr.t);
  Int sum_s = 0;
  for (std::size_t i : pr.S) sum_s = checked_add(sum_s, v[i].x1 - v[i - 1].x1);
  rep.expect("sum over S of a_i1 <= (t-s)s + s(s+1)/2", sum_s, Relation::LE,
             checked_add(checked_mul(pr.t - pr.s, pr.s), pr.s * (pr.s + 1) / 2));
  if (proper && pr.s == pr.t) {
    rep.expect("s == t forces s <= 1", pr.s, Relation::LE, 1);
    if (pr.s == 1) {
      IntVec a = v[pr.S[0]] - v[pr.S[0] - 1];
      rep.expect_true("the edge in S is f1 - f2", a == IntVec{1, -1});
    }
  }

  const IntVec vk1 = v[pr.k - 1], vk = v[pr.k];
  Int e1_bound = checked_add(positive_part(vk1.x1), vk1.x2) - 1 + pr.delta_flag + (pr.t - pr.s) +
              (Rational(checked_neg(vk.x2) - 1) * pr.alpha).floor();
  rep.expect("pihat(E1) lower bound", pr.pihat_E1, Relation::GE, e1_bound);
  if (small)
    rep.expect("small angle: 2 pihat(E2) >= v_k2 - w2 - 1", checked_mul(2, pr.pihat_E2), Relation::GE,
               vk.x2 - w.x2 - 1);
  if (proper) rep.expect("proper sublattice: pihat(E) >= 1", pr.pihat_E, Relation::GE, 1);

  rep.expect("pihat(E) == pihat(E1) + pihat(E2)", pr.pihat_E, Relation::EQ, pr.pihat_E1 + pr.pihat_E2);
  rep.expect("pi1(E) == |w1+ - v1+|", pr.pi1_E, Relation::EQ,
             checked_abs(positive_part(w.x1) - positive_part(v.front().x1)));
  rep.expect("pi2(E) == |v2+ - w2+|", pr.pi2_E, Relation::EQ,
             checked_abs(positive_part(v.front().x2) - positive_part(w.x2)));
  return rep;
}

std::optional<int> frame_splits_maximal(const Polygon& p, const Frame& frame) {
  auto axis = [](IntVec f) { return (f.x1 == 0) != (f.x2 == 0) && checked_abs(f.x1 + f.x2) == 1; };
  if (!axis(frame.f1) || !axis(frame.f2) || cross_wide(frame.f1, frame.f2) == 0) return std::nullopt;
  if (p.contains(frame.origin)) return std::nullopt;
  if (!ray_splits(p, frame.origin, frame.f1) || !ray_splits(p, frame.origin, frame.f2)) return std::nullopt;

  const IntVec e1 = kE1, e2 = kE2;
  struct Entry {
    IntVec f1, f2;
    int k;
  };
  const Entry table[] = {
      {-e1, e2, 1}, {e2, -e1, 1}, {-e2, -e1, 2}, {-e1, -e2, 2},
      {e1, -e2, 3}, {-e2, e1, 3}, {e2, e1, 4},   {e1, e2, 4},
  };
  for (const Entry& row : table) {
    if (row.f1 != frame.f1 || row.f2 != frame.f2) continue;
    MaximalSlopes ms = maximal_slopes(p);
    if (!frame_splits(frame, ms.Q[row.k - 1]))
      throw GeometryError("frame does not split maximal slope Q" + std::to_string(row.k) + " of " + p.to_string());
    return row.k;
  }
  return std::nullopt;
}

CheckReport check_step_bounds(const Polygon& p, const Sublattice& l) {
  CheckReport rep("step-bounds");
  rep.note("polygon", p.to_string());
  rep.note("lattice", l.to_string());
  for (const IntVec& v : p.vertices())
    if (!l.contains(v)) throw GeometryError("polygon vertex " + v.to_string() + " is not in " + l.to_string());
  const Steps st = steps(l, kE1, kE2);
  const Int s1 = st.large_f1, s2 = st.large_f2;
  const BoundingStats b = bounding_stats(p);
  const MaximalSlopes m = maximal_slopes(p);
  rep.expect("S+ - S- >= S1 M1", b.S_plus - b.S_minus, Relation::GE, s1 * m.M[0]);
  rep.expect("E+ - E- >= S2 M2", b.E_plus - b.E_minus, Relation::GE, s2 * m.M[1]);
  rep.expect("N+ - N- >= S1 M3", b.N_plus - b.N_minus, Relation::GE, s1 * m.M[2]);
  rep.expect("W+ - W- >= S2 M4", b.W_plus - b.W_minus, Relation::GE, s2 * m.M[3]);
  return rep;
}

}  // namespace latfree
