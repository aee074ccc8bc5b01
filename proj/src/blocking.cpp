#include "hfarc/blocking.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace hfarc {

bool is_blocking(const Arc& arc, const std::vector<ProjPoint>& b) {
  for (const ProjPoint& p : b) {
    if (arc.contains(p)) throw ContractError("blocking set meets the arc");
  }
  const Plane& plane = arc.plane();
  for (const ProjLine& s : secants(arc)) {
    bool hit = false;
    for (const ProjPoint& p : b) hit = hit || plane.incident(p, s);
    if (!hit) return false;
  }
  return true;
}

bool is_linear(const Plane& plane, const std::vector<ProjPoint>& b) { return plane.all_collinear(b); }

namespace {

using Bits = std::vector<std::uint64_t>;

bool disjoint(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

struct ExactCover {
  std::size_t num_secants = 0;
  std::vector<Bits> cand_mask;                      // per candidate
  std::vector<std::vector<std::size_t>> by_secant;  // candidates covering each secant
  std::size_t target = 0;
  std::size_t limit = 0;
  std::vector<std::vector<std::size_t>> solutions;

  bool covered(const Bits& c, std::size_t s) const { return (c[s / 64] >> (s % 64)) & 1u; }

  void search(Bits& cov, std::vector<std::size_t>& chosen) {
    if (limit != 0 && solutions.size() >= limit) return;
    if (chosen.size() == target) {
      solutions.push_back(chosen);
      return;
    }
    // Branch on the uncovered secant with the fewest usable candidates.
    std::size_t best = num_secants;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t s = 0; s < num_secants; ++s) {
      if (covered(cov, s)) continue;
      std::size_t count = 0;
      for (std::size_t c : by_secant[s]) count += disjoint(cand_mask[c], cov) ? 1 : 0;
      if (count < best_count) {
        best = s;
        best_count = count;
        if (count == 0) return;
      }
    }
    if (best == num_secants) return;
    for (std::size_t c : by_secant[best]) {
      if (!disjoint(cand_mask[c], cov)) continue;
      for (std::size_t i = 0; i < cov.size(); ++i) cov[i] |= cand_mask[c][i];
      chosen.push_back(c);
      search(cov, chosen);
      chosen.pop_back();
      for (std::size_t i = 0; i < cov.size(); ++i) cov[i] &= ~cand_mask[c][i];
    }
  }
};

}  // namespace

std::vector<BlockingSet> min_blocking_sets(const Arc& arc, std::size_t limit) {
  const std::size_t k = arc.size();
  if (k < 3) throw ContractError("min_blocking_sets needs at least 3 points");
  if (k % 2 == 1) return {};
  const Plane& plane = arc.plane();
  const auto sec = secants(arc);
  const std::size_t words = (sec.size() + 63) / 64;

  std::vector<std::vector<std::size_t>> through(plane.num_points());
  for (std::size_t s = 0; s < sec.size(); ++s) {
    for (const ProjPoint& p : plane.points_on(sec[s])) through[plane.index(p)].push_back(s);
  }
  ExactCover ec;
  ec.num_secants = sec.size();
  ec.by_secant.resize(sec.size());
  ec.target = k - 1;
  ec.limit = limit;
  std::vector<ProjPoint> cand_points;
  for (std::size_t idx = 0; idx < through.size(); ++idx) {
    if (through[idx].size() != k / 2) continue;
    const ProjPoint p = plane.point_at(idx);
    if (arc.contains(p)) continue;
    Bits m(words, 0);
    for (std::size_t s : through[idx]) {
      m[s / 64] |= std::uint64_t{1} << (s % 64);
      ec.by_secant[s].push_back(cand_points.size());
    }
    ec.cand_mask.push_back(std::move(m));
    cand_points.push_back(p);
  }
  Bits cov(words, 0);
  std::vector<std::size_t> chosen;
  ec.search(cov, chosen);

  std::vector<BlockingSet> out;
  for (const auto& sol : ec.solutions) {
    BlockingSet b;
    for (std::size_t c : sol) b.points.push_back(cand_points[c]);
    std::sort(b.points.begin(), b.points.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BlockingSet& a, const BlockingSet& b) { return a.points < b.points; });
  return out;
}

// --- the homology construction ----------------------------------------------

GhfResult ghf_construct(const Plane& plane, const AdditiveSubgroup& g, const Projectivity& phi) {
  const Field& f = plane.field();
  if (g.size() < 4) throw ContractError("ghf_construct needs |G| >= 4");
  const ProjPoint c = plane.center(phi);
  if (!c.is_affine()) throw ContractError("phi is an elation, not a homology");
  const Arc base = translation_arc(plane, g);
  if (base.contains(c)) throw ContractError("center of the homology lies in K_G");

  std::vector<ProjPoint> pts = base.points();
  for (const ProjPoint& p : base.points()) pts.push_back(plane.apply(phi, p));
  Arc doubled(plane, std::move(pts));

  std::set<ProjPoint> blockers;
  for (const Vec2& a : g.elements()) {
    if (!a.is_zero()) blockers.insert(plane.normalize({a.a1, a.a2, f.zero()}));
    blockers.insert(plane.center(plane.compose(phi, plane.elation(a.a1, a.a2))));
  }
  BlockingSet b{{blockers.begin(), blockers.end()}};
  if (b.points.size() != 2 * g.size() - 1 || !is_blocking(doubled, b.points) || is_linear(plane, b.points)) {
    throw std::logic_error("homology construction did not produce a non-linear minimum blocking set");
  }
  return {std::move(doubled), std::move(b)};
}

bool otto_parameters_valid(const Field& field, const HomologyParams& p) {
  if (p.lambda.is_zero() || p.lambda == field.one()) return false;
  const FieldElement lambda1 = field.add(p.lambda, field.one());
  const FieldElement forbidden[4] = {field.zero(), field.one(), p.lambda, lambda1};
  for (FieldElement a : {p.a1, p.a2, field.add(p.a1, p.a2)}) {
    for (FieldElement x : forbidden) {
      if (a == x) return false;
    }
  }
  return true;
}

std::vector<HomologyParams> otto_parameters(const Field& field) {
  std::vector<HomologyParams> out;
  for (std::uint32_t l = 0; l < field.order(); ++l) {
    for (std::uint32_t a1 = 0; a1 < field.order(); ++a1) {
      for (std::uint32_t a2 = 0; a2 < field.order(); ++a2) {
        const HomologyParams p{FieldElement{l}, FieldElement{a1}, FieldElement{a2}};
        if (otto_parameters_valid(field, p)) out.push_back(p);
      }
    }
  }
  return out;
}

bool is_fano_subplane(const Plane& plane, const std::vector<ProjPoint>& pts) {
  if (pts.size() != 7) return false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) return false;
      const ProjLine l = plane.line_through(pts[i], pts[j]);
      int on = 0;
      for (const ProjPoint& p : pts) on += plane.incident(p, l) ? 1 : 0;
      if (on != 3) return false;
    }
  }
  return true;
}

GhfResult example_otto(const Plane& plane, const HomologyParams& p) {
  const Field& f = plane.field();
  if (!otto_parameters_valid(f, p)) {
    throw ContractError("need lambda not in {0,1} and {a1,a2,a1+a2} disjoint from {0,1,lambda,lambda+1}");
  }
  const AdditiveSubgroup g = subgroup_make(f, {Vec2{f.zero(), f.one()}, Vec2{f.one(), f.zero()}});
  GhfResult res = ghf_construct(plane, g, plane.homology(p.lambda, p.a1, p.a2));

  const FieldElement l1 = f.add(p.lambda, f.one());
  const FieldElement b1 = f.add(p.a1, p.lambda);
  const FieldElement b2 = f.add(p.a2, p.lambda);
  std::vector<ProjPoint> expected{
      plane.point(1, 0, 0),
      plane.point(0, 1, 0),
      plane.point(1, 1, 0),
      plane.normalize({p.a1, p.a2, l1}),
      plane.normalize({b1, p.a2, l1}),
      plane.normalize({p.a1, b2, l1}),
      plane.normalize({b1, b2, l1}),
  };
  std::sort(expected.begin(), expected.end());
  if (res.blocking.points != expected || !is_fano_subplane(plane, res.blocking.points)) {
    throw std::logic_error("homology construction disagrees with the closed-form blocking set");
  }
  return res;
}

// --- consequences of minimum size -------------------------------------------

namespace {

/// blocker[i][j] = index into b of the unique blocker of secant P_i P_j.
std::vector<std::vector<int>> unique_blockers(const Arc& arc, const BlockingSet& b) {
  const std::size_t k = arc.size();
  if (b.points.size() + 1 != k || !is_blocking(arc, b.points)) {
    throw ContractError("blocking set is not of minimum size k-1");
  }
  const Plane& plane = arc.plane();
  const auto& pts = arc.points();
  std::vector<std::vector<int>> blocker(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const ProjLine l = plane.line_through(pts[i], pts[j]);
      for (std::size_t m = 0; m < b.points.size(); ++m) {
        if (!plane.incident(b.points[m], l)) continue;
        if (blocker[i][j] != -1) throw std::logic_error("secant with two blockers in a minimum blocking set");
        blocker[i][j] = blocker[j][i] = static_cast<int>(m);
      }
    }
  }
  return blocker;
}

}  // namespace

TriangleCheck triangle_collinearity(const Arc& arc, const BlockingSet& b) {
  const auto blocker = unique_blockers(arc, b);
  const Plane& plane = arc.plane();
  const std::size_t k = arc.size();
  TriangleCheck res;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t m = j + 1; m < k; ++m) {
        ++res.triangles;
        const ProjPoint& q1 = b.points[static_cast<std::size_t>(blocker[j][m])];
        const ProjPoint& q2 = b.points[static_cast<std::size_t>(blocker[i][m])];
        const ProjPoint& q3 = b.points[static_cast<std::size_t>(blocker[i][j])];
        if (res.ok && !plane.collinear(q1, q2, q3)) {
          res.ok = false;
          res.witness = std::array<std::size_t, 3>{i, j, m};
        }
      }
    }
  }
  return res;
}

OneFactorization factorization_of(const Arc& arc, const BlockingSet& b) {
  const auto blocker = unique_blockers(arc, b);
  const std::size_t k = arc.size();
  std::vector<OneFactor> factors(b.points.size());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      factors[static_cast<std::size_t>(blocker[i][j])].emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return OneFactorization(static_cast<int>(k), std::move(factors));
}

std::vector<ProjPoint> canonical_arc_form(const Arc& arc) {
  const Plane& plane = arc.plane();
  const auto& pts = arc.points();
  const std::size_t k = pts.size();
  if (k < 4) throw ContractError("canonical_arc_form needs at least 4 points");
  const auto target = standard_frame(plane);
  std::vector<ProjPoint> best;
  std::vector<ProjPoint> img(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = 0; d < k; ++d) {
          if (d == a || d == b || d == c) continue;
          const Projectivity m = plane.frame_map({pts[a], pts[b], pts[c], pts[d]}, target);
          for (std::size_t i = 0; i < k; ++i) img[i] = plane.apply(m, pts[i]);
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) best = img;
        }
      }
    }
  }
  return best;
}

}  // namespace hfarc
