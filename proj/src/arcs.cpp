#include "hfarc/arcs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hfarc {

bool AdditiveSubgroup::contains(Vec2 v) const {
  return std::find(elements_.begin(), elements_.end(), v) != elements_.end();
}

AdditiveSubgroup subgroup_make(const Field& field, std::vector<Vec2> basis) {
  AdditiveSubgroup g;
  g.elements_.push_back(Vec2{});
  for (const Vec2& v : basis) {
    field.element(v.a1.value);
    field.element(v.a2.value);
    const std::size_t m = g.elements_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 w = g.elements_[i] + v;
      if (std::find(g.elements_.begin(), g.elements_.begin() + static_cast<std::ptrdiff_t>(m), w) !=
          g.elements_.begin() + static_cast<std::ptrdiff_t>(m)) {
        throw ContractError("subgroup generators are F_2-dependent");
      }
    }
    for (std::size_t i = 0; i < m; ++i) g.elements_.push_back(g.elements_[i] + v);
  }
  g.basis_ = std::move(basis);
  return g;
}

// --- Arc --------------------------------------------------------------------

std::optional<std::array<std::size_t, 3>> collinear_triple(const Plane& plane, const std::vector<ProjPoint>& pts) {
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (pts[i] == pts[j]) return std::array<std::size_t, 3>{i, j, j};
      const ProjLine l = plane.line_through(pts[i], pts[j]);
      for (std::size_t m = j + 1; m < k; ++m) {
        if (plane.incident(pts[m], l)) return std::array<std::size_t, 3>{i, j, m};
      }
    }
  }
  return std::nullopt;
}

Arc::Arc(Plane plane, std::vector<ProjPoint> points) : plane_(std::move(plane)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw ContractError("arc has a repeated point");
  }
  if (collinear_triple(plane_, points_)) throw ContractError("point set has three collinear points");
}

bool Arc::contains(const ProjPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

// --- translation arcs -------------------------------------------------------

Arc translation_arc(const Plane& plane, const AdditiveSubgroup& g, const ProjPoint& p) {
  if (!p.is_affine()) throw ContractError("translation arc base point must be affine");
  const Field& f = plane.field();
  std::vector<ProjPoint> pts;
  pts.reserve(g.size());
  for (const Vec2& a : g.elements()) pts.push_back(plane.affine(f.add(p.x1(), a.a1), f.add(p.x2(), a.a2)));
  return Arc(plane, std::move(pts));
}

Arc translation_arc(const Plane& plane, const AdditiveSubgroup& g) {
  return translation_arc(plane, g, plane.point(0, 0, 1));
}

AdditiveSubgroup frobenius_graph_subgroup(const Field& field, const std::vector<FieldElement>& h_basis, int i) {
  std::vector<Vec2> basis;
  basis.reserve(h_basis.size());
  // a -> a^(2^i) is additive, so the image of a basis is a basis of the graph.
  for (FieldElement h : h_basis) basis.push_back({h, field.frob(h, i)});
  return subgroup_make(field, std::move(basis));
}

Arc example_n1(const Plane& plane, const std::vector<FieldElement>& h_basis) {
  return translation_arc(plane, frobenius_graph_subgroup(plane.field(), h_basis, 1));
}

Arc example_n2(const Plane& plane, const std::vector<FieldElement>& h_basis, int i) {
  const int r = plane.field().degree();
  if (i < 1 || std::gcd(i, r) != 1) {
    throw ContractError("exponent i = " + std::to_string(i) + " is not coprime to r = " + std::to_string(r));
  }
  return translation_arc(plane, frobenius_graph_subgroup(plane.field(), h_basis, i));
}

namespace {

AdditiveSubgroup half_field_conic(const Plane& plane) {
  const int r = plane.field().degree();
  if (r % 2 != 0) throw ContractError("q = 2^" + std::to_string(r) + " is not a square");
  return frobenius_graph_subgroup(plane.field(), plane.field().subfield_basis(r / 2), 1);
}

bool on_some_secant(const Plane& plane, const AdditiveSubgroup& g, Vec2 a) {
  const ProjPoint p = plane.affine(a.a1, a.a2);
  const auto& el = g.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (plane.collinear(plane.affine(el[i].a1, el[i].a2), plane.affine(el[j].a1, el[j].a2), p)) return true;
    }
  }
  return false;
}

}  // namespace

Arc example_n3(const Plane& plane, FieldElement eta, FieldElement b) {
  const Field& f = plane.field();
  const AdditiveSubgroup g = half_field_conic(plane);
  const auto sub = f.subfield(f.degree() / 2);
  if (!std::binary_search(sub.begin(), sub.end(), b)) throw ContractError("b is not in the subfield of order sqrt(q)");
  if (b == f.one()) throw ContractError("b must differ from 1");
  const Vec2 a{eta, f.mul(b, f.square(eta))};
  if (g.contains(a) || on_some_secant(plane, g, a)) {
    throw ContractError("doubling point (eta, b eta^2) lies on a secant of the base arc");
  }
  return translation_arc(plane, extend_double(plane, g, a));
}

std::vector<N3Candidate> example_n3_candidates(const Plane& plane) {
  const Field& f = plane.field();
  const AdditiveSubgroup g = half_field_conic(plane);
  const auto sub = f.subfield(f.degree() / 2);
  std::vector<N3Candidate> out;
  for (std::uint32_t e = 0; e < f.order(); ++e) {
    const FieldElement eta{e};
    if (std::binary_search(sub.begin(), sub.end(), eta)) continue;
    for (FieldElement b : sub) {
      if (b == f.one()) continue;
      const Vec2 a{eta, f.mul(b, f.square(eta))};
      if (!g.contains(a) && !on_some_secant(plane, g, a)) out.push_back({eta, b});
    }
  }
  return out;
}

// --- secants and blocking lines ---------------------------------------------

std::vector<ProjLine> secants(const Arc& arc) {
  const auto& pts = arc.points();
  std::vector<ProjLine> out;
  out.reserve(pts.size() * (pts.size() - 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(arc.plane().line_through(pts[i], pts[j]));
  }
  return out;
}

std::vector<ProjPoint> secant_directions(const Plane& plane, const AdditiveSubgroup& g) {
  std::set<ProjPoint> dirs;
  for (const Vec2& a : g.elements()) {
    if (!a.is_zero()) dirs.insert(plane.normalize({a.a1, a.a2, plane.field().zero()}));
  }
  return {dirs.begin(), dirs.end()};
}

std::vector<ProjLine> hyperfocused_lines(const Arc& arc) {
  const Plane& plane = arc.plane();
  const std::size_t k = arc.size();
  if (k < 3) throw ContractError("hyperfocused_lines needs at least 3 points");
  const auto sec = secants(arc);
  std::vector<std::size_t> stamp(plane.num_points(), 0);
  std::size_t epoch = 0;
  std::vector<ProjLine> out;
  for (const ProjLine& l : plane.all_lines()) {
    bool external = true;
    for (const ProjPoint& p : arc.points()) external = external && !plane.incident(p, l);
    if (!external) continue;
    ++epoch;
    std::size_t distinct = 0;
    for (const ProjLine& s : sec) {
      const std::size_t idx = plane.index(plane.meet(s, l));
      if (stamp[idx] != epoch) {
        stamp[idx] = epoch;
        if (++distinct > k - 1) break;
      }
    }
    if (distinct == k - 1) out.push_back(l);
  }
  return out;
}

AdditiveSubgroup extend_double(const Plane& plane, const AdditiveSubgroup& g, Vec2 a) {
  if (g.contains(a)) throw ContractError("extension point already belongs to G");
  if (on_some_secant(plane, g, a)) throw ContractError("extension point lies on a secant of K_G");
  std::vector<Vec2> basis = g.basis();
  basis.push_back(a);
  AdditiveSubgroup out = subgroup_make(plane.field(), std::move(basis));
  translation_arc(plane, out);
  return out;
}

std::vector<ProjPoint> uncovered_affine(const Arc& arc) {
  const Plane& plane = arc.plane();
  const std::size_t qq = plane.q();
  std::vector<char> covered(qq * qq, 0);
  for (const ProjLine& l : secants(arc)) {
    for (const ProjPoint& p : plane.points_on(l)) {
      if (p.is_affine()) covered[plane.index(p)] = 1;
    }
  }
  for (const ProjPoint& p : arc.points()) {
    if (p.is_affine()) covered[plane.index(p)] = 1;
  }
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < qq * qq; ++i) {
    if (!covered[i]) out.push_back(plane.point_at(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- q-arcs -----------------------------------------------------------------

std::optional<Arc> lemma_iper_arc(const Plane& plane, FieldElement alpha, FieldElement beta, int i) {
  const Field& f = plane.field();
  const int r = f.degree();
  if (i < 1 || std::gcd(i, r) != 1) {
    throw ContractError("exponent i = " + std::to_string(i) + " is not coprime to r = " + std::to_string(r));
  }
  const FieldElement alpha1 = f.add(alpha, f.one());
  const FieldElement beta1 = f.add(beta, f.one());
  std::vector<FieldElement> fx(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) fx[x] = f.frob(FieldElement{x}, i);
  std::vector<ProjPoint> pts;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const FieldElement u = f.add(f.mul(alpha, FieldElement{x}), f.mul(beta, fx[x]));
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      const FieldElement v = f.add(f.mul(alpha1, FieldElement{y}), f.mul(beta1, fx[y]));
      if (u == v) {
        pts.push_back(plane.affine(FieldElement{x}, FieldElement{y}));
        if (pts.size() > f.order()) return std::nullopt;
      }
    }
  }
  if (pts.size() != f.order()) return std::nullopt;
  try {
    return Arc(plane, std::move(pts));
  } catch (const ContractError&) {
    return std::nullopt;
  }
}

std::vector<Arc> translation_superarcs(const Plane& plane, const AdditiveSubgroup& g) {
  const Field& f = plane.field();
  if (!g.contains(Vec2{}) || !g.contains(Vec2{f.one(), f.one()})) {
    throw ContractError("translation_superarcs requires (0,0) and (1,1) in G");
  }
  const int r = f.degree();
  std::vector<Arc> out;
  for (int i = 1; i <= std::max(1, r - 1); ++i) {
    if (std::gcd(i, r) != 1) continue;
    std::vector<FieldElement> gx, gy;
    for (const Vec2& a : g.elements()) {
      gx.push_back(f.frob(a.a1, i));
      gy.push_back(f.frob(a.a2, i));
    }
    for (std::uint32_t al = 0; al < f.order(); ++al) {
      for (std::uint32_t be = 0; be < f.order(); ++be) {
        const FieldElement alpha{al}, beta{be};
        const FieldElement alpha1 = f.add(alpha, f.one()), beta1 = f.add(beta, f.one());
        bool holds = true;
        for (std::size_t e = 0; holds && e < g.size(); ++e) {
          const Vec2& a = g.elements()[e];
          const FieldElement val = f.add(f.add(f.mul(alpha, a.a1), f.mul(alpha1, a.a2)),
                                         f.add(f.mul(beta, gx[e]), f.mul(beta1, gy[e])));
          holds = val.is_zero();
        }
        if (!holds) continue;
        auto arc = lemma_iper_arc(plane, alpha, beta, i);
        if (arc && std::find(out.begin(), out.end(), *arc) == out.end()) out.push_back(std::move(*arc));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.points() < b.points(); });
  return out;
}

// --- verdicts ---------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Contained: return "CONTAINED";
    case Verdict::NotContained: return "NOT_CONTAINED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

HyperovalCheck check_hyperoval_containment(const Arc& arc) {
  const Plane& plane = arc.plane();
  if (!uncovered_affine(arc).empty()) {
    throw ContractError("hyperoval check requires every affine point to lie on a secant");
  }
  const std::size_t q = plane.q();
  const std::size_t k = arc.size();
  if (k < q || k > q + 2) return {};
  std::vector<char> on_secant(plane.num_points(), 0);
  for (const ProjLine& l : secants(arc)) {
    for (const ProjPoint& p : plane.points_on(l)) on_secant[plane.index(p)] = 1;
  }
  std::vector<ProjPoint> free_pts;
  for (const ProjPoint& p : plane.points_on(plane.line_at_infinity())) {
    if (!on_secant[plane.index(p)] && !arc.contains(p)) free_pts.push_back(p);
  }
  std::sort(free_pts.begin(), free_pts.end());
  const std::size_t need = q + 2 - k;
  if (free_pts.size() < need) return {};
  HyperovalCheck res;
  res.verdict = Verdict::Contained;
  res.hyperoval = arc.points();
  res.hyperoval.insert(res.hyperoval.end(), free_pts.begin(), free_pts.begin() + static_cast<std::ptrdiff_t>(need));
  std::sort(res.hyperoval.begin(), res.hyperoval.end());
  Arc(plane, res.hyperoval);
  return res;
}

int largest_proper_divisor(int r) {
  for (int d = r / 2; d >= 1; --d) {
    if (r % d == 0) return d;
  }
  return 0;
}

Verdict check_subplane_bound(const Arc& arc) {
  const int r = arc.plane().field().degree();
  const int s = largest_proper_divisor(r);
  // PG(2,2) has no proper subplane at all.
  if (s == 0) return Verdict::NotContained;
  return arc.size() > (std::size_t{1} << s) + 2 ? Verdict::NotContained : Verdict::Inconclusive;
}

CompletionReport build_complete_translation_arc(int r, int s) {
  if (s <= 2 || s >= r || r % s != 0) {
    throw ContractError("s = " + std::to_string(s) + " must be a proper divisor of r = " + std::to_string(r) +
                        " with s > 2");
  }
  const Plane plane{Field(r)};
  const Field& f = plane.field();
  CompletionReport rep;
  rep.r = r;
  rep.s = s;
  rep.base = frobenius_graph_subgroup(f, f.subfield_basis(s), 1);
  rep.superarcs = translation_superarcs(plane, rep.base);

  const Arc base_arc = translation_arc(plane, rep.base);
  std::optional<Vec2> first;
  for (const ProjPoint& p : uncovered_affine(base_arc)) {
    bool in_superarc = false;
    for (const Arc& a : rep.superarcs) in_superarc = in_superarc || a.contains(p);
    if (!in_superarc) {
      first = Vec2{p.x1(), p.x2()};
      break;
    }
  }
  if (!first) throw ContractError("no extension point avoids the translation q-arcs through the base");
  rep.chosen.push_back(*first);
  rep.group = extend_double(plane, rep.base, *first);
  Arc current = translation_arc(plane, rep.group);
  // Each step doubles the arc, so this runs at most r - s times.
  for (auto open = uncovered_affine(current); !open.empty(); open = uncovered_affine(current)) {
    const Vec2 a{open.front().x1(), open.front().x2()};
    rep.chosen.push_back(a);
    rep.group = extend_double(plane, rep.group, a);
    current = translation_arc(plane, rep.group);
  }
  rep.covers_affine = true;
  rep.hyperoval = check_hyperoval_containment(current).verdict;
  rep.subplane = check_subplane_bound(current);
  rep.arc = std::move(current);
  return rep;
}

}  // namespace hfarc
