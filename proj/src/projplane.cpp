#include "hfarc/projplane.hpp"

namespace hfarc {

FieldElement Plane::dot(const Triple& a, const Triple& b) const {
  return f_.add(f_.add(f_.mul(a[0], b[0]), f_.mul(a[1], b[1])), f_.mul(a[2], b[2]));
}

Triple Plane::cross(const Triple& a, const Triple& b) const {
  // Characteristic two: subtraction is addition.
  return {f_.add(f_.mul(a[1], b[2]), f_.mul(a[2], b[1])),
          f_.add(f_.mul(a[2], b[0]), f_.mul(a[0], b[2])),
          f_.add(f_.mul(a[0], b[1]), f_.mul(a[1], b[0]))};
}

Triple Plane::scale_last(const Triple& t) const {
  int last = 2;
  while (last >= 0 && t[static_cast<std::size_t>(last)].is_zero()) --last;
  if (last < 0) throw ContractError("zero triple has no projective meaning");
  const FieldElement s = f_.inv(t[static_cast<std::size_t>(last)]);
  return {f_.mul(t[0], s), f_.mul(t[1], s), f_.mul(t[2], s)};
}

ProjPoint Plane::normalize(const Triple& raw) const { return ProjPoint{scale_last(raw)}; }

ProjPoint Plane::point(std::uint32_t x1, std::uint32_t x2, std::uint32_t x3) const {
  return normalize({f_.element(x1), f_.element(x2), f_.element(x3)});
}

ProjLine Plane::line(std::uint32_t l1, std::uint32_t l2, std::uint32_t l3) const {
  return ProjLine{scale_last({f_.element(l1), f_.element(l2), f_.element(l3)})};
}

bool Plane::incident(const ProjPoint& p, const ProjLine& l) const { return dot(p.c, l.c).is_zero(); }

ProjLine Plane::line_through(const ProjPoint& p, const ProjPoint& q) const {
  if (p == q) throw ContractError("line_through needs two distinct points");
  return ProjLine{scale_last(cross(p.c, q.c))};
}

ProjPoint Plane::meet(const ProjLine& l, const ProjLine& m) const {
  if (l == m) throw ContractError("meet needs two distinct lines");
  return ProjPoint{scale_last(cross(l.c, m.c))};
}

bool Plane::collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) const {
  return dot(cross(p.c, q.c), r.c).is_zero();
}

bool Plane::all_collinear(std::span<const ProjPoint> pts) const {
  if (pts.size() <= 2) return true;
  const ProjLine l = line_through(pts[0], pts[1]);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (!incident(pts[i], l)) return false;
  }
  return true;
}

std::size_t Plane::index(const ProjPoint& p) const {
  const std::size_t qq = q();
  if (p.c[2].value == 1) return p.c[0].value * qq + p.c[1].value;
  if (p.c[1].value == 1) return qq * qq + p.c[0].value;
  return qq * qq + qq;
}

ProjPoint Plane::point_at(std::size_t idx) const {
  const std::size_t qq = q();
  if (idx < qq * qq) {
    return ProjPoint{{FieldElement{static_cast<std::uint32_t>(idx / qq)},
                      FieldElement{static_cast<std::uint32_t>(idx % qq)}, f_.one()}};
  }
  if (idx < qq * qq + qq) {
    return ProjPoint{{FieldElement{static_cast<std::uint32_t>(idx - qq * qq)}, f_.one(), f_.zero()}};
  }
  if (idx == qq * qq + qq) return ProjPoint{{f_.one(), f_.zero(), f_.zero()}};
  throw ContractError("point index out of range");
}

std::vector<ProjPoint> Plane::all_points() const {
  std::vector<ProjPoint> out;
  out.reserve(num_points());
  for (std::size_t i = 0; i < num_points(); ++i) out.push_back(point_at(i));
  return out;
}

std::vector<ProjLine> Plane::all_lines() const {
  std::vector<ProjLine> out;
  out.reserve(num_points());
  for (std::size_t i = 0; i < num_points(); ++i) out.push_back(ProjLine{point_at(i).c});
  return out;
}

std::vector<ProjPoint> Plane::points_on(const ProjLine& l) const {
  // Two distinct points of l span it; parametrize as a*P + Q and P.
  std::vector<ProjPoint> basis;
  const Triple e[3] = {{f_.one(), f_.zero(), f_.zero()},
                       {f_.zero(), f_.one(), f_.zero()},
                       {f_.zero(), f_.zero(), f_.one()}};
  for (const Triple& t : e) {
    const Triple c = cross(l.c, t);
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    const ProjPoint p = normalize(c);
    if (basis.empty() || basis[0] != p) basis.push_back(p);
    if (basis.size() == 2) break;
  }
  std::vector<ProjPoint> out;
  out.reserve(q() + 1);
  out.push_back(basis[0]);
  for (std::uint32_t a = 0; a < q(); ++a) {
    const FieldElement s{a};
    out.push_back(normalize({f_.add(f_.mul(s, basis[0].c[0]), basis[1].c[0]),
                             f_.add(f_.mul(s, basis[0].c[1]), basis[1].c[1]),
                             f_.add(f_.mul(s, basis[0].c[2]), basis[1].c[2])}));
  }
  return out;
}

// --- projectivities ---------------------------------------------------------

std::array<FieldElement, 9> Plane::mat_mul(const std::array<FieldElement, 9>& a,
                                           const std::array<FieldElement, 9>& b) const {
  std::array<FieldElement, 9> c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      FieldElement s = f_.zero();
      for (int k = 0; k < 3; ++k) s = f_.add(s, f_.mul(a[3 * i + k], b[3 * k + j]));
      c[static_cast<std::size_t>(3 * i + j)] = s;
    }
  }
  return c;
}

FieldElement Plane::det3(const std::array<FieldElement, 9>& a) const {
  const Triple r0{a[0], a[1], a[2]};
  const Triple r1{a[3], a[4], a[5]};
  const Triple r2{a[6], a[7], a[8]};
  return dot(r0, cross(r1, r2));
}

std::array<FieldElement, 9> Plane::adjugate(const std::array<FieldElement, 9>& a) const {
  // Columns of the inverse are cross products of rows (signs vanish in char 2).
  const Triple r0{a[0], a[1], a[2]};
  const Triple r1{a[3], a[4], a[5]};
  const Triple r2{a[6], a[7], a[8]};
  const Triple c0 = cross(r1, r2);
  const Triple c1 = cross(r2, r0);
  const Triple c2 = cross(r0, r1);
  return {c0[0], c1[0], c2[0], c0[1], c1[1], c2[1], c0[2], c1[2], c2[2]};
}

Projectivity Plane::identity() const {
  return Projectivity{{f_.one(), f_.zero(), f_.zero(), f_.zero(), f_.one(), f_.zero(), f_.zero(), f_.zero(), f_.one()}};
}

Projectivity Plane::projectivity(const std::array<FieldElement, 9>& raw) const {
  if (det3(raw).is_zero()) throw ContractError("singular matrix is not a projectivity");
  std::size_t first = 0;
  while (raw[first].is_zero()) ++first;
  const FieldElement s = f_.inv(raw[first]);
  Projectivity p;
  for (std::size_t i = 0; i < 9; ++i) p.m[i] = f_.mul(raw[i], s);
  return p;
}

Projectivity Plane::elation(FieldElement a1, FieldElement a2) const {
  return projectivity({f_.one(), f_.zero(), a1, f_.zero(), f_.one(), a2, f_.zero(), f_.zero(), f_.one()});
}

Projectivity Plane::homology(FieldElement lambda, FieldElement a1, FieldElement a2) const {
  if (lambda.is_zero()) throw ContractError("homology with lambda = 0 is singular");
  return projectivity({lambda, f_.zero(), a1, f_.zero(), lambda, a2, f_.zero(), f_.zero(), f_.one()});
}

ProjPoint Plane::apply(const Projectivity& phi, const ProjPoint& p) const {
  const Triple r0{phi.m[0], phi.m[1], phi.m[2]};
  const Triple r1{phi.m[3], phi.m[4], phi.m[5]};
  const Triple r2{phi.m[6], phi.m[7], phi.m[8]};
  return normalize({dot(r0, p.c), dot(r1, p.c), dot(r2, p.c)});
}

Projectivity Plane::compose(const Projectivity& phi, const Projectivity& psi) const {
  return projectivity(mat_mul(phi.m, psi.m));
}

Projectivity Plane::inverse(const Projectivity& phi) const { return projectivity(adjugate(phi.m)); }

FieldElement Plane::det(const Projectivity& phi) const { return det3(phi.m); }

bool Plane::is_central_with_axis_at_infinity(const Projectivity& phi) const {
  const auto& m = phi.m;
  if (!m[6].is_zero() || !m[7].is_zero() || m[8].is_zero()) return false;
  if (!m[1].is_zero() || !m[3].is_zero() || m[0] != m[4]) return false;
  return !(phi == identity());
}

ProjPoint Plane::center(const Projectivity& phi) const {
  if (!is_central_with_axis_at_infinity(phi)) {
    throw ContractError("projectivity is not a non-identity central collineation with axis X3=0");
  }
  const FieldElement s = f_.inv(phi.m[8]);
  const FieldElement lambda = f_.mul(phi.m[0], s);
  const FieldElement a1 = f_.mul(phi.m[2], s);
  const FieldElement a2 = f_.mul(phi.m[5], s);
  // Fixed affine point: lambda x + a = x, i.e. x = a / (1 + lambda).
  return normalize({a1, a2, f_.add(f_.one(), lambda)});
}

std::array<FieldElement, 9> Plane::frame_matrix(const std::array<ProjPoint, 4>& pts) const {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (pts[i] == pts[j] || pts[j] == pts[k] || pts[i] == pts[k] || collinear(pts[i], pts[j], pts[k])) {
          throw ContractError("degenerate frame: three points collinear");
        }
      }
    }
  }
  const std::array<FieldElement, 9> a{pts[0].c[0], pts[1].c[0], pts[2].c[0],
                                      pts[0].c[1], pts[1].c[1], pts[2].c[1],
                                      pts[0].c[2], pts[1].c[2], pts[2].c[2]};
  const auto adj = adjugate(a);
  Triple coef{};
  for (int i = 0; i < 3; ++i) {
    coef[static_cast<std::size_t>(i)] =
        dot({adj[static_cast<std::size_t>(3 * i)], adj[static_cast<std::size_t>(3 * i + 1)],
             adj[static_cast<std::size_t>(3 * i + 2)]},
            pts[3].c);
  }
  std::array<FieldElement, 9> m{};
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      m[static_cast<std::size_t>(3 * row + col)] =
          f_.mul(a[static_cast<std::size_t>(3 * row + col)], coef[static_cast<std::size_t>(col)]);
    }
  }
  return m;
}

Projectivity Plane::frame_map(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) const {
  return projectivity(mat_mul(frame_matrix(dst), adjugate(frame_matrix(src))));
}

std::array<ProjPoint, 4> unit_square_frame(const Plane& plane) {
  return {plane.point(0, 0, 1), plane.point(0, 1, 1), plane.point(1, 0, 1), plane.point(1, 1, 1)};
}

std::array<ProjPoint, 4> standard_frame(const Plane& plane) {
  return {plane.point(1, 0, 0), plane.point(0, 1, 0), plane.point(0, 0, 1), plane.point(1, 1, 1)};
}

}  // namespace hfarc
