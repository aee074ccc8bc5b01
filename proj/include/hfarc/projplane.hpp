#pragma once

// Points, lines and linear projectivities of PG(2,q), q = 2^r.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hfarc/gf2.hpp"

namespace hfarc {

using Triple = std::array<FieldElement, 3>;

/// Homogeneous point, normalized so that its last nonzero coordinate is 1.
/// Affine points are (x, y, 1); points of the line at infinity are (x, y, 0).
struct ProjPoint {
  Triple c{};

  FieldElement x1() const { return c[0]; }
  FieldElement x2() const { return c[1]; }
  FieldElement x3() const { return c[2]; }
  bool is_affine() const { return c[2].value == 1; }
  bool at_infinity() const { return c[2].value == 0; }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Dual triple [l1, l2, l3]; P is on L iff l1 x1 + l2 x2 + l3 x3 = 0.
struct ProjLine {
  Triple c{};
  friend auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

/// 3x3 invertible matrix, row-major, scaled so its first nonzero entry is 1.
struct Projectivity {
  std::array<FieldElement, 9> m{};

  FieldElement at(int row, int col) const { return m[static_cast<std::size_t>(3 * row + col)]; }
  friend bool operator==(const Projectivity&, const Projectivity&) = default;
};

/// Geometry of PG(2,q) over a fixed field. Cheap to copy.
class Plane {
 public:
  explicit Plane(Field field) : f_(std::move(field)) {}

  const Field& field() const { return f_; }
  std::uint32_t q() const { return f_.order(); }
  std::size_t num_points() const { return std::size_t{q()} * q() + q() + 1; }

  // --- points and lines -------------------------------------------------

  ProjPoint normalize(const Triple& raw) const;
  ProjPoint point(std::uint32_t x1, std::uint32_t x2, std::uint32_t x3) const;
  ProjPoint affine(FieldElement x, FieldElement y) const { return ProjPoint{{x, y, f_.one()}}; }
  ProjLine line(std::uint32_t l1, std::uint32_t l2, std::uint32_t l3) const;
  ProjLine line_at_infinity() const { return ProjLine{{f_.zero(), f_.zero(), f_.one()}}; }

  bool incident(const ProjPoint& p, const ProjLine& l) const;
  ProjLine line_through(const ProjPoint& p, const ProjPoint& q) const;
  ProjPoint meet(const ProjLine& l, const ProjLine& m) const;
  bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) const;
  bool all_collinear(std::span<const ProjPoint> pts) const;

  /// Dense index in [0, q^2+q+1): affine (x,y,1) -> x*q+y, (x,1,0) -> q^2+x,
  /// (1,0,0) -> q^2+q.
  std::size_t index(const ProjPoint& p) const;
  ProjPoint point_at(std::size_t idx) const;
  /// All points in index order; the same enumeration serves for lines.
  std::vector<ProjPoint> all_points() const;
  std::vector<ProjLine> all_lines() const;
  std::vector<ProjPoint> points_on(const ProjLine& l) const;

  // --- projectivities ---------------------------------------------------

  Projectivity identity() const;
  /// Rescales and validates an arbitrary row-major matrix.
  Projectivity projectivity(const std::array<FieldElement, 9>& raw) const;
  /// (X1, X2, X3) -> (X1 + a1 X3, X2 + a2 X3, X3).
  Projectivity elation(FieldElement a1, FieldElement a2) const;
  /// (X1, X2, X3) -> (lambda X1 + a1 X3, lambda X2 + a2 X3, X3), lambda != 0.
  Projectivity homology(FieldElement lambda, FieldElement a1, FieldElement a2) const;

  ProjPoint apply(const Projectivity& phi, const ProjPoint& p) const;
  /// phi o psi: psi acts first.
  Projectivity compose(const Projectivity& phi, const Projectivity& psi) const;
  Projectivity inverse(const Projectivity& phi) const;
  FieldElement det(const Projectivity& phi) const;

  /// Center of a non-identity central collineation with axis X3 = 0.
  /// Affine for homologies, on the axis for elations.
  ProjPoint center(const Projectivity& phi) const;
  /// True when phi fixes the line X3 = 0 pointwise and is not the identity.
  bool is_central_with_axis_at_infinity(const Projectivity& phi) const;

  /// The unique projectivity sending src[i] to dst[i]; both frames must have
  /// no three collinear points.
  Projectivity frame_map(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) const;

 private:
  FieldElement dot(const Triple& a, const Triple& b) const;
  Triple cross(const Triple& a, const Triple& b) const;
  Triple scale_last(const Triple& t) const;
  /// Matrix sending e1, e2, e3, e1+e2+e3 to the given frame (unnormalized).
  std::array<FieldElement, 9> frame_matrix(const std::array<ProjPoint, 4>& pts) const;
  std::array<FieldElement, 9> mat_mul(const std::array<FieldElement, 9>& a,
                                      const std::array<FieldElement, 9>& b) const;
  std::array<FieldElement, 9> adjugate(const std::array<FieldElement, 9>& a) const;
  FieldElement det3(const std::array<FieldElement, 9>& a) const;

  Field f_;
};

/// The frame (0,0,1), (0,1,1), (1,0,1), (1,1,1).
std::array<ProjPoint, 4> unit_square_frame(const Plane& plane);
/// The frame (1,0,0), (0,1,0), (0,0,1), (1,1,1).
std::array<ProjPoint, 4> standard_frame(const Plane& plane);

}  // namespace hfarc
