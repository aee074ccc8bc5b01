#pragma once

// Translation arcs: orbits of an affine point under a group of elations with
// axis X3 = 0, plus the doubling and completion constructions built on them.

#include <optional>
#include <string>
#include <vector>

#include "hfarc/projplane.hpp"

namespace hfarc {

/// Element (a1, a2) of F_q x F_q.
struct Vec2 {
  FieldElement a1;
  FieldElement a2;

  Vec2 operator+(Vec2 o) const { return {FieldElement{a1.value ^ o.a1.value}, FieldElement{a2.value ^ o.a2.value}}; }
  bool is_zero() const { return a1.is_zero() && a2.is_zero(); }
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// F_2-subspace of F_q x F_q given by a basis. Element i is the sum of the
/// basis vectors selected by the bits of i, so elements()[0] is (0,0).
class AdditiveSubgroup {
 public:
  const std::vector<Vec2>& basis() const { return basis_; }
  const std::vector<Vec2>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool contains(Vec2 v) const;

 private:
  friend AdditiveSubgroup subgroup_make(const Field& field, std::vector<Vec2> basis);
  std::vector<Vec2> basis_;
  std::vector<Vec2> elements_;
};

/// Throws ContractError if the basis is F_2-dependent or out of range.
AdditiveSubgroup subgroup_make(const Field& field, std::vector<Vec2> basis);

/// Point set with no three collinear points, kept in sorted order.
class Arc {
 public:
  /// Throws ContractError on repeated points or three collinear points.
  Arc(Plane plane, std::vector<ProjPoint> points);

  const Plane& plane() const { return plane_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const ProjPoint& p) const;

  friend bool operator==(const Arc& a, const Arc& b) { return a.points_ == b.points_; }

 private:
  Plane plane_;
  std::vector<ProjPoint> points_;
};

/// First three-collinear triple (by index in canonical order), if any.
std::optional<std::array<std::size_t, 3>> collinear_triple(const Plane& plane, const std::vector<ProjPoint>& pts);

/// Orbit of the affine point p under {phi_A : A in G}. Throws ContractError
/// when the orbit is not an arc.
Arc translation_arc(const Plane& plane, const AdditiveSubgroup& g);
Arc translation_arc(const Plane& plane, const AdditiveSubgroup& g, const ProjPoint& p);

/// {(a, a^(2^i)) : a in H} for H spanned by h_basis; i = 1 gives the conic.
AdditiveSubgroup frobenius_graph_subgroup(const Field& field, const std::vector<FieldElement>& h_basis, int i);

/// Translation arc on the conic X2 X3 = X1^2 over the subgroup H.
Arc example_n1(const Plane& plane, const std::vector<FieldElement>& h_basis);
/// Translation arc {(a, a^(2^i), 1) : a in H}; requires gcd(i, r) = 1.
Arc example_n2(const Plane& plane, const std::vector<FieldElement>& h_basis, int i);

struct N3Candidate {
  FieldElement eta;
  FieldElement b;
};

/// Doubled conic arc over the subfield of order sqrt(q), translated by
/// A = (eta, b eta^2). Requires q square, b in that subfield, b != 1, and A on
/// no secant of the base arc; throws ContractError otherwise.
Arc example_n3(const Plane& plane, FieldElement eta, FieldElement b);
/// All (eta, b) with eta outside the subfield, b in it, b != 1, for which the
/// doubling point lies on no secant. Ascending (eta, b) order.
std::vector<N3Candidate> example_n3_candidates(const Plane& plane);

/// One line per unordered pair of points, in pair order (i < j).
std::vector<ProjLine> secants(const Arc& arc);
/// {(a1, a2, 0) : A in G, A != 0}, sorted.
std::vector<ProjPoint> secant_directions(const Plane& plane, const AdditiveSubgroup& g);

/// Lines disjoint from the arc met by its secants in exactly k-1 points.
std::vector<ProjLine> hyperfocused_lines(const Arc& arc);

/// Subgroup spanned by G and A. Requires A affine-off the secants of K_G and
/// A not in G; the doubled orbit is revalidated as an arc.
AdditiveSubgroup extend_double(const Plane& plane, const AdditiveSubgroup& g, Vec2 a);

/// Affine points outside the arc that lie on none of its secants, sorted.
std::vector<ProjPoint> uncovered_affine(const Arc& arc);

/// Affine solution set of a x + (a+1) y + b x^(2^i) + (b+1) y^(2^i) = 0 if it
/// is a q-arc, std::nullopt otherwise. Requires gcd(i, r) = 1.
std::optional<Arc> lemma_iper_arc(const Plane& plane, FieldElement alpha, FieldElement beta, int i);

/// All translation q-arcs containing K_G. Requires (0,0) and (1,1) in G.
std::vector<Arc> translation_superarcs(const Plane& plane, const AdditiveSubgroup& g);

enum class Verdict { Contained, NotContained, Inconclusive };
std::string to_string(Verdict v);

struct HyperovalCheck {
  Verdict verdict = Verdict::NotContained;
  std::vector<ProjPoint> hyperoval;  // filled when Contained
};

/// Requires every affine point off the arc to lie on a secant (throws
/// ContractError otherwise). A hyperoval through such an arc can only add
/// points of X3 = 0 that lie on no secant.
HyperovalCheck check_hyperoval_containment(const Arc& arc);

/// Largest proper divisor of r (1 for prime r, 0 for r = 1).
int largest_proper_divisor(int r);
/// NotContained when |K| exceeds 2^s + 2 for the largest proper divisor s of
/// r, Inconclusive otherwise.
Verdict check_subplane_bound(const Arc& arc);

struct CompletionReport {
  int r = 0;
  int s = 0;
  AdditiveSubgroup base;
  std::vector<Arc> superarcs;
  std::vector<Vec2> chosen;  // extension points, in order
  AdditiveSubgroup group;
  std::optional<Arc> arc;
  bool covers_affine = false;  // property (a)
  Verdict hyperoval = Verdict::Inconclusive;
  Verdict subplane = Verdict::Inconclusive;
};

/// Starts from the conic arc over GF(2^s) inside PG(2, 2^r) and doubles until
/// every affine point is on a secant. The first extension point also avoids
/// every translation q-arc through the base. Requires s a proper divisor of
/// r with s > 2.
CompletionReport build_complete_translation_arc(int r, int s);

}  // namespace hfarc
