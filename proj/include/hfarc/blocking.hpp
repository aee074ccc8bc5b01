#pragma once

// Blocking sets of the secants of an arc.

#include <array>
#include <optional>
#include <vector>

#include "hfarc/arcs.hpp"
#include "hfarc/onefact.hpp"

namespace hfarc {

/// Sorted point set meeting every secant of some arc, disjoint from it.
struct BlockingSet {
  std::vector<ProjPoint> points;
  friend bool operator==(const BlockingSet&, const BlockingSet&) = default;
};

/// Every secant of the arc meets b. Throws ContractError if b meets the arc.
bool is_blocking(const Arc& arc, const std::vector<ProjPoint>& b);
/// All points on one line (trivially true for fewer than three points).
bool is_linear(const Plane& plane, const std::vector<ProjPoint>& b);

/// All blocking sets of size k-1, in ascending order. A set of that size
/// meets each secant exactly once, so each member lies on exactly k/2
/// secants; the search is an exact cover of the secants by such points.
/// limit = 0 returns every solution.
std::vector<BlockingSet> min_blocking_sets(const Arc& arc, std::size_t limit = 0);

struct GhfResult {
  Arc arc;
  BlockingSet blocking;
};

/// K' = K_G u phi(K_G) with the blocking set made of the directions of G on
/// X3 = 0 and the centers of phi o phi_A for every A in G. phi must be a
/// homology with axis X3 = 0 whose center is not in K_G, |G| >= 4, and K'
/// must be an arc; ContractError otherwise.
GhfResult ghf_construct(const Plane& plane, const AdditiveSubgroup& g, const Projectivity& phi);

struct HomologyParams {
  FieldElement lambda;
  FieldElement a1;
  FieldElement a2;
  friend auto operator<=>(const HomologyParams&, const HomologyParams&) = default;
};

/// lambda not in {0,1} and {a1, a2, a1+a2} disjoint from {0, 1, lambda, lambda+1}.
bool otto_parameters_valid(const Field& field, const HomologyParams& p);
/// Every valid parameter triple in ascending (lambda, a1, a2) order.
std::vector<HomologyParams> otto_parameters(const Field& field);

/// The unit-square translation arc doubled by the homology with parameters p,
/// and its 7-point blocking set. Verifies that the blocking set is the
/// expected Fano subplane.
GhfResult example_otto(const Plane& plane, const HomologyParams& p);

/// Seven points such that every line through two of them contains exactly
/// three of them.
bool is_fano_subplane(const Plane& plane, const std::vector<ProjPoint>& pts);

struct TriangleCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // arc point indices
  std::size_t triangles = 0;
};

/// For each 3-subset of the arc, the blockers of its three sides are
/// collinear. Requires b to be a minimum-size blocking set.
TriangleCheck triangle_collinearity(const Arc& arc, const BlockingSet& b);

/// Vertices are arc points in sorted order, one factor per blocker in sorted
/// order. Requires b to be a minimum-size blocking set.
OneFactorization factorization_of(const Arc& arc, const BlockingSet& b);

/// Lexicographically least image of the sorted arc over all projectivities
/// sending an ordered 4-subset of the arc to (1,0,0), (0,1,0), (0,0,1),
/// (1,1,1). Equal forms iff the arcs are projectively equivalent.
std::vector<ProjPoint> canonical_arc_form(const Arc& arc);

}  // namespace hfarc
