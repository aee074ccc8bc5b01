#pragma once

// 1-factorizations of K_2n: validation, canonical forms, enumeration up to
// isomorphism, triangle closure, and embeddings into PG(2,q).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfarc/projplane.hpp"

namespace hfarc {

inline constexpr int kMaxVertices = 16;

/// Perfect matching; vertices are 0-based, each pair has first < second.
using OneFactor = std::vector<std::pair<int, int>>;

/// Partition of the edges of K_v (v even) into v-1 perfect matchings.
class OneFactorization {
 public:
  /// Throws ContractError unless the factors partition all edges of K_v.
  OneFactorization(int vertices, std::vector<OneFactor> factors);

  int vertices() const { return v_; }
  int num_factors() const { return v_ - 1; }
  const std::vector<OneFactor>& factors() const { return factors_; }
  /// Index of the factor containing edge {u, w}.
  int color(int u, int w) const { return color_[static_cast<std::size_t>(u * kMaxVertices + w)]; }
  /// Neighbour of u in factor f.
  int partner(int f, int u) const { return partner_[static_cast<std::size_t>(f * kMaxVertices + u)]; }

  /// Same vertex set and identical factor list.
  friend bool operator==(const OneFactorization& a, const OneFactorization& b) {
    return a.v_ == b.v_ && a.factors_ == b.factors_;
  }

 private:
  int v_;
  std::vector<OneFactor> factors_;
  std::array<std::int8_t, kMaxVertices * kMaxVertices> color_{};
  std::array<std::int8_t, kMaxVertices * kMaxVertices> partner_{};
};

/// Relabels vertices (perm[old] = new) and reorders factors by smallest edge.
OneFactorization relabel(const OneFactorization& f, const std::vector<int>& perm);

/// Sorted cycle lengths of the 2-factor F_a u F_b.
std::vector<int> cycle_type(const OneFactorization& f, int a, int b);

/// Complete isomorphism invariant (vertex relabeling, factor reordering).
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const OneFactorization& f);
/// The representative whose edge colouring is the canonical code.
OneFactorization from_canonical(const CanonicalForm& c);
bool isomorphic(const OneFactorization& a, const OneFactorization& b);

/// One representative per isomorphism class of 1-factorizations of K_2n,
/// 2 <= n <= 6, in ascending canonical order. Representatives are canonical.
std::vector<OneFactorization> enumerate_factorizations(int n);

// --- triangle closure -------------------------------------------------------

/// Family of factor-index sets, each a bit mask over factor indices.
struct ClosureFamily {
  int num_factors = 0;
  std::vector<std::uint32_t> members;  // sorted ascending, unique
  bool contains(std::uint32_t mask) const;
};

/// For every vertex triangle, the set of the three factors of its edges.
ClosureFamily t0_triples(const OneFactorization& f);

struct ClosureResult {
  ClosureFamily family;
  bool contains_all = false;
  /// Smallest i with the full factor set in T^i when contains_all; otherwise
  /// the number of rounds until the fixpoint.
  int depth = 0;
};

/// Iterates T^i = T^(i-1) u {A u B : |A n B| >= 2}, stopping as soon as the
/// full factor set appears or nothing new is produced.
ClosureResult closure(const OneFactorization& f);

// --- embeddings -------------------------------------------------------------

struct Embedding {
  std::vector<ProjPoint> vertex_points;  // indexed by vertex
  std::vector<ProjPoint> factor_points;  // indexed by factor
};

/// Checks injectivity, the arc condition on vertex images and the incidence
/// of each factor image with all of its edges.
bool is_embedding(const Plane& plane, const OneFactorization& f, const Embedding& e);

struct EmbedResult {
  std::vector<Embedding> embeddings;
  bool exhaustive = true;  // false when a limit or node budget stopped early
  std::uint64_t nodes = 0;
};

/// Embeddings with vertices 0..3 sent to (0,0,1), (0,1,1), (1,0,1), (1,1,1).
/// limit = 0 means no limit on embeddings; node_budget = 0 means unbounded.
EmbedResult embed_search(const OneFactorization& f, const Plane& plane, std::size_t limit = 0,
                         std::uint64_t node_budget = 0);

// --- classification ---------------------------------------------------------

struct ClassVerdict {
  int n = 0;
  int class_index = 0;
  bool forced_linear = false;  // closure contains the full factor set
  int closure_depth = 0;
  std::size_t embeddings = 0;
  std::size_t linear_embeddings = 0;
  std::size_t nonlinear_embeddings = 0;
  bool exhaustive = true;
};

struct NonlinearClass {
  int k = 0;
  int class_index = 0;
  std::vector<ProjPoint> arc_form;  // canonical projective form of the arc
  Embedding witness;
};

struct ClassificationReport {
  std::vector<ClassVerdict> classes;
  std::vector<NonlinearClass> nonlinear;  // one per projective class of arcs
  bool exhaustive = true;
};

/// For each 2 <= n <= max_k / 2: enumerate factorization classes, decide
/// forced linearity by closure, otherwise search embeddings and collect the
/// projective classes of arcs whose factor images are not collinear.
ClassificationReport classify_ghf(const Plane& plane, int max_k, std::uint64_t node_budget = 0,
                                  int threads = 1);

// --- catalog format ---------------------------------------------------------

/// "1-2 3-4|1-3 2-4|1-4 2-3": 1-based, pairs sorted, factors by smallest edge.
std::string to_catalog_line(const OneFactorization& f);
/// Throws std::invalid_argument on malformed input or an invalid factorization.
OneFactorization parse_catalog_line(const std::string& line);

}  // namespace hfarc
