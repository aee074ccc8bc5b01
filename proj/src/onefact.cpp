#include "hfarc/onefact.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "hfarc/blocking.hpp"

namespace hfarc {

OneFactorization::OneFactorization(int vertices, std::vector<OneFactor> factors)
    : v_(vertices), factors_(std::move(factors)) {
  if (v_ < 2 || v_ % 2 != 0 || v_ > kMaxVertices) {
    throw ContractError("1-factorization needs an even vertex count in [2, " + std::to_string(kMaxVertices) + "]");
  }
  if (static_cast<int>(factors_.size()) != v_ - 1) {
    throw ContractError("K_" + std::to_string(v_) + " needs " + std::to_string(v_ - 1) + " factors, got " +
                        std::to_string(factors_.size()));
  }
  color_.fill(-1);
  partner_.fill(-1);
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    OneFactor& fac = factors_[fi];
    if (static_cast<int>(fac.size()) != v_ / 2) {
      throw ContractError("factor " + std::to_string(fi + 1) + " is not a perfect matching");
    }
    for (auto& [u, w] : fac) {
      if (u > w) std::swap(u, w);
      if (u < 0 || w >= v_ || u == w) throw ContractError("factor " + std::to_string(fi + 1) + " has an invalid edge");
      const auto f8 = static_cast<std::int8_t>(fi);
      if (partner_[fi * kMaxVertices + static_cast<std::size_t>(u)] != -1 ||
          partner_[fi * kMaxVertices + static_cast<std::size_t>(w)] != -1) {
        throw ContractError("factor " + std::to_string(fi + 1) + " is not a perfect matching");
      }
      if (color_[static_cast<std::size_t>(u * kMaxVertices + w)] != -1) {
        throw ContractError("edge " + std::to_string(u + 1) + "-" + std::to_string(w + 1) + " lies in two factors");
      }
      partner_[fi * kMaxVertices + static_cast<std::size_t>(u)] = static_cast<std::int8_t>(w);
      partner_[fi * kMaxVertices + static_cast<std::size_t>(w)] = static_cast<std::int8_t>(u);
      color_[static_cast<std::size_t>(u * kMaxVertices + w)] = f8;
      color_[static_cast<std::size_t>(w * kMaxVertices + u)] = f8;
    }
    std::sort(fac.begin(), fac.end());
  }
}

OneFactorization relabel(const OneFactorization& f, const std::vector<int>& perm) {
  std::vector<OneFactor> out;
  for (const OneFactor& fac : f.factors()) {
    OneFactor g;
    for (auto [u, w] : fac) {
      int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(w)];
      g.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return OneFactorization(f.vertices(), std::move(out));
}

namespace {

// Partner tables of two factors given as raw arrays.
std::vector<int> cycle_lengths(const std::int8_t* pa, const std::int8_t* pb, int v) {
  std::vector<int> out;
  std::uint32_t seen = 0;
  for (int s = 0; s < v; ++s) {
    if (seen >> s & 1u) continue;
    int len = 0;
    int x = s;
    bool use_a = true;
    do {
      seen |= 1u << x;
      x = use_a ? pa[x] : pb[x];
      use_a = !use_a;
      ++len;
    } while (x != s || !use_a);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> cycle_type(const OneFactorization& f, int a, int b) {
  std::array<std::int8_t, kMaxVertices> pa{}, pb{};
  for (int u = 0; u < f.vertices(); ++u) {
    pa[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(f.partner(a, u));
    pb[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(f.partner(b, u));
  }
  return cycle_lengths(pa.data(), pb.data(), f.vertices());
}

// --- canonical form ---------------------------------------------------------
//
// A labeling is fixed by an ordered pair (a, b) of factors whose union has the
// least cycle type present, an order of the cycles of F_a u F_b (ascending
// length, any order among equal lengths), and a start vertex on each cycle.
// Each cycle is walked from its start along a first, so its vertices receive
// consecutive labels. Factor a gets label 0, b gets 1, and the remaining
// factors are labeled by the label of the partner of vertex 0. The code is the
// factor label of every edge (i, j), i < j, in lexicographic order; the
// canonical form is the least code over all such labelings.

namespace {

struct Canonicalizer {
  const OneFactorization& f;
  int v;
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur;

  int a = 0, b = 0;
  std::vector<std::vector<int>> cycles;  // a-first walks, sorted by length
  std::vector<int> order;                // new label -> old vertex
  std::vector<char> used;

  explicit Canonicalizer(const OneFactorization& fz) : f(fz), v(fz.vertices()) {}

  void evaluate() {
    std::array<int, kMaxVertices> inv{};
    for (int i = 0; i < v; ++i) inv[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::array<int, kMaxVertices> clab{};
    std::vector<std::pair<int, int>> rest;
    const int v0 = order[0];
    for (int c = 0; c < v - 1; ++c) {
      if (c == a || c == b) continue;
      rest.emplace_back(inv[static_cast<std::size_t>(f.partner(c, v0))], c);
    }
    std::sort(rest.begin(), rest.end());
    clab[static_cast<std::size_t>(a)] = 0;
    clab[static_cast<std::size_t>(b)] = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) clab[static_cast<std::size_t>(rest[i].second)] = static_cast<int>(i) + 2;

    // Stream the code, abandoning as soon as it exceeds the best so far.
    cur.assign(1, static_cast<std::uint8_t>(v));
    bool smaller = best.empty();
    std::size_t pos = 1;
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j, ++pos) {
        const auto x = static_cast<std::uint8_t>(
            clab[static_cast<std::size_t>(f.color(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))]);
        if (!smaller) {
          if (x > best[pos]) return;
          if (x < best[pos]) smaller = true;
        }
        cur.push_back(x);
      }
    }
    if (smaller) best = cur;
  }

  void place(std::size_t slot) {
    if (slot == cycles.size()) {
      evaluate();
      return;
    }
    const std::size_t len = cycles[slot].size();
    const std::size_t base = order.size();
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (used[c] || cycles[c].size() != len) continue;
      used[c] = 1;
      const auto& cyc = cycles[c];
      for (std::size_t t = 0; t < len; ++t) {
        // Even offsets leave along a in the stored direction, odd ones reverse.
        order.resize(base);
        for (std::size_t s = 0; s < len; ++s) {
          const std::size_t idx = (t % 2 == 0) ? (t + s) % len : (t + len - s) % len;
          order.push_back(cyc[idx]);
        }
        place(slot + 1);
      }
      order.resize(base);
      used[c] = 0;
    }
  }

  std::vector<std::uint8_t> run() {
    const int nf = v - 1;
    std::vector<int> least;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < nf; ++x) {
      for (int y = x + 1; y < nf; ++y) {
        auto t = cycle_type(f, x, y);
        if (pairs.empty() || t < least) {
          least = std::move(t);
          pairs.assign(1, {x, y});
        } else if (t == least) {
          pairs.emplace_back(x, y);
        }
      }
    }
    if (nf == 1) {
      return {static_cast<std::uint8_t>(v), 0};
    }
    for (auto [x, y] : pairs) {
      for (int swap = 0; swap < 2; ++swap) {
        a = swap ? y : x;
        b = swap ? x : y;
        cycles.clear();
        std::uint32_t seen = 0;
        for (int s = 0; s < v; ++s) {
          if (seen >> s & 1u) continue;
          std::vector<int> cyc;
          int cur_v = s;
          bool use_a = true;
          do {
            seen |= 1u << cur_v;
            cyc.push_back(cur_v);
            cur_v = use_a ? f.partner(a, cur_v) : f.partner(b, cur_v);
            use_a = !use_a;
          } while (cur_v != s);
          cycles.push_back(std::move(cyc));
        }
        std::stable_sort(cycles.begin(), cycles.end(),
                         [](const auto& p, const auto& q) { return p.size() < q.size(); });
        used.assign(cycles.size(), 0);
        order.clear();
        place(0);
      }
    }
    return best;
  }
};

}  // namespace

CanonicalForm canonical_form(const OneFactorization& f) { return CanonicalForm{Canonicalizer(f).run()}; }

OneFactorization from_canonical(const CanonicalForm& c) {
  if (c.code.empty()) throw ContractError("empty canonical code");
  const int v = c.code[0];
  if (c.code.size() != 1 + static_cast<std::size_t>(v * (v - 1) / 2)) throw ContractError("malformed canonical code");
  std::vector<OneFactor> factors(static_cast<std::size_t>(v - 1));
  std::size_t pos = 1;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      const std::size_t lab = c.code[pos++];
      if (lab >= factors.size()) throw ContractError("malformed canonical code");
      factors[lab].emplace_back(i, j);
    }
  }
  return OneFactorization(v, std::move(factors));
}

bool isomorphic(const OneFactorization& a, const OneFactorization& b) {
  return a.vertices() == b.vertices() && canonical_form(a) == canonical_form(b);
}

// --- enumeration ------------------------------------------------------------

namespace {

void even_partitions(int rest, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= rest; p += 2) {
    cur.push_back(p);
    even_partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

/// Completes a fixed pair of factors whose union has cycle type `type`,
/// keeping only colourings in which every pair of factors has type >= `type`.
class Completer {
 public:
  Completer(int v, std::vector<int> type) : v_(v), type_(std::move(type)) {
    col_.fill(-1);
    partner_.fill(-1);
    int s = 0;
    for (int len : type_) {
      for (int i = 0; i < len; ++i) {
        const int x = s + i;
        const int y = s + (i + 1) % len;
        set_edge(i % 2 == 0 ? 0 : 1, x, y);
      }
      s += len;
    }
  }

  void run(std::set<CanonicalForm>& found) {
    found_ = &found;
    next_factor(2);
  }

 private:
  void set_edge(int c, int x, int y) {
    col_[static_cast<std::size_t>(x * kMaxVertices + y)] = static_cast<std::int8_t>(c);
    col_[static_cast<std::size_t>(y * kMaxVertices + x)] = static_cast<std::int8_t>(c);
    partner_[static_cast<std::size_t>(c * kMaxVertices + x)] = static_cast<std::int8_t>(y);
    partner_[static_cast<std::size_t>(c * kMaxVertices + y)] = static_cast<std::int8_t>(x);
  }
  void clear_edge(int c, int x, int y) {
    col_[static_cast<std::size_t>(x * kMaxVertices + y)] = -1;
    col_[static_cast<std::size_t>(y * kMaxVertices + x)] = -1;
    partner_[static_cast<std::size_t>(c * kMaxVertices + x)] = -1;
    partner_[static_cast<std::size_t>(c * kMaxVertices + y)] = -1;
  }
  bool uncolored(int x, int y) const { return col_[static_cast<std::size_t>(x * kMaxVertices + y)] < 0; }

  void next_factor(int c) {
    if (c == v_ - 1) {
      leaf();
      return;
    }
    // Factor c holds the least uncoloured edge at vertex 0.
    int w = 1;
    while (!uncolored(0, w)) ++w;
    set_edge(c, 0, w);
    fill(c, (1u << 0) | (1u << w));
    clear_edge(c, 0, w);
  }

  void fill(int c, std::uint32_t matched) {
    const std::uint32_t all = (v_ == 32) ? ~0u : ((1u << v_) - 1);
    if (matched == all) {
      const std::int8_t* pc = &partner_[static_cast<std::size_t>(c * kMaxVertices)];
      for (int d = 0; d < c; ++d) {
        if (cycle_lengths(&partner_[static_cast<std::size_t>(d * kMaxVertices)], pc, v_) < type_) return;
      }
      next_factor(c + 1);
      return;
    }
    const int u = std::countr_one(matched);
    for (int x = u + 1; x < v_; ++x) {
      if ((matched >> x & 1u) || !uncolored(u, x)) continue;
      set_edge(c, u, x);
      fill(c, matched | (1u << u) | (1u << x));
      clear_edge(c, u, x);
    }
  }

  void leaf() {
    std::vector<OneFactor> factors(static_cast<std::size_t>(v_ - 1));
    for (int x = 0; x < v_; ++x) {
      for (int y = x + 1; y < v_; ++y) factors[static_cast<std::size_t>(col_[static_cast<std::size_t>(x * kMaxVertices + y)])].emplace_back(x, y);
    }
    found_->insert(canonical_form(OneFactorization(v_, std::move(factors))));
  }

  int v_;
  std::vector<int> type_;
  std::array<std::int8_t, kMaxVertices * kMaxVertices> col_{};
  std::array<std::int8_t, kMaxVertices * kMaxVertices> partner_{};
  std::set<CanonicalForm>* found_ = nullptr;
};

}  // namespace

std::vector<OneFactorization> enumerate_factorizations(int n) {
  if (n < 2 || n > 6) throw ContractError("enumerate_factorizations supports 2 <= n <= 6, got " + std::to_string(n));
  const int v = 2 * n;
  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  even_partitions(v, 4, cur, types);
  std::sort(types.begin(), types.end());

  std::set<CanonicalForm> found;
  if (n == 2) {
    found.insert(canonical_form(OneFactorization(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}})));
  }
  for (const auto& t : types) Completer(v, t).run(found);

  std::vector<OneFactorization> out;
  out.reserve(found.size());
  for (const CanonicalForm& c : found) out.push_back(from_canonical(c));
  return out;
}

// --- triangle closure -------------------------------------------------------

bool ClosureFamily::contains(std::uint32_t mask) const {
  return std::binary_search(members.begin(), members.end(), mask);
}

ClosureFamily t0_triples(const OneFactorization& f) {
  std::set<std::uint32_t> masks;
  const int v = f.vertices();
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      for (int z = y + 1; z < v; ++z) {
        masks.insert((1u << f.color(x, y)) | (1u << f.color(x, z)) | (1u << f.color(y, z)));
      }
    }
  }
  return ClosureFamily{f.num_factors(), {masks.begin(), masks.end()}};
}

ClosureResult closure(const OneFactorization& f) {
  ClosureResult res;
  res.family = t0_triples(f);
  const std::uint32_t full = (1u << f.num_factors()) - 1;
  std::vector<char> in(std::size_t{1} << f.num_factors(), 0);
  for (std::uint32_t m : res.family.members) in[m] = 1;
  auto& members = res.family.members;
  while (!in[full]) {
    const std::vector<std::uint32_t> prev = members;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (std::size_t j = i + 1; j < prev.size(); ++j) {
        if (std::popcount(prev[i] & prev[j]) < 2) continue;
        const std::uint32_t u = prev[i] | prev[j];
        if (!in[u]) {
          in[u] = 1;
          members.push_back(u);
        }
      }
    }
    if (members.size() == prev.size()) break;
    ++res.depth;
  }
  std::sort(members.begin(), members.end());
  res.contains_all = in[full] != 0;
  return res;
}

// --- embeddings -------------------------------------------------------------

bool is_embedding(const Plane& plane, const OneFactorization& f, const Embedding& e) {
  const auto v = static_cast<std::size_t>(f.vertices());
  if (e.vertex_points.size() != v || e.factor_points.size() != v - 1) return false;
  std::vector<ProjPoint> all = e.vertex_points;
  all.insert(all.end(), e.factor_points.begin(), e.factor_points.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  const auto& vp = e.vertex_points;
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      for (std::size_t z = y + 1; z < v; ++z) {
        if (plane.collinear(vp[x], vp[y], vp[z])) return false;
      }
    }
  }
  for (std::size_t fi = 0; fi < f.factors().size(); ++fi) {
    for (auto [x, y] : f.factors()[fi]) {
      if (!plane.collinear(e.factor_points[fi], vp[static_cast<std::size_t>(x)], vp[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

class EmbedSearch {
 public:
  EmbedSearch(const OneFactorization& f, const Plane& plane, std::size_t limit, std::uint64_t budget)
      : f_(f), plane_(plane), limit_(limit), budget_(budget), all_points_(plane.all_points()) {}

  EmbedResult run() {
    State s;
    s.blocked.assign(plane_.num_points(), 0);
    const auto frame = unit_square_frame(plane_);
    bool ok = true;
    for (int w = 0; w < 4 && ok && w < f_.vertices(); ++w) ok = place(s, w, frame[static_cast<std::size_t>(w)]);
    if (ok) extend(s, std::min(4, f_.vertices()));
    return std::move(res_);
  }

 private:
  enum : std::uint8_t { kFree = 0, kOnLine = 1, kFixed = 2 };

  struct State {
    std::array<ProjPoint, kMaxVertices> vp{};
    std::array<ProjPoint, kMaxVertices> fp{};
    std::array<ProjLine, kMaxVertices> fl{};
    std::array<std::uint8_t, kMaxVertices> fstat{};
    std::vector<char> blocked;
  };

  bool stop() const {
    return (limit_ != 0 && res_.embeddings.size() >= limit_) || (budget_ != 0 && res_.nodes >= budget_);
  }

  bool place(State& s, int w, const ProjPoint& p) {
    ++res_.nodes;
    if (s.blocked[plane_.index(p)]) return false;
    std::array<ProjLine, kMaxVertices> lines{};
    for (int u = 0; u < w; ++u) {
      const auto fu = static_cast<std::size_t>(f_.color(u, w));
      const ProjLine l = plane_.line_through(s.vp[static_cast<std::size_t>(u)], p);
      lines[static_cast<std::size_t>(u)] = l;
      if (s.fstat[fu] == kFixed) {
        if (!plane_.incident(s.fp[fu], l)) return false;
      } else if (s.fstat[fu] == kOnLine) {
        const ProjPoint x = plane_.meet(s.fl[fu], l);
        for (std::size_t g = 0; g < static_cast<std::size_t>(f_.num_factors()); ++g) {
          if (s.fstat[g] == kFixed && s.fp[g] == x) return false;
        }
        for (int z = 0; z < w; ++z) {
          if (s.vp[static_cast<std::size_t>(z)] == x) return false;
        }
        if (x == p) return false;
        s.fp[fu] = x;
        s.fstat[fu] = kFixed;
      } else {
        s.fl[fu] = l;
        s.fstat[fu] = kOnLine;
      }
    }
    s.vp[static_cast<std::size_t>(w)] = p;
    s.blocked[plane_.index(p)] = 1;
    for (int u = 0; u < w; ++u) {
      for (const ProjPoint& x : plane_.points_on(lines[static_cast<std::size_t>(u)])) s.blocked[plane_.index(x)] = 1;
    }
    return true;
  }

  void extend(const State& s, int w) {
    if (stop()) {
      res_.exhaustive = false;
      return;
    }
    if (w == f_.vertices()) {
      Embedding e;
      for (int x = 0; x < w; ++x) e.vertex_points.push_back(s.vp[static_cast<std::size_t>(x)]);
      for (int g = 0; g < f_.num_factors(); ++g) {
        if (s.fstat[static_cast<std::size_t>(g)] != kFixed) return;
        e.factor_points.push_back(s.fp[static_cast<std::size_t>(g)]);
      }
      if (is_embedding(plane_, f_, e)) res_.embeddings.push_back(std::move(e));
      return;
    }
    // A fixed factor image pins the new vertex to one line.
    const std::vector<ProjPoint>* cands = &all_points_;
    std::vector<ProjPoint> on_line;
    for (int u = 0; u < w; ++u) {
      const auto fu = static_cast<std::size_t>(f_.color(u, w));
      if (s.fstat[fu] == kFixed) {
        on_line = plane_.points_on(plane_.line_through(s.vp[static_cast<std::size_t>(u)], s.fp[fu]));
        cands = &on_line;
        break;
      }
    }
    for (const ProjPoint& p : *cands) {
      if (s.blocked[plane_.index(p)]) continue;
      State t = s;
      if (place(t, w, p)) extend(t, w + 1);
      if (stop()) {
        res_.exhaustive = false;
        return;
      }
    }
  }

  const OneFactorization& f_;
  const Plane& plane_;
  std::size_t limit_;
  std::uint64_t budget_;
  std::vector<ProjPoint> all_points_;
  EmbedResult res_;
};

}  // namespace

EmbedResult embed_search(const OneFactorization& f, const Plane& plane, std::size_t limit, std::uint64_t node_budget) {
  if (f.vertices() < 4) return {};
  return EmbedSearch(f, plane, limit, node_budget).run();
}

// --- classification ---------------------------------------------------------

namespace {

struct ClassOutcome {
  ClassVerdict verdict;
  std::vector<std::pair<std::vector<ProjPoint>, Embedding>> nonlinear;  // one per arc form
};

ClassOutcome classify_one(const Plane& plane, const OneFactorization& f, int n, int idx, std::uint64_t budget) {
  ClassOutcome out;
  ClassVerdict& v = out.verdict;
  v.n = n;
  v.class_index = idx;
  const ClosureResult c = closure(f);
  v.closure_depth = c.depth;
  v.forced_linear = c.contains_all;
  if (c.contains_all) return out;
  const EmbedResult er = embed_search(f, plane, 0, budget);
  v.exhaustive = er.exhaustive;
  v.embeddings = er.embeddings.size();
  std::map<std::vector<ProjPoint>, std::vector<ProjPoint>> form_cache;
  std::map<std::vector<ProjPoint>, Embedding> forms;
  for (const Embedding& e : er.embeddings) {
    if (plane.all_collinear(e.factor_points)) {
      ++v.linear_embeddings;
      continue;
    }
    ++v.nonlinear_embeddings;
    std::vector<ProjPoint> key = e.vertex_points;
    std::sort(key.begin(), key.end());
    auto it = form_cache.find(key);
    if (it == form_cache.end()) {
      it = form_cache.emplace(key, canonical_arc_form(Arc(plane, e.vertex_points))).first;
    }
    forms.emplace(it->second, e);
  }
  for (auto& [form, e] : forms) out.nonlinear.emplace_back(form, e);
  return out;
}

}  // namespace

ClassificationReport classify_ghf(const Plane& plane, int max_k, std::uint64_t node_budget, int threads) {
  if (max_k < 4 || max_k > 2 * 6) throw ContractError("classify_ghf supports 4 <= max_k <= 12");
  ClassificationReport rep;
  threads = std::max(1, threads);
  for (int n = 2; 2 * n <= max_k; ++n) {
    const std::vector<OneFactorization> classes = enumerate_factorizations(n);
    std::vector<ClassOutcome> outcomes(classes.size());
    auto work = [&](std::size_t t) {
      for (std::size_t i = t; i < classes.size(); i += static_cast<std::size_t>(threads)) {
        outcomes[i] = classify_one(plane, classes[i], n, static_cast<int>(i), node_budget);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    }
    // Several factorization classes may realise the same arc; keep the first.
    std::set<std::vector<ProjPoint>> seen;
    for (ClassOutcome& o : outcomes) {
      rep.exhaustive = rep.exhaustive && o.verdict.exhaustive;
      rep.classes.push_back(o.verdict);
      for (auto& [form, e] : o.nonlinear) {
        if (!seen.insert(form).second) continue;
        rep.nonlinear.push_back(NonlinearClass{2 * n, o.verdict.class_index, form, std::move(e)});
      }
    }
  }
  return rep;
}

// --- catalog format ---------------------------------------------------------

std::string to_catalog_line(const OneFactorization& f) {
  std::vector<OneFactor> facs = f.factors();
  std::sort(facs.begin(), facs.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < facs.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < facs[i].size(); ++j) {
      if (j) os << ' ';
      os << facs[i][j].first + 1 << '-' << facs[i][j].second + 1;
    }
  }
  return os.str();
}

OneFactorization parse_catalog_line(const std::string& line) {
  std::vector<OneFactor> factors;
  int max_v = 0;
  std::stringstream ls(line);
  std::string part;
  while (std::getline(ls, part, '|')) {
    OneFactor fac;
    std::istringstream ps(part);
    std::string tok;
    while (ps >> tok) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
        throw std::invalid_argument("malformed pair '" + tok + "'");
      }
      std::size_t used_a = 0, used_b = 0;
      int a = 0, b = 0;
      try {
        a = std::stoi(tok.substr(0, dash), &used_a);
        b = std::stoi(tok.substr(dash + 1), &used_b);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed pair '" + tok + "'");
      }
      if (used_a != dash || used_b != tok.size() - dash - 1 || a < 1 || b < 1) {
        throw std::invalid_argument("malformed pair '" + tok + "'");
      }
      max_v = std::max({max_v, a, b});
      fac.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
    }
    if (fac.empty()) throw std::invalid_argument("empty factor");
    factors.push_back(std::move(fac));
  }
  if (factors.empty()) throw std::invalid_argument("empty catalog line");
  try {
    return OneFactorization(max_v, std::move(factors));
  } catch (const ContractError& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace hfarc
