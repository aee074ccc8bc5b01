#pragma once

// Hand-entered factorizations shared by several suites. Lists are written
// 1-based as in the usual notation and converted to 0-based vertices.

#include <random>
#include <utility>
#include <vector>

#include "hfarc/onefact.hpp"

namespace fixture {

using Lists = std::vector<std::vector<std::pair<int, int>>>;

inline hfarc::OneFactorization from_lists(int v, const Lists& lists) {
  std::vector<hfarc::OneFactor> factors;
  for (const auto& l : lists) {
    hfarc::OneFactor f;
    for (auto [a, b] : l) f.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
    std::sort(f.begin(), f.end());
    factors.push_back(std::move(f));
  }
  return hfarc::OneFactorization(v, std::move(factors));
}

/// K6 with F1..F5 in the order used for the triangle examples.
inline hfarc::OneFactorization k6() {
  return from_lists(6, {{{1, 2}, {3, 4}, {5, 6}},
                        {{1, 3}, {2, 5}, {4, 6}},
                        {{1, 4}, {2, 6}, {3, 5}},
                        {{1, 5}, {2, 4}, {3, 6}},
                        {{1, 6}, {2, 3}, {4, 5}}});
}

/// The K8 class that admits non-collinear embeddings.
inline hfarc::OneFactorization k8_open() {
  return from_lists(8, {{{8, 1}, {2, 3}, {4, 5}, {6, 7}},
                        {{8, 2}, {1, 3}, {4, 6}, {5, 7}},
                        {{8, 3}, {1, 2}, {4, 7}, {5, 6}},
                        {{8, 4}, {1, 5}, {2, 6}, {3, 7}},
                        {{8, 5}, {1, 4}, {2, 7}, {3, 6}},
                        {{8, 6}, {1, 7}, {2, 4}, {3, 5}},
                        {{8, 7}, {1, 6}, {2, 5}, {3, 4}}});
}

/// A K8 class whose focus points are always collinear.
inline hfarc::OneFactorization k8_closed() {
  return from_lists(8, {{{8, 1}, {2, 3}, {4, 5}, {6, 7}},
                        {{8, 2}, {1, 4}, {3, 6}, {5, 7}},
                        {{8, 3}, {1, 6}, {2, 5}, {4, 7}},
                        {{8, 4}, {1, 7}, {2, 6}, {3, 5}},
                        {{8, 5}, {1, 2}, {3, 7}, {4, 6}},
                        {{8, 6}, {1, 5}, {2, 7}, {3, 4}},
                        {{8, 7}, {1, 3}, {2, 4}, {5, 6}}});
}

inline std::vector<int> random_perm(int v, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixture
