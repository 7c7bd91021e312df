#pragma once

// Shared fixtures and brute-force oracles for the unit tests. Everything here
// is deliberately naive and independent of the library's search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "borsuk/graph.hpp"

namespace borsuk::testing {

inline Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph disjoint_triangles() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline bool subset_independent(const Graph& g, std::uint64_t s) {
  for (const auto& e : g.edges())
    if ((s >> e.u & 1) && (s >> e.v & 1)) return false;
  return true;
}

inline std::size_t alpha_bruteforce(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (subset_independent(g, s)) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

/// Every simple cycle as a vertex list, by trying all vertex sequences that
/// start at their minimum (exponential, tiny graphs only).
inline std::vector<std::vector<Vertex>> all_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    if (path.size() >= 3 && g.adjacent(tail, path.front()) && path[1] < tail) out.push_back(path);
    for (Vertex w = path.front() + 1; w < n; ++w) {
      if (used[w] || !g.adjacent(tail, w)) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, 0);
    used[s] = 1;
    rec(rec);
  }
  return out;
}

/// Pattern embeds iff some injective map works; tried over all permutations
/// of all target subsets.
inline bool embeds_bruteforce(const Graph& g, const Graph& pattern) {
  const auto n = g.order();
  const auto k = pattern.order();
  if (k > n) return false;
  std::vector<Vertex> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  // iterate all k-permutations through next_permutation on index vectors
  std::vector<int> selector(n, 0);
  std::fill(selector.begin(), selector.begin() + static_cast<long>(k), 1);
  std::sort(selector.begin(), selector.end());
  do {
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (selector[i]) chosen.push_back(static_cast<Vertex>(i));
    do {
      bool ok = true;
      for (const auto& e : pattern.edges()) {
        if (!g.adjacent(chosen[e.u], chosen[e.v])) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(selector.begin(), selector.end()));
  return false;
}

}  // namespace borsuk::testing
