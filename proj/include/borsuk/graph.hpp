#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "borsuk/error.hpp"

namespace borsuk {

using Vertex = int;
using Mask = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order-1. Immutable once built; the
/// edge list is kept sorted with u < v so equal data compares equal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges = {},
                 std::vector<std::string> labels = {})
      : order_(order), adjacency_(order), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != order_) {
      throw PreconditionError("graph: label count " + std::to_string(labels_.size()) +
                              " does not match order " + std::to_string(order_));
    }
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= order_ ||
          static_cast<std::size_t>(b) >= order_) {
        throw PreconditionError("graph: edge endpoint out of range");
      }
      if (a == b) throw PreconditionError("graph: loop at vertex " + std::to_string(a));
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw PreconditionError("graph: duplicate edge");
    }
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_ && labels_ == other.labels_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Cyclically adjacent, pairwise distinct vertex sequence.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const CycleWitness&) const = default;
};

inline bool is_cycle_in(const Graph& g, const CycleWitness& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex v = vs[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (!g.adjacent(v, vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle_graph: need at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// Vertex-induced subgraph on `keep` (ascending), with the map back to `g`.
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                             const std::vector<char>& keep) {
  std::vector<Vertex> original;
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      index[v] = static_cast<Vertex>(original.size());
      original.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.emplace_back(index[e.u], index[e.v]);
  }
  return {Graph(original.size(), edges), std::move(original)};
}

namespace detail {

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline void require_order(const Graph& g, std::size_t bound, const char* what) {
  const std::size_t hard = std::min<std::size_t>(bound, 64);
  if (g.order() > hard) throw TooLarge(what, g.order(), hard);
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Length of the shortest odd closed walk through `v`, via BFS on the
// bipartite double cover; -1 if none exists.
inline int shortest_odd_closed_walk(const Graph& g, Vertex v) {
  const auto n = g.order();
  std::vector<int> dist(2 * n, -1);
  std::queue<std::size_t> q;
  dist[2 * v] = 0;
  q.push(2 * v);
  while (!q.empty()) {
    const auto state = q.front();
    q.pop();
    const auto u = static_cast<Vertex>(state / 2);
    const auto parity = state % 2;
    for (Vertex w : g.neighbors(u)) {
      const auto next = 2 * static_cast<std::size_t>(w) + (1 - parity);
      if (dist[next] < 0) {
        dist[next] = dist[state] + 1;
        if (next == 2 * static_cast<std::size_t>(v) + 1) return dist[next];
        q.push(next);
      }
    }
  }
  return -1;
}

// Depth-first search for cycles through `start` (the smallest vertex on the
// cycle) in lexicographic order of their canonical vertex sequence. The
// visitor receives each closed path and returns true to stop. `allowed`
// restricts usable vertices; `target_length` (0 = any) fixes the length.
template <typename Visitor, typename Prune>
bool enumerate_cycles_from(const Graph& g, Vertex start, const std::vector<char>& allowed,
                           std::size_t target_length, const std::vector<int>& dist_to_start,
                           Visitor&& visit, Prune&& prune) {
  std::vector<Vertex> path{start};
  std::vector<char> on_path(g.order(), 0);
  on_path[start] = 1;

  auto recurse = [&](auto&& self) -> bool {
    const Vertex tail = path.back();
    const std::size_t len = path.size();
    if (len >= 3 && g.adjacent(tail, start) && path[1] < tail &&
        (target_length == 0 || len == target_length)) {
      if (visit(path)) return true;
    }
    if (target_length != 0 && len >= target_length) return false;
    for (Vertex w : g.neighbors(tail)) {
      if (w <= start || on_path[w] || !allowed[w]) continue;
      if (target_length != 0) {
        const int remaining = static_cast<int>(target_length - len);
        if (dist_to_start[w] < 0 || dist_to_start[w] > remaining) continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      const bool stop = !prune(path) && self(self);
      on_path[w] = 0;
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return recurse(recurse);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cycles and bipartiteness

/// Length of a shortest cycle; nullopt means the graph is a forest (infinite girth).
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  const auto n = g.order();
  std::vector<int> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    parent[root] = -1;
    q.push(static_cast<Vertex>(root));
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

struct Bipartition {
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
  bool operator==(const Bipartition&) const = default;
};

/// Two-colouring with each component's smallest vertex in part1, or nullopt.
inline std::optional<Bipartition> is_bipartite_with_parts(const Graph& g) {
  const auto n = g.order();
  std::vector<int> side(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(root));
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) {
    (side[v] == 0 ? parts.part1 : parts.part2).push_back(static_cast<Vertex>(v));
  }
  return parts;
}

namespace detail {

inline bool bipartite_without(const Graph& g, const std::vector<char>& removed) {
  const auto n = g.order();
  std::vector<int> side(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (removed[root] || side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(root));
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (removed[w]) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// A minimum-length odd cycle, lexicographically least among those; nullopt
/// iff the graph is bipartite.
inline std::optional<CycleWitness> shortest_odd_cycle(const Graph& g) {
  const auto n = g.order();
  int best = -1;
  std::vector<int> walk(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    walk[v] = detail::shortest_odd_closed_walk(g, static_cast<Vertex>(v));
    if (walk[v] > 0 && (best < 0 || walk[v] < best)) best = walk[v];
  }
  if (best < 0) return std::nullopt;

  const std::vector<char> allowed(n, 1);
  for (std::size_t s = 0; s < n; ++s) {
    if (walk[s] != best) continue;
    const auto start = static_cast<Vertex>(s);
    const auto dist = detail::bfs_distances(g, start);
    std::optional<CycleWitness> found;
    detail::enumerate_cycles_from(
        g, start, allowed, static_cast<std::size_t>(best), dist,
        [&](const std::vector<Vertex>& path) {
          found = CycleWitness{path};
          return true;
        },
        [](const std::vector<Vertex>&) { return false; });
    if (found) return found;
  }
  return std::nullopt;  // unreachable: a vertex realising `best` lies on such a cycle
}

struct OddCycleIntersection {
  bool pairwise_intersect = true;
  /// Two vertex-disjoint odd cycles, present iff pairwise_intersect is false.
  std::optional<std::pair<CycleWitness, CycleWitness>> disjoint_pair;
};

/// Decides whether every two odd cycles share a vertex. Odd cycles are
/// enumerated in lexicographic order; a branch is cut as soon as removing the
/// partial path already leaves a bipartite graph, since any completion removes
/// a superset of those vertices.
inline OddCycleIntersection odd_cycles_pairwise_intersect(const Graph& g, std::size_t bound = 24) {
  detail::require_order(g, bound, "odd_cycles_pairwise_intersect");
  OddCycleIntersection result;
  const auto n = g.order();
  std::vector<char> removed(n, 0);
  if (detail::bipartite_without(g, removed)) return result;

  std::vector<char> allowed(n, 1);
  const std::vector<int> unused_dist;
  for (std::size_t s = 0; s < n && result.pairwise_intersect; ++s) {
    const auto start = static_cast<Vertex>(s);
    auto prune = [&](const std::vector<Vertex>& path) {
      std::fill(removed.begin(), removed.end(), 0);
      for (Vertex v : path) removed[v] = 1;
      return detail::bipartite_without(g, removed);
    };
    auto visit = [&](const std::vector<Vertex>& path) {
      if (path.size() % 2 == 0) return false;
      std::vector<char> keep(n, 1);
      for (Vertex v : path) keep[v] = 0;
      auto [rest, original] = induced_subgraph(g, keep);
      auto other = shortest_odd_cycle(rest);
      if (!other) return false;
      for (auto& v : other->vertices) v = original[v];
      result.pairwise_intersect = false;
      result.disjoint_pair = std::make_pair(CycleWitness{path}, *other);
      return true;
    };
    std::vector<char> path_removed(n, 0);
    path_removed[start] = 1;
    if (detail::bipartite_without(g, path_removed)) continue;
    detail::enumerate_cycles_from(g, start, allowed, 0, unused_dist, visit, prune);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Constructions

/// Generalized Mycielskian with levels 0..p and one apex. Vertex v at level j
/// has index j*|V| + v; the apex is last. Edges: u0-v0 for uv in E,
/// uj-v(j+1) and vj-u(j+1) for 0 <= j < p, and apex-v(p) for all v.
/// mycielskian(C_{2k+1}, 0) is the wheel W_{2k+2}.
inline Graph mycielskian(const Graph& g, std::size_t p) {
  const auto n = g.order();
  const auto at = [n](Vertex v, std::size_t level) {
    return static_cast<Vertex>(level * n + static_cast<std::size_t>(v));
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(at(e.u, 0), at(e.v, 0));
  for (std::size_t j = 0; j < p; ++j) {
    for (const auto& e : g.edges()) {
      edges.emplace_back(at(e.u, j), at(e.v, j + 1));
      edges.emplace_back(at(e.v, j), at(e.u, j + 1));
    }
  }
  const auto apex = static_cast<Vertex>((p + 1) * n);
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(apex, at(static_cast<Vertex>(v), p));
  return Graph((p + 1) * n + 1, edges);
}

/// Wheel W_{rim+1}: rim cycle on 0..rim-1, hub = rim.
inline Graph wheel_graph(std::size_t rim) { return mycielskian(cycle_graph(rim), 0); }

// ---------------------------------------------------------------------------
// Subgraph search

/// Lexicographically least injective map of `pattern` into `g` that carries
/// pattern edges onto edges of `g` (not necessarily induced).
inline std::optional<std::vector<Vertex>> contains_subgraph(const Graph& g, const Graph& pattern) {
  const auto pn = pattern.order();
  if (pn > g.order()) return std::nullopt;
  std::vector<Vertex> image(pn, -1);
  std::vector<char> used(g.order(), 0);

  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == pn) return true;
    const auto pv = static_cast<Vertex>(i);
    for (std::size_t c = 0; c < g.order(); ++c) {
      const auto cand = static_cast<Vertex>(c);
      if (used[cand] || g.degree(cand) < pattern.degree(pv)) continue;
      bool ok = true;
      for (Vertex pw : pattern.neighbors(pv)) {
        if (pw < pv && !g.adjacent(image[pw], cand)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[pv] = cand;
      used[cand] = 1;
      if (self(self, i + 1)) return true;
      used[cand] = 0;
    }
    image[pv] = -1;
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return image;
}

struct WheelEmbedding {
  Vertex hub = -1;
  CycleWitness rim;
  bool operator==(const WheelEmbedding&) const = default;
};

/// Plain (non-subdivided) wheel W_{2m+2}: a hub adjacent to every vertex of a
/// (2m+1)-cycle. Smallest hub first, then the lexicographically least rim.
inline std::optional<WheelEmbedding> wheel_subgraph(const Graph& g, std::size_t m) {
  if (m == 0) throw PreconditionError("wheel_subgraph: m must be positive");
  const std::size_t rim = 2 * m + 1;
  const auto n = g.order();
  for (std::size_t h = 0; h < n; ++h) {
    const auto hub = static_cast<Vertex>(h);
    if (g.degree(hub) < rim) continue;
    std::vector<char> allowed(n, 0);
    for (Vertex w : g.neighbors(hub)) allowed[w] = 1;
    auto [local, original] = induced_subgraph(g, allowed);
    const std::vector<char> all(local.order(), 1);
    for (std::size_t s = 0; s < local.order(); ++s) {
      const auto start = static_cast<Vertex>(s);
      const auto dist = detail::bfs_distances(local, start);
      std::optional<CycleWitness> found;
      detail::enumerate_cycles_from(
          local, start, all, rim, dist,
          [&](const std::vector<Vertex>& path) {
            found = CycleWitness{path};
            return true;
          },
          [](const std::vector<Vertex>&) { return false; });
      if (found) {
        for (auto& v : found->vertices) v = original[v];
        return WheelEmbedding{hub, *found};
      }
    }
  }
  return std::nullopt;
}

struct TopologicalWheel {
  Vertex hub = -1;
  CycleWitness rim;
  /// One hub-to-rim path per branch vertex; interiors avoid the rim and each other.
  std::vector<std::vector<Vertex>> spokes;
};

namespace detail {

/// Vertex-disjoint paths from `hub` to distinct vertices of `rim`, touching
/// the rim only at their ends (unit-capacity max flow on split vertices).
inline std::vector<std::vector<Vertex>> spokes_to_cycle(const Graph& g, Vertex hub,
                                                        const std::vector<Vertex>& rim,
                                                        std::size_t wanted) {
  const auto n = g.order();
  const std::size_t nodes = 2 * n + 1, sink = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  std::vector<char> on_rim(n, 0);
  for (Vertex v : rim) on_rim[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (on_rim[v]) {
      cap[2 * v][sink] = 1;
    } else if (static_cast<Vertex>(v) != hub) {
      cap[2 * v][2 * v + 1] = 1;
    }
  }
  for (const auto& e : g.edges()) {
    cap[2 * e.u + 1][2 * e.v] = 1;
    cap[2 * e.v + 1][2 * e.u] = 1;
  }
  const std::size_t source = 2 * static_cast<std::size_t>(hub) + 1;
  std::size_t flow = 0;
  while (flow < wanted) {
    std::vector<int> parent(nodes, -1);
    parent[source] = static_cast<int>(source);
    std::queue<std::size_t> q;
    q.push(source);
    while (!q.empty() && parent[sink] < 0) {
      const auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < nodes; ++y) {
        if (cap[x][y] > 0 && parent[y] < 0) {
          parent[y] = static_cast<int>(x);
          q.push(y);
        }
      }
    }
    if (parent[sink] < 0) return {};
    for (std::size_t y = sink; y != source; y = static_cast<std::size_t>(parent[y])) {
      const auto x = static_cast<std::size_t>(parent[y]);
      --cap[x][y];
      ++cap[y][x];
    }
    ++flow;
  }
  // read the paths back off the saturated vertex-to-vertex arcs
  std::vector<std::vector<Vertex>> paths;
  for (Vertex first : g.neighbors(hub)) {
    if (cap[source][2 * static_cast<std::size_t>(first)] != 0) continue;
    std::vector<Vertex> path{hub, first};
    Vertex at = first;
    while (!on_rim[at]) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(at)) {
        if (w != hub && cap[2 * static_cast<std::size_t>(at) + 1][2 * static_cast<std::size_t>(w)] == 0 &&
            std::find(path.begin(), path.end(), w) == path.end()) {
          next = w;
          break;
        }
      }
      if (next < 0) return {};
      path.push_back(next);
      at = next;
    }
    paths.push_back(std::move(path));
  }
  if (paths.size() < wanted) return {};
  paths.resize(wanted);
  return paths;
}

}  // namespace detail

/// Subdivided wheel: a hub, a cycle avoiding it, and 2m+1 internally disjoint
/// hub-to-cycle paths ending at distinct cycle vertices. Exhaustive over hubs
/// and cycles, so meant for small graphs.
inline std::optional<TopologicalWheel> topological_wheel(const Graph& g, std::size_t m,
                                                         std::size_t bound = 24) {
  if (m == 0) throw PreconditionError("topological_wheel: m must be positive");
  detail::require_order(g, bound, "topological_wheel");
  const std::size_t r = 2 * m + 1;
  const auto n = g.order();
  const std::vector<int> unused;
  for (std::size_t h = 0; h < n; ++h) {
    const auto hub = static_cast<Vertex>(h);
    if (g.degree(hub) < r) continue;
    std::vector<char> allowed(n, 1);
    allowed[h] = 0;
    std::optional<TopologicalWheel> found;
    for (std::size_t s = 0; s < n && !found; ++s) {
      if (s == h) continue;
      detail::enumerate_cycles_from(
          g, static_cast<Vertex>(s), allowed, 0, unused,
          [&](const std::vector<Vertex>& cycle) {
            if (cycle.size() < r) return false;
            auto spokes = detail::spokes_to_cycle(g, hub, cycle, r);
            if (spokes.empty()) return false;
            found = TopologicalWheel{hub, CycleWitness{cycle}, std::move(spokes)};
            return true;
          },
          [](const std::vector<Vertex>&) { return false; });
    }
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Independent sets

/// Exact independence number by branch and bound on vertex masks.
inline std::size_t independence_number(const Graph& g, std::size_t bound = 40) {
  detail::require_order(g, bound, "independence_number");
  const auto adj = detail::adjacency_masks(g);
  const auto n = g.order();

  // greedy seed: repeatedly take a minimum-degree vertex
  std::size_t best = 0;
  {
    Mask cand = detail::low_bits(n);
    while (cand) {
      int pick = -1;
      int pick_deg = std::numeric_limits<int>::max();
      for (Mask rest = cand; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(adj[v] & cand);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++best;
      cand &= ~(adj[pick] | (Mask{1} << pick));
    }
  }

  auto search = [&](auto&& self, Mask cand, std::size_t size) -> void {
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    int pivot = -1;
    int pivot_deg = -1;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[v] & cand);
      if (d <= 1) {
        // a vertex of degree <= 1 can always be taken
        self(self, cand & ~(adj[v] | (Mask{1} << v)), size + 1);
        return;
      }
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    const Mask bit = Mask{1} << pivot;
    self(self, cand & ~(adj[pivot] | bit), size + 1);
    self(self, cand & ~bit, size);
  };
  search(search, detail::low_bits(n), 0);
  return best;
}

/// All inclusion-maximal independent sets as sorted vertex lists, in
/// lexicographic order.
inline std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g,
                                                                 std::size_t bound = 40) {
  detail::require_order(g, bound, "maximal_independent_sets");
  const auto n = g.order();
  const Mask all = detail::low_bits(n);
  const auto adj = detail::adjacency_masks(g);
  std::vector<Mask> non_adj(n);
  for (std::size_t v = 0; v < n; ++v) non_adj[v] = all & ~adj[v] & ~(Mask{1} << v);

  std::vector<Mask> found;
  // Bron-Kerbosch with pivoting on the complement graph
  auto bk = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      found.push_back(r);
      return;
    }
    int pivot = -1;
    int pivot_count = -1;
    for (Mask rest = p | x; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int c = std::popcount(p & non_adj[u]);
      if (c > pivot_count) {
        pivot = u;
        pivot_count = c;
      }
    }
    for (Mask rest = p & ~non_adj[pivot]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask bit = Mask{1} << v;
      self(self, r | bit, p & non_adj[v], x & non_adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (n > 0) bk(bk, 0, all, 0);

  std::vector<std::vector<Vertex>> sets;
  sets.reserve(found.size());
  for (Mask m : found) {
    std::vector<Vertex> s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

// Colour refinement run on both graphs with a shared palette so colours are
// comparable across them.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& g, const Graph& h) {
  std::vector<int> cg(g.order()), ch(h.order());
  for (std::size_t v = 0; v < g.order(); ++v) cg[v] = static_cast<int>(g.degree(v));
  for (std::size_t v = 0; v < h.order(); ++v) ch[v] = static_cast<int>(h.degree(v));
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const Graph& x, const std::vector<int>& col, std::size_t v) {
      std::vector<int> around;
      for (Vertex w : x.neighbors(static_cast<Vertex>(v))) around.push_back(col[w]);
      std::sort(around.begin(), around.end());
      return std::make_pair(col[v], std::move(around));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (std::size_t v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
    for (std::size_t v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    for (std::size_t v = 0; v < g.order(); ++v) cg[v] = palette[sg[v]];
    for (std::size_t v = 0; v < h.order(); ++v) ch[v] = palette[sh[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {cg, ch};
}

}  // namespace detail

/// An edge-preserving bijection g -> h (index = vertex of g), or nullopt.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const auto n = g.order();
  {
    std::vector<std::size_t> dg(n), dh(n);
    for (std::size_t v = 0; v < n; ++v) {
      dg[v] = g.degree(v);
      dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
  }
  auto [cg, ch] = detail::refine_colours(g, h);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::map<int, std::size_t> class_size;
  for (int c : cg) ++class_size[c];

  // connected-first ordering, rare colour classes first
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<int> placed_neighbours(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (pick < 0) {
        pick = static_cast<int>(v);
        continue;
      }
      const auto key = [&](std::size_t x) {
        return std::make_tuple(-placed_neighbours[x], class_size[cg[x]], x);
      };
      if (key(v) < key(static_cast<std::size_t>(pick))) pick = static_cast<int>(v);
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) ++placed_neighbours[w];
  }

  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || ch[c] != cg[v]) continue;
      const auto cand = static_cast<Vertex>(c);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex u = order[j];
        ok = g.adjacent(v, u) == h.adjacent(cand, image[u]);
      }
      if (!ok) continue;
      image[v] = cand;
      used[c] = 1;
      if (self(self, i + 1)) return true;
      used[c] = 0;
    }
    image[v] = -1;
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return image;
}

inline bool graphs_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace borsuk
