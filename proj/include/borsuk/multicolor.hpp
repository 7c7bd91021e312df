#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "borsuk/error.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/rational_lp.hpp"

namespace borsuk {

/// k-fold colouring: every vertex carries a sorted set of `fold` colours drawn
/// from 1..palette, and adjacent vertices carry disjoint sets.
struct MultiColoring {
  std::size_t fold = 1;
  std::size_t palette = 0;
  std::vector<std::vector<int>> colors;

  bool operator==(const MultiColoring&) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

inline ValidationReport validate(const Graph& g, const MultiColoring& c) {
  if (c.colors.size() != g.order()) {
    throw PreconditionError("validate: colouring covers " + std::to_string(c.colors.size()) +
                            " vertices but the graph has " + std::to_string(g.order()));
  }
  ValidationReport report;
  auto fail = [&](std::string why) {
    report.valid = false;
    report.violations.push_back(std::move(why));
  };
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& set = c.colors[v];
    const auto name = "vertex " + std::to_string(v);
    if (set.size() != c.fold) {
      fail(name + " has " + std::to_string(set.size()) + " colours, expected " +
           std::to_string(c.fold));
    }
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end()) {
      fail(name + " colour set is not strictly increasing");
    }
    for (int col : set) {
      if (col < 1 || static_cast<std::size_t>(col) > c.palette) {
        fail(name + " uses colour " + std::to_string(col) + " outside 1.." +
             std::to_string(c.palette));
      }
    }
  }
  for (const auto& e : g.edges()) {
    const auto& a = c.colors[e.u];
    const auto& b = c.colors[e.v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) {
      fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " shares colour " +
           std::to_string(common.front()));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fractional chromatic number

struct FractionalResult {
  Rational value;
  std::vector<std::vector<Vertex>> independent_sets;  // maximal ones, canonical order
  std::vector<Rational> set_weights;                  // optimal covering weights x_I
  std::vector<Rational> vertex_weights;               // optimal packing weights y_v
};

/// Optimum of  min sum x_I  s.t.  sum_{I containing v} x_I >= 1  over maximal
/// independent sets I, in exact arithmetic. The packing dual
/// max sum y_v  s.t.  sum_{v in I} y_v <= 1  is the LP actually pivoted; its
/// shadow prices are the covering weights. This optimum equals inf_k chi_k/k.
inline FractionalResult fractional_chromatic_lp(const Graph& g, std::size_t bound = 18) {
  detail::require_order(g, bound, "fractional_chromatic");
  FractionalResult out;
  if (g.order() == 0) return out;
  out.independent_sets = maximal_independent_sets(g);
  const auto n = g.order();
  std::vector<std::vector<Rational>> a;
  a.reserve(out.independent_sets.size());
  for (const auto& set : out.independent_sets) {
    std::vector<Rational> row(n, Rational(0));
    for (Vertex v : set) row[v] = 1;
    a.push_back(std::move(row));
  }
  const std::vector<Rational> b(out.independent_sets.size(), Rational(1));
  const std::vector<Rational> c(n, Rational(1));
  auto sol = maximize_exact(a, b, c);
  out.value = sol.value;
  out.vertex_weights = std::move(sol.primal);
  out.set_weights = std::move(sol.dual);
  return out;
}

inline Rational fractional_chromatic(const Graph& g, std::size_t bound = 18) {
  return fractional_chromatic_lp(g, bound).value;
}

// ---------------------------------------------------------------------------
// Exact k-fold chromatic number

struct ChiOptions {
  std::size_t max_order = 24;
  /// Palette size already known to be feasible, e.g. a_k + a_l for k+l.
  std::optional<std::size_t> known_upper;
  /// Use ceil(k * fractional) as a lower bound when the LP is within bound.
  bool fractional_bound = true;
  std::size_t fractional_max_order = 18;
};

struct ChiResult {
  std::size_t m = 0;
  MultiColoring witness;
};

namespace detail {

inline std::size_t greedy_clique(const Graph& g) {
  const auto n = g.order();
  std::vector<Vertex> by_degree(n);
  for (std::size_t v = 0; v < n; ++v) by_degree[v] = static_cast<Vertex>(v);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t best = n > 0 ? 1 : 0;
  for (Vertex seed : by_degree) {
    std::vector<Vertex> clique{seed};
    for (Vertex w : by_degree) {
      if (w == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, w); })) {
        clique.push_back(w);
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

inline std::size_t ceil_rational(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (q * den < num) q += 1;
  return static_cast<std::size_t>(q);
}

// Depth-first search for a k-fold colouring with `palette` colours. Vertices
// are visited in a fixed order; each receives k-subsets in lexicographic
// order, and colours are introduced in first-use order (a new colour is always
// the lowest one not used so far). The first success is therefore the
// lexicographically least such colouring in that vertex order.
class MulticolorSearch {
 public:
  MulticolorSearch(const Graph& g, std::size_t fold, std::size_t palette)
      : g_(g), fold_(fold), palette_(palette), full_(low_bits(palette)) {
    const auto n = g.order();
    order_.resize(n);
    for (std::size_t v = 0; v < n; ++v) order_[v] = static_cast<Vertex>(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    assigned_.assign(n, 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (fold_ > palette_) return std::nullopt;
    if (place(0, 0)) return assigned_;
    return std::nullopt;
  }

 private:
  Mask forbidden(Vertex v) const {
    Mask f = 0;
    for (Vertex w : g_.neighbors(v)) f |= assigned_[w];
    return f;
  }

  bool neighbours_still_colourable(Vertex v) const {
    for (Vertex w : g_.neighbors(v)) {
      if (assigned_[w]) continue;
      if (static_cast<std::size_t>(std::popcount(full_ & ~forbidden(w))) < fold_) return false;
    }
    return true;
  }

  bool place(std::size_t i, std::size_t used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const Mask avail = full_ & ~forbidden(v);
    if (static_cast<std::size_t>(std::popcount(avail)) < fold_) return false;
    return choose(v, i, used, avail, 0, 0, 0);
  }

  // Extend a partial k-subset `chosen` (holding `count` colours, the largest
  // below `from`) in increasing colour order.
  bool choose(Vertex v, std::size_t i, std::size_t used, Mask avail, Mask chosen,
              std::size_t count, std::size_t from) {
    if (count == fold_) {
      assigned_[v] = chosen;
      const std::size_t top = std::bit_width(chosen);
      if (neighbours_still_colourable(v) && place(i + 1, std::max(used, top))) return true;
      assigned_[v] = 0;
      return false;
    }
    const std::size_t need = fold_ - count;
    for (std::size_t col = from; col + need <= palette_; ++col) {
      if (!(avail >> col & 1)) continue;
      // new colours must extend the used range contiguously
      const std::size_t frontier = std::max<std::size_t>(used, std::bit_width(chosen));
      if (col > frontier) break;
      if (choose(v, i, used, avail, chosen | (Mask{1} << col), count + 1, col + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t fold_;
  std::size_t palette_;
  Mask full_;
  std::vector<Vertex> order_;
  std::vector<Mask> assigned_;
};

inline MultiColoring to_coloring(const std::vector<Mask>& sets, std::size_t fold,
                                 std::size_t palette) {
  MultiColoring c{fold, palette, {}};
  c.colors.reserve(sets.size());
  for (Mask m : sets) {
    std::vector<int> s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m) + 1);
    c.colors.push_back(std::move(s));
  }
  return c;
}

}  // namespace detail

/// Lower bound max(ceil(k|V|/alpha), k*omega_greedy, ceil(k*chi_f)) used to
/// seed the iterative deepening in chi_k.
inline std::size_t chi_k_lower_bound(const Graph& g, std::size_t k, const ChiOptions& opt = {}) {
  if (g.order() == 0) return 0;
  const std::size_t alpha = independence_number(g);
  std::size_t lower = (k * g.order() + alpha - 1) / alpha;
  lower = std::max(lower, k * detail::greedy_clique(g));
  if (opt.fractional_bound && g.order() <= opt.fractional_max_order) {
    lower = std::max(lower, detail::ceil_rational(Rational(k) * fractional_chromatic(g)));
  }
  return lower;
}

/// Decides whether a k-fold colouring with m colours exists (search part of chi_k).
inline std::optional<MultiColoring> multicoloring_with_palette(const Graph& g, std::size_t k,
                                                               std::size_t m) {
  if (m > 64) throw TooLarge("multicoloring palette", m, 64);
  detail::MulticolorSearch search(g, k, m);
  auto sets = search.run();
  if (!sets) return std::nullopt;
  return detail::to_coloring(*sets, k, m);
}

/// Exact k-fold chromatic number with a witness colouring.
inline ChiResult chi_k(const Graph& g, std::size_t k, const ChiOptions& opt = {}) {
  if (k == 0) throw PreconditionError("chi_k: fold must be positive");
  detail::require_order(g, opt.max_order, "chi_k");
  if (g.order() == 0) return {0, MultiColoring{k, 0, {}}};
  const std::size_t upper = opt.known_upper.value_or(k * g.order());
  for (std::size_t m = chi_k_lower_bound(g, k, opt); m <= upper; ++m) {
    if (auto c = multicoloring_with_palette(g, k, m)) return {m, std::move(*c)};
  }
  throw VerificationError("chi_k: no colouring found up to the stated upper bound " +
                          std::to_string(upper));
}

/// Independent route to "is there a k-fold m-colouring": the minimum number of
/// independent sets covering every vertex at least k times, found by
/// breadth-first search over coverage vectors saturated at k. Independent sets
/// are enumerated by brute force over vertex subsets.
inline bool chi_k_bruteforce(const Graph& g, std::size_t k, std::size_t m) {
  const auto n = g.order();
  if (n > 10) throw TooLarge("chi_k_bruteforce", n, 10);
  if (m > 12) throw PreconditionError("chi_k_bruteforce: palette above 12");
  if (k == 0) throw PreconditionError("chi_k_bruteforce: fold must be positive");

  std::vector<std::uint32_t> independent;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if ((s >> e.u & 1) && (s >> e.v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) independent.push_back(s);
  }
  std::vector<std::uint32_t> maximal;
  for (auto s : independent) {
    bool is_max = true;
    for (auto t : independent) {
      if (t != s && (t & s) == s) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(s);
  }
  if (n == 0) return true;

  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    states *= k + 1;
    if (states > (std::size_t{1} << 26)) throw TooLarge("chi_k_bruteforce states", states, 1u << 26);
  }
  std::vector<std::size_t> weight(n, 1);
  for (std::size_t i = 1; i < n; ++i) weight[i] = weight[i - 1] * (k + 1);
  const std::size_t goal = states - 1;  // every digit equal to k

  std::vector<std::uint8_t> depth(states, 0xff);
  std::deque<std::size_t> q;
  depth[0] = 0;
  q.push_back(0);
  while (!q.empty()) {
    const std::size_t s = q.front();
    q.pop_front();
    if (s == goal) return depth[s] <= m;
    if (depth[s] >= m) continue;
    for (auto set : maximal) {
      std::size_t next = s;
      for (std::size_t v = 0; v < n; ++v) {
        if ((set >> v & 1) && (s / weight[v]) % (k + 1) < k) next += weight[v];
      }
      if (depth[next] == 0xff) {
        depth[next] = static_cast<std::uint8_t>(depth[s] + 1);
        q.push_back(next);
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Constructive colourings

/// m-fold (2m+1)-colouring of the cycle C_{2m+1} (vertex i is the (i+1)-th
/// cycle vertex) in which any two nonconsecutive vertices share a colour.
/// Union over odd t in 1..2m-1 of the 3-colouring where v_t gets 2m+1 and
/// v_{t+1}, v_{t+2}, ... alternate t, t+1.
inline MultiColoring odd_cycle_multicoloring(std::size_t m) {
  if (m == 0) throw PreconditionError("odd_cycle_multicoloring: m must be positive");
  const std::size_t n = 2 * m + 1;
  MultiColoring c{m, n, std::vector<std::vector<int>>(n)};
  for (std::size_t t = 1; t < 2 * m; t += 2) {
    const std::size_t special = t - 1;  // v_t, zero-based
    c.colors[special].push_back(static_cast<int>(n));
    for (std::size_t step = 1; step < n; ++step) {
      const std::size_t v = (special + step) % n;
      c.colors[v].push_back(static_cast<int>(step % 2 == 1 ? t : t + 1));
    }
  }
  for (auto& set : c.colors) std::sort(set.begin(), set.end());
  return c;
}

/// Colouring certifying chi_m(G) <= 4m-1 for a triangle-free graph whose
/// shortest odd cycle C has length 2m+1 and meets every other odd cycle.
/// Bipartite graphs get a proper 2-colouring. Otherwise C is coloured by
/// odd_cycle_multicoloring on 1..2m+1, the part V2 of the bipartite remainder
/// by {3m..4m-1}, and each vertex of V1 by the m smallest colours of 1..3m-1
/// missing from its neighbours on C. (Read as 3m..4m-1 where a printed range
/// says 3k..4k-1: only that gives m colours and matches (3m-1)-(2m-1) = m.)
inline MultiColoring triangle_free_coloring(const Graph& g) {
  if (auto parts = is_bipartite_with_parts(g)) {
    MultiColoring c{1, 2, std::vector<std::vector<int>>(g.order())};
    for (Vertex v : parts->part1) c.colors[v] = {1};
    for (Vertex v : parts->part2) c.colors[v] = {2};
    return c;
  }
  const auto cycle = shortest_odd_cycle(g);
  if (cycle->length() == 3) {
    throw PreconditionError("triangle_free_coloring: girth 3 (graph contains a triangle)");
  }
  const std::size_t m = (cycle->length() - 1) / 2;
  const auto n = g.order();
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < cycle->length(); ++i) position[cycle->vertices[i]] = static_cast<int>(i);

  std::vector<char> keep(n, 1);
  for (Vertex v : cycle->vertices) keep[v] = 0;
  auto [rest, original] = induced_subgraph(g, keep);
  auto parts = is_bipartite_with_parts(rest);
  if (!parts) {
    throw PreconditionError(
        "triangle_free_coloring: removing the shortest odd cycle leaves an odd cycle "
        "(odd cycles do not pairwise intersect)");
  }

  const auto base = odd_cycle_multicoloring(m);
  MultiColoring c{m, 4 * m - 1, std::vector<std::vector<int>>(n)};
  for (std::size_t i = 0; i < cycle->length(); ++i) c.colors[cycle->vertices[i]] = base.colors[i];

  std::vector<int> top;
  for (std::size_t col = 3 * m; col <= 4 * m - 1; ++col) top.push_back(static_cast<int>(col));
  for (Vertex local : parts->part2) c.colors[original[local]] = top;

  const std::size_t len = cycle->length();
  for (Vertex local : parts->part1) {
    const Vertex v = original[local];
    std::vector<int> on_cycle;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] >= 0) on_cycle.push_back(position[w]);
    }
    if (on_cycle.size() > 2) {
      throw PreconditionError("triangle_free_coloring: vertex " + std::to_string(v) +
                              " has more than two neighbours on the shortest odd cycle");
    }
    if (on_cycle.size() == 2) {
      const auto gap = static_cast<std::size_t>(std::abs(on_cycle[0] - on_cycle[1]));
      if (gap == 1 || gap == len - 1) {
        throw PreconditionError("triangle_free_coloring: vertex " + std::to_string(v) +
                                " is adjacent to two consecutive cycle vertices");
      }
    }
    std::vector<char> blocked(3 * m, 0);
    for (int pos : on_cycle) {
      for (int col : base.colors[pos]) blocked[col] = 1;
    }
    for (std::size_t col = 1; col <= 3 * m - 1 && c.colors[v].size() < m; ++col) {
      if (!blocked[col]) c.colors[v].push_back(static_cast<int>(col));
    }
    if (c.colors[v].size() < m) {
      throw VerificationError("triangle_free_coloring: fewer than m free colours at vertex " +
                              std::to_string(v));
    }
  }

  const auto report = validate(g, c);
  if (!report.valid) {
    throw VerificationError("triangle_free_coloring: produced an invalid colouring: " +
                            report.violations.front());
  }
  return c;
}

// ---------------------------------------------------------------------------
// Borsuk sequence

struct BorsukReport {
  std::vector<std::size_t> a;          // a[k-1] = chi_k
  std::optional<Rational> fractional;  // LP optimum when within bound
  bool lower_bound_2k = true;          // a_k >= 2k
  bool dichotomy = true;               // a_1 = 2 => a_k = 2k; a_1 > 2 => a_k > 2k
  bool subadditive = true;             // a_{k+l} <= a_k + a_l
  bool fractional_below_ratios = true; // fractional <= a_k / k
};

/// a_k = chi_k(g) for k = 1..kmax together with the structural checks that
/// every diameter graph must satisfy.
inline BorsukReport borsuk_sequence(const Graph& g, std::size_t kmax,
                                    std::size_t fractional_bound = 18) {
  if (g.size() == 0) throw PreconditionError("borsuk_sequence: graph has no edges");
  if (kmax == 0) throw PreconditionError("borsuk_sequence: kmax must be positive");
  BorsukReport r;
  for (std::size_t k = 1; k <= kmax; ++k) {
    ChiOptions opt;
    for (std::size_t i = 1; i < k; ++i) {
      const std::size_t seed = r.a[i - 1] + r.a[k - i - 1];
      if (!opt.known_upper || seed < *opt.known_upper) opt.known_upper = seed;
    }
    r.a.push_back(chi_k(g, k, opt).m);
  }
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::size_t ak = r.a[k - 1];
    if (ak < 2 * k) r.lower_bound_2k = false;
    if (r.a[0] == 2 && ak != 2 * k) r.dichotomy = false;
    if (r.a[0] > 2 && ak <= 2 * k) r.dichotomy = false;
    for (std::size_t l = 1; k + l <= kmax; ++l) {
      if (r.a[k + l - 1] > ak + r.a[l - 1]) r.subadditive = false;
    }
  }
  if (g.order() <= fractional_bound) {
    r.fractional = fractional_chromatic(g, fractional_bound);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (*r.fractional * k > Rational(r.a[k - 1])) r.fractional_below_ratios = false;
    }
  }
  return r;
}

}  // namespace borsuk
