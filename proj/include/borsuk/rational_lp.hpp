#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "borsuk/error.hpp"

namespace borsuk {

using Rational = boost::multiprecision::cpp_rational;

struct LpSolution {
  Rational value;
  std::vector<Rational> primal;  // optimal y
  std::vector<Rational> dual;    // shadow price per constraint row
};

/// Exact primal simplex for  max c.y  s.t.  A y <= b, y >= 0  with b >= 0, so
/// the slack basis is feasible from the start. Bland's rule (smallest
/// improving column, smallest leaving basic index on ratio ties) guarantees
/// termination. Throws if the problem is unbounded.
inline LpSolution maximize_exact(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
  const std::size_t rows = a.size();
  const std::size_t vars = c.size();
  const std::size_t cols = vars + rows;  // structural + slack
  for (const auto& row : a) {
    if (row.size() != vars) throw PreconditionError("maximize_exact: ragged constraint matrix");
  }
  for (const auto& rhs : b) {
    if (rhs < 0) throw PreconditionError("maximize_exact: negative right-hand side");
  }

  // tableau rows 0..rows-1 are constraints, row `rows` holds reduced costs;
  // the last column is the right-hand side (minus the objective in the cost row)
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = a[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = b[i];
    basis[i] = vars + i;
  }
  for (std::size_t j = 0; j < vars; ++j) t[rows][j] = c[j];

  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[rows][j] > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][e] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][e];
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) throw Error("maximize_exact: linear program is unbounded");
    const std::size_t l = *leaving;

    const Rational pivot = t[l][e];
    for (auto& x : t[l]) x /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == l || t[i][e] == 0) continue;
      const Rational factor = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[l][j] != 0) t[i][j] -= factor * t[l][j];
      }
    }
    basis[l] = e;
  }

  LpSolution sol;
  sol.value = -t[rows][cols];
  sol.primal.assign(vars, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) sol.primal[basis[i]] = t[i][cols];
  }
  sol.dual.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) sol.dual[i] = -t[rows][vars + i];
  return sol;
}

inline std::string to_fraction_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace borsuk
