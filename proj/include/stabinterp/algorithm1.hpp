#pragma once

#include <cstddef>
#include <vector>

#include "stabinterp/problem.hpp"

namespace stabinterp {

/// Triangular table c[n][k] = c_k^(n), n = 0..N, k = 0..N-n.
/// Row 0 holds the samples; c[n][0] is p_n(z;t).
template <Scalar T>
struct DividedDifferenceTable {
  std::vector<std::vector<T>> c;

  std::size_t rows() const noexcept { return c.size(); }
  const std::vector<T>& row(std::size_t n) const { return c[n]; }
  const T& operator()(std::size_t n, std::size_t k) const { return c[n][k]; }
};

template <Scalar T>
struct Algorithm1Result {
  PrefixResults<T> p;
  DividedDifferenceTable<T> table;
};

/// Classical triangular recurrence
///
///   c_k^(n) = ((z - t z_{n+k}) c_k^(n-1) - (z - t z_k) c_{k+1}^(n-1)) / (z_k - z_{k+n}).
///
/// With t = 0, z = 1 it is the divided-difference scheme; with t = 1 it is
/// Aitken's scheme. Its backward error grows with the knot-triple constant L,
/// so it is stable for monotone real knots but not in general.
template <Scalar T>
Algorithm1Result<T> algorithm1_prefix(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  const std::size_t m = problem.size();
  const auto z = problem.knots();

  std::vector<T> shifted(m);
  for (std::size_t i = 0; i < m; ++i) shifted[i] = spec.z - spec.t * z[i];

  Algorithm1Result<T> out;
  auto& c = out.table.c;
  c.reserve(m);
  c.emplace_back(problem.values().begin(), problem.values().end());
  for (std::size_t n = 1; n < m; ++n) {
    const auto& prev = c[n - 1];
    std::vector<T> row(m - n);
    for (std::size_t k = 0; k + n < m; ++k) {
      row[k] = (shifted[n + k] * prev[k] - shifted[k] * prev[k + 1]) / (z[k] - z[k + n]);
    }
    c.push_back(std::move(row));
  }

  out.p.reserve(m);
  for (const auto& row : c) out.p.push_back(row.front());
  return out;
}

}  // namespace stabinterp
