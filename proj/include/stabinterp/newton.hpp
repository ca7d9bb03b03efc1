#pragma once

#include <span>
#include <string>

#include "stabinterp/algorithm1.hpp"
#include "stabinterp/algorithm2.hpp"

namespace stabinterp {

/// Which recurrence backs a convenience wrapper.
enum class Route {
  Classical,  // Algorithm I: divided differences (t = 0) or Aitken (t = 1)
  Stable,     // Algorithm II
};

inline const char* to_string(Route r) { return r == Route::Classical ? "classical" : "stable"; }

/// Newton coefficients c_0..c_N of the interpolant.
template <Scalar T>
PrefixResults<T> divided_differences(const InterpProblem<T>& problem, Route route = Route::Stable) {
  const auto spec = EvalSpec<T>::newton_coefficients();
  return route == Route::Stable ? algorithm2_prefix(problem, spec)
                                : algorithm1_prefix(problem, spec).p;
}

/// Values at z of the interpolants on z_0..z_n, n = 0..N.
template <Scalar T>
PrefixResults<T> aitken_evaluate(const InterpProblem<T>& problem, T z, Route route = Route::Stable) {
  const auto spec = EvalSpec<T>::evaluation(z);
  return route == Route::Stable ? algorithm2_prefix(problem, spec)
                                : algorithm1_prefix(problem, spec).p;
}

/// Nested multiplication of sum_j c_j prod_{i<j} (z - z_i).
template <Scalar T>
T newton_evaluate(std::span<const T> coefficients, std::span<const T> knots, T z) {
  if (coefficients.empty()) throw ShapeError("Newton form needs at least one coefficient");
  const std::size_t n = coefficients.size() - 1;
  if (knots.size() < n) {
    throw ShapeError("Newton form of degree " + std::to_string(n) + " needs " +
                     std::to_string(n) + " knots, got " + std::to_string(knots.size()));
  }
  T r = coefficients[n];
  for (std::size_t j = n; j-- > 0;) r = r * (z - knots[j]) + coefficients[j];
  return r;
}

}  // namespace stabinterp
