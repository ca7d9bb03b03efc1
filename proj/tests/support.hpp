#pragma once

// Shared generators and bound checks for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "stabinterp/stabinterp.hpp"

namespace stabinterp::fixtures {

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * uniform_unit(rng);
}

template <Scalar T>
T random_scalar(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  if constexpr (is_complex_v<T>) {
    const double re = uniform(rng, lo, hi);
    return {re, uniform(rng, lo, hi)};
  } else {
    return uniform(rng, lo, hi);
  }
}

/// N + 1 distinct random knots in [lo, hi] (square in the complex case).
template <Scalar T>
std::vector<T> random_knot_set(std::mt19937_64& rng, std::size_t N, double lo = -1.0,
                               double hi = 1.0) {
  std::vector<T> z;
  while (z.size() < N + 1) {
    const T x = random_scalar<T>(rng, lo, hi);
    bool fresh = true;
    for (const T& y : z) fresh = fresh && !(x == y);
    if (fresh) z.push_back(x);
  }
  return z;
}

template <Scalar T>
InterpProblem<T> random_problem(std::mt19937_64& rng, std::size_t N) {
  auto z = random_knot_set<T>(rng, N);
  std::vector<T> f(N + 1);
  for (auto& v : f) v = random_scalar<T>(rng);
  return InterpProblem<T>(std::move(z), std::move(f));
}

/// One of: evaluation (t = 1), Newton coefficients (z = 1, t = 0), or generic (z, t).
template <Scalar T>
EvalSpec<T> random_spec(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return EvalSpec<T>::evaluation(random_scalar<T>(rng, -1.5, 1.5));
    case 1: return EvalSpec<T>::newton_coefficients();
    default: return EvalSpec<T>(random_scalar<T>(rng, -1.5, 1.5), random_scalar<T>(rng));
  }
}

/// Largest ratio |p~_n - p_n| / (u S_n) over n, with p_n and S_n from the oracle.
/// A backward-stable result with constant k gives a value <= k.
/// Where S_n is zero the computed value must be exact; otherwise the ratio is +inf.
template <Scalar T>
double backward_ratio(const Oracle<T>& oracle, const EvalSpec<T>& spec,
                      const PrefixResults<T>& computed) {
  const auto e = oracle.evaluate(spec);
  double worst = 0.0;
  for (std::size_t n = 0; n < computed.size(); ++n) {
    const DoubleDouble err = abs(Wide<T>(computed[n]) - e.p[n]);
    if (e.sums[n].is_zero()) {
      if (!err.is_zero()) return std::numeric_limits<double>::infinity();
      continue;
    }
    worst = std::max(worst, (err / (e.sums[n] * unit_roundoff())).to_double());
  }
  return worst;
}

/// max_n |p~_n - p_n| / (u max_n |p_n|): the left side of the relative form, divided by u.
template <Scalar T>
double relative_error_units(const Oracle<T>& oracle, const EvalSpec<T>& spec,
                            const PrefixResults<T>& computed) {
  const auto e = oracle.evaluate(spec);
  DoubleDouble err{0.0};
  DoubleDouble big{0.0};
  for (std::size_t n = 0; n < computed.size(); ++n) {
    err = std::max(err, abs(Wide<T>(computed[n]) - e.p[n]));
    big = std::max(big, abs(e.p[n]));
  }
  if (big.is_zero()) return err.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  return (err / (big * unit_roundoff())).to_double();
}

}  // namespace stabinterp::fixtures
