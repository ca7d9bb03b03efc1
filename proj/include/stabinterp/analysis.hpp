#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabinterp/algorithm1.hpp"
#include "stabinterp/algorithm2.hpp"
#include "stabinterp/oracle.hpp"

namespace stabinterp {

/// Per-operation rounding constant d: 5 for real, 8 + 2*sqrt(2) for complex data.
constexpr double rounding_constant(ArithmeticCase c) noexcept {
  return c == ArithmeticCase::Real ? 5.0 : 8.0 + 2.0 * std::numbers::sqrt2;
}

/// Relative backward-error constants k_N (multiply by unit_roundoff()).
struct StabilityBounds {
  double kN_alg2 = 0.0;
  double kN_alg1_general = 0.0;
  std::optional<double> kN_alg1_monotone;  // real data only
};

/// k_N for Algorithm II is (N+1) d; Algorithm I has N d L^(N-1) in general
/// and 5N for monotone real knots (where L = 1).
inline StabilityBounds stability_bounds(std::size_t N, ArithmeticCase c, double L) {
  const double d = rounding_constant(c);
  const double n = static_cast<double>(N);
  StabilityBounds b;
  b.kN_alg2 = (n + 1.0) * d;
  b.kN_alg1_general = N == 0 ? 0.0 : n * d * std::pow(L, n - 1.0);
  if (c == ArithmeticCase::Real) b.kN_alg1_monotone = 5.0 * n;
  return b;
}

/// max_n S_n(z;t) / max_n |p_n(z;t)| with S_n = sum_j |f_j| prod_{i!=j} |z - t z_i| / |z_j - z_i|.
/// Both maxima come from the oracle. Throws DegenerateConditioning when every p_n is zero.
template <Scalar T>
double condition_number(const Oracle<T>& oracle, const EvalSpec<T>& spec) {
  const auto e = oracle.evaluate(spec);
  DoubleDouble num{0.0};
  DoubleDouble den{0.0};
  for (std::size_t n = 0; n < e.p.size(); ++n) {
    num = std::max(num, e.sums[n]);
    den = std::max(den, abs(e.p[n]));
  }
  if (den.is_zero()) throw DegenerateConditioning("all p_n(z;t) vanish");
  return (num / den).to_double();
}

template <Scalar T>
double condition_number(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  return condition_number(Oracle<T>(problem), spec);
}

/// max over i < j < k of (|z_i - z_j| + |z_j - z_k|) / |z_i - z_k|.
/// Brute-force O(N^3) in double-double, so collinear, index-monotone knots give exactly 1.
/// Fewer than three knots give 1.
template <Scalar T>
double growth_constant_L(std::span<const T> knots) {
  detail::require_distinct<T>(knots);
  const std::size_t m = knots.size();
  if (m < 3) return 1.0;
  std::vector<DoubleDouble> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto d = abs(Wide<T>(knots[i]) - Wide<T>(knots[j]));
      dist[i * m + j] = d;
      dist[j * m + i] = d;
    }
  }
  DoubleDouble best{1.0};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const auto r = (dist[i * m + j] + dist[j * m + k]) / dist[i * m + k];
        if (r > best) best = r;
      }
    }
  }
  return best.to_double();
}

struct StabilityReport {
  double cond = 0.0;
  double L = 1.0;
  StabilityBounds bounds;
  ArithmeticCase arithmetic = ArithmeticCase::Real;
};

template <Scalar T>
StabilityReport stability_report(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  StabilityReport r;
  r.arithmetic = arithmetic_case_v<T>;
  r.cond = condition_number(problem, spec);
  r.L = growth_constant_L(problem.knots());
  r.bounds = stability_bounds(problem.degree(), r.arithmetic, r.L);
  return r;
}

// ---------------------------------------------------------------------------
// Experimental error metrics. A zero denominator yields +infinity so batch
// runs complete; test with std::isinf.

/// Evaluator behind error3 and the experiment drivers.
enum class AlgorithmChoice { Alg1, Alg2, Oracle };

inline const char* to_string(AlgorithmChoice a) {
  switch (a) {
    case AlgorithmChoice::Alg1: return "alg1";
    case AlgorithmChoice::Alg2: return "alg2";
    case AlgorithmChoice::Oracle: return "oracle";
  }
  return "?";
}

template <Scalar T>
struct Error3Point {
  T z;
  double value;
};

template <Scalar T>
struct ErrorMetrics {
  double error1 = 0.0;
  double error2 = 0.0;
  std::vector<Error3Point<T>> error3;
  int s = 7;
};

namespace detail {

inline double ratio_or_inf(double num, const DoubleDouble& den) {
  if (den.is_zero()) return std::numeric_limits<double>::infinity();
  return (DoubleDouble(num) / den).to_double();
}

template <Scalar T>
void require_monomial_data(const InterpProblem<T>& problem, int s) {
  if (s < 0) throw PreconditionViolation("monomial degree must be nonnegative");
  const auto expected = monomial_samples(problem.knots(), s);
  for (std::size_t j = 0; j < problem.size(); ++j) {
    if (problem.value(j) != expected[j]) {
      throw PreconditionViolation("value " + std::to_string(j) + " is not z_j^" +
                                  std::to_string(s));
    }
  }
}

template <Scalar T>
double max_tail_modulus(std::span<const T> coeffs, const InterpProblem<T>& problem, int s) {
  if (coeffs.size() != problem.size()) {
    throw ShapeError("got " + std::to_string(coeffs.size()) + " coefficients for " +
                     std::to_string(problem.size()) + " knots");
  }
  if (problem.degree() < static_cast<std::size_t>(s) + 2) {
    throw ShapeError("N = " + std::to_string(problem.degree()) + " is below s + 2 = " +
                     std::to_string(s + 2));
  }
  double top = 0.0;
  for (std::size_t n = static_cast<std::size_t>(s) + 2; n < coeffs.size(); ++n) {
    top = std::max(top, std::abs(coeffs[n]));
  }
  return top;
}

}  // namespace detail

/// max_{n=s+2..N} |c~_n| / (u max_n sum_j |f_j| prod_{i!=j} 1/|z_j - z_i|).
/// For a stable algorithm this is at most k_N.
template <Scalar T>
double error1(std::span<const T> computed, const InterpProblem<T>& problem, int s) {
  detail::require_monomial_data(problem, s);
  const double top = detail::max_tail_modulus(computed, problem, s);
  const auto sums = Oracle<T>(problem).sensitivity_sums(EvalSpec<T>::newton_coefficients());
  const DoubleDouble den = *std::max_element(sums.begin(), sums.end()) * unit_roundoff();
  return detail::ratio_or_inf(top, den);
}

/// max_{n=s+2..N} |c~_n| / (u max_n |c_n|), exact c_n from the oracle.
template <Scalar T>
double error2(std::span<const T> computed, const InterpProblem<T>& problem, int s) {
  detail::require_monomial_data(problem, s);
  const double top = detail::max_tail_modulus(computed, problem, s);
  const auto exact = Oracle<T>(problem).evaluate(EvalSpec<T>::newton_coefficients()).p;
  DoubleDouble big{0.0};
  for (const auto& c : exact) big = std::max(big, abs(c));
  return detail::ratio_or_inf(top, big * unit_roundoff());
}

/// Computed p_N(z;1) under the chosen evaluator.
template <Scalar T>
T evaluate_with(const InterpProblem<T>& problem, T z, AlgorithmChoice choice,
                const Oracle<T>* oracle = nullptr) {
  const auto spec = EvalSpec<T>::evaluation(z);
  switch (choice) {
    case AlgorithmChoice::Alg1: return algorithm1_prefix(problem, spec).p.back();
    case AlgorithmChoice::Alg2: return algorithm2_prefix(problem, spec).back();
    case AlgorithmChoice::Oracle:
      return oracle ? oracle->prefix_values(spec).back()
                    : oracle_prefix_values(problem, spec).back();
  }
  return T{};
}

/// error3 for several evaluators at once: row r holds, per choice,
/// |p~_N(z_r;1) - z_r^s| / (u max_n S_n(z_r;1)). The oracle work is shared.
template <Scalar T>
std::vector<std::vector<double>> error3_table(const InterpProblem<T>& problem,
                                              std::span<const T> z_points,
                                              std::span<const AlgorithmChoice> choices, int s) {
  detail::require_monomial_data(problem, s);
  const Oracle<T> oracle(problem);
  std::vector<std::vector<double>> rows;
  rows.reserve(z_points.size());
  for (const T& z : z_points) {
    require_finite(z, "evaluation point");
    const auto e = oracle.evaluate(EvalSpec<T>::evaluation(z));
    const DoubleDouble den =
        *std::max_element(e.sums.begin(), e.sums.end()) * unit_roundoff();
    Wide<T> exact{1.0};
    for (int k = 0; k < s; ++k) exact *= Wide<T>(z);
    std::vector<double> row;
    row.reserve(choices.size());
    for (const auto choice : choices) {
      const T computed = choice == AlgorithmChoice::Oracle ? to_working<T>(e.p.back())
                                                           : evaluate_with(problem, z, choice);
      const double num = abs(Wide<T>(computed) - exact).to_double();
      row.push_back(detail::ratio_or_inf(num, den));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar T>
std::vector<Error3Point<T>> error3(const InterpProblem<T>& problem, std::span<const T> z_points,
                                   AlgorithmChoice choice, int s = 7) {
  const AlgorithmChoice one[] = {choice};
  const auto rows = error3_table<T>(problem, z_points, one, s);
  std::vector<Error3Point<T>> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out.push_back({z_points[r], rows[r][0]});
  return out;
}

}  // namespace stabinterp
