#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabinterp/error.hpp"
#include "stabinterp/scalar.hpp"

namespace stabinterp {

namespace detail {

inline bool lex_less(double a, double b) noexcept { return a < b; }
inline bool lex_less(const Complex& a, const Complex& b) noexcept {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

/// Throws DistinctnessViolation naming the first equal pair found.
/// Equality is exact (0.0 and -0.0 are the same knot).
template <Scalar T>
void require_distinct(std::span<const T> knots) {
  std::vector<std::size_t> idx(knots.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(knots[a], knots[b]) ||
           (!lex_less(knots[b], knots[a]) && a < b);
  });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (knots[idx[i - 1]] == knots[idx[i]]) {
      throw DistinctnessViolation(std::min(idx[i - 1], idx[i]),
                                  std::max(idx[i - 1], idx[i]));
    }
  }
}

}  // namespace detail

/// Pairwise distinct knots z_0..z_N with index-aligned samples f_0..f_N.
template <Scalar T>
class InterpProblem {
 public:
  InterpProblem(std::vector<T> knots, std::vector<T> values)
      : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.empty()) throw ShapeError("interpolation problem needs at least one knot");
    if (knots_.size() != values_.size()) {
      throw ShapeError("knot count " + std::to_string(knots_.size()) +
                       " differs from value count " + std::to_string(values_.size()));
    }
    for (std::size_t j = 0; j < knots_.size(); ++j) {
      require_finite(knots_[j], "knot " + std::to_string(j));
      require_finite(values_[j], "value " + std::to_string(j));
    }
    detail::require_distinct<T>(knots_);
  }

  std::span<const T> knots() const noexcept { return knots_; }
  std::span<const T> values() const noexcept { return values_; }
  const T& knot(std::size_t j) const { return knots_[j]; }
  const T& value(std::size_t j) const { return values_[j]; }

  /// Number of knots, N + 1.
  std::size_t size() const noexcept { return knots_.size(); }
  /// Highest index N.
  std::size_t degree() const noexcept { return knots_.size() - 1; }

  friend bool operator==(const InterpProblem&, const InterpProblem&) = default;

 private:
  std::vector<T> knots_;
  std::vector<T> values_;
};

/// Evaluation point z and homotopy parameter t.
/// t = 1 evaluates the interpolants at z; z = 1, t = 0 yields Newton coefficients.
template <Scalar T>
struct EvalSpec {
  T z;
  T t;

  EvalSpec(T z_, T t_) : z(z_), t(t_) {
    require_finite(z, "evaluation point z");
    require_finite(t, "parameter t");
  }

  static EvalSpec newton_coefficients() { return {T{1.0}, T{0.0}}; }
  static EvalSpec evaluation(T z_) { return {z_, T{1.0}}; }
};

/// p_0(z;t), ..., p_N(z;t).
template <Scalar T>
using PrefixResults = std::vector<T>;

/// Smallest j with z == fl(t * z_j), compared exactly in working precision.
/// At such a knot p_n(z;t) = f_j t^n for every n >= j.
template <Scalar T>
std::optional<std::size_t> find_coincidence(const InterpProblem<T>& problem,
                                            const EvalSpec<T>& spec) {
  for (std::size_t j = 0; j < problem.size(); ++j) {
    if (spec.z == spec.t * problem.knot(j)) return j;
  }
  return std::nullopt;
}

}  // namespace stabinterp
