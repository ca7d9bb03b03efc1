#pragma once

#include <cstddef>
#include <vector>

#include "stabinterp/problem.hpp"
#include "stabinterp/wide.hpp"

namespace stabinterp {

/// Reference evaluator for
///
///   p_n(z;t) = sum_{j<=n} f_j prod_{i<=n, i!=j} (z - t z_i) / (z_j - z_i)
///
/// by direct product-sum in double-double arithmetic. Cost is O(N^3) per
/// evaluation point. It shares no recurrence with the algorithms it checks,
/// so it serves as ground truth in tests and error metrics.
///
/// Knot differences are tabulated once at construction; one instance can be
/// reused across many (z, t).
template <Scalar T>
class Oracle {
 public:
  using W = Wide<T>;

  struct Evaluation {
    std::vector<W> p;                 // p_n(z;t), n = 0..N
    std::vector<DoubleDouble> sums;   // sum_j |f_j| prod_{i!=j} |z - t z_i| / |z_j - z_i|
  };

  explicit Oracle(const InterpProblem<T>& problem) : problem_(problem) {
    const std::size_t m = problem.size();
    knots_.reserve(m);
    values_.reserve(m);
    abs_values_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      knots_.emplace_back(problem.knot(j));
      values_.emplace_back(problem.value(j));
      abs_values_.push_back(abs(values_.back()));
    }
    diff_.assign(m * m, W{});
    abs_diff_.assign(m * m, DoubleDouble{});
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        diff_[j * m + i] = knots_[j] - knots_[i];
        abs_diff_[j * m + i] = abs(diff_[j * m + i]);
      }
    }
  }

  const InterpProblem<T>& problem() const noexcept { return problem_; }

  Evaluation evaluate(const EvalSpec<T>& spec) const {
    const std::size_t m = problem_.size();
    const W z{spec.z};
    const W t{spec.t};

    std::vector<W> factors(m);
    std::vector<DoubleDouble> abs_factors(m);
    for (std::size_t i = 0; i < m; ++i) {
      factors[i] = z - t * knots_[i];
      abs_factors[i] = abs(factors[i]);
    }

    const auto hit = find_coincidence(problem_, spec);
    const std::size_t direct_end = hit ? *hit : m;

    Evaluation out;
    out.p.resize(m);
    out.sums.resize(m);
    for (std::size_t n = 0; n < m; ++n) {
      W acc{};
      DoubleDouble abs_acc{};
      for (std::size_t j = 0; j <= n; ++j) {
        W num{1.0};
        W den{1.0};
        DoubleDouble abs_num{1.0};
        DoubleDouble abs_den{1.0};
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == j) continue;
          if (n < direct_end) {
            num *= factors[i];
            den *= diff_[j * m + i];
          }
          abs_num *= abs_factors[i];
          abs_den *= abs_diff_[j * m + i];
        }
        if (n < direct_end) acc += values_[j] * (num / den);
        abs_acc += abs_values_[j] * (abs_num / abs_den);
      }
      out.p[n] = acc;
      out.sums[n] = abs_acc;
    }

    if (hit) {
      // z = t z_j: every term but the j-th carries the factor z - t z_j = 0.
      W power{1.0};
      for (std::size_t n = 0; n < *hit; ++n) power *= t;
      for (std::size_t n = *hit; n < m; ++n) {
        out.p[n] = values_[*hit] * power;
        power *= t;
      }
    }
    return out;
  }

  PrefixResults<T> prefix_values(const EvalSpec<T>& spec) const {
    const auto e = evaluate(spec);
    PrefixResults<T> p;
    p.reserve(e.p.size());
    for (const auto& w : e.p) p.push_back(to_working<T>(w));
    return p;
  }

  std::vector<DoubleDouble> sensitivity_sums(const EvalSpec<T>& spec) const {
    return evaluate(spec).sums;
  }

 private:
  InterpProblem<T> problem_;
  std::vector<W> knots_;
  std::vector<W> values_;
  std::vector<DoubleDouble> abs_values_;
  std::vector<W> diff_;                 // z_j - z_i, row-major
  std::vector<DoubleDouble> abs_diff_;  // |z_j - z_i|
};

/// Ground-truth p_0..p_N rounded to working precision.
template <Scalar T>
PrefixResults<T> oracle_prefix_values(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  return Oracle<T>(problem).prefix_values(spec);
}

/// f_j = z_j^s computed in double-double and rounded once, so each sample
/// carries at most half an ulp of error.
template <Scalar T>
std::vector<T> monomial_samples(std::span<const T> knots, int s) {
  std::vector<T> f;
  f.reserve(knots.size());
  for (const T& z : knots) {
    Wide<T> acc{1.0};
    const Wide<T> wz{z};
    for (int k = 0; k < s; ++k) acc *= wz;
    f.push_back(to_working<T>(acc));
  }
  return f;
}

}  // namespace stabinterp
