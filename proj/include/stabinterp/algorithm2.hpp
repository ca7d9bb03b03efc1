#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stabinterp/problem.hpp"

namespace stabinterp {

/// Internal quantities of the product-scaled recurrence.
///
///   A_n = (z - t z_0) ... (z - t z_n),   A_{-1} = 1
///   b_j^(n) = f_j / ((z - t z_j) prod_{i<=n, i!=j} (z_j - z_i))
///   B_n = sum_j b_j^(n),                 p_n = A_n B_n
///
/// `A` and `B` cover the indices where the recurrence ran (all of them unless
/// z = t z_j for some j, in which case they stop before the first such j).
/// `b` holds the last b_j^(n) row.
template <Scalar T>
struct AlgorithmIIState {
  std::vector<T> A;
  std::vector<T> B;
  std::vector<T> b;
  std::optional<std::size_t> coincidence;
  PrefixResults<T> p;
};

/// Algorithm II with its intermediate state. Stable for every knot ordering:
/// the computed p_n are exact for samples perturbed by at most (N+1)*5 u
/// (real) or (N+1)*(8+2*sqrt(2)) u (complex), relatively.
template <Scalar T>
AlgorithmIIState<T> algorithm2_trace(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  const std::size_t m = problem.size();
  const auto z = problem.knots();
  const auto f = problem.values();

  AlgorithmIIState<T> st;
  st.coincidence = find_coincidence(problem, spec);
  const std::size_t run = st.coincidence.value_or(m);

  st.A.reserve(run);
  st.B.reserve(run);
  st.b.resize(run);
  st.p.reserve(m);

  std::vector<T> b0(run);
  for (std::size_t j = 0; j < run; ++j) b0[j] = f[j] / (spec.z - spec.t * z[j]);

  T A{1.0};
  for (std::size_t n = 0; n < run; ++n) {
    A = (spec.z - spec.t * z[n]) * A;
    for (std::size_t j = 0; j < n; ++j) st.b[j] = st.b[j] / (z[j] - z[n]);
    T denom{1.0};
    for (std::size_t j = 0; j < n; ++j) denom *= (z[n] - z[j]);
    st.b[n] = b0[n] / denom;
    T B = st.b[0];
    for (std::size_t j = 1; j <= n; ++j) B += st.b[j];
    st.A.push_back(A);
    st.B.push_back(B);
    st.p.push_back(A * B);
  }

  if (st.coincidence) {
    const T fj = f[*st.coincidence];
    T power{1.0};
    for (std::size_t n = 0; n < run; ++n) power *= spec.t;
    for (std::size_t n = run; n < m; ++n) {
      st.p.push_back(fj * power);
      power *= spec.t;
    }
  }
  return st;
}

template <Scalar T>
PrefixResults<T> algorithm2_prefix(const InterpProblem<T>& problem, const EvalSpec<T>& spec) {
  return algorithm2_trace(problem, spec).p;
}

}  // namespace stabinterp
