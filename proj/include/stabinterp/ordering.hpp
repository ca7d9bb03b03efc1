#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stabinterp/problem.hpp"

namespace stabinterp {

enum class OrderingStrategy { AsGiven, Increasing, Decreasing, Leja };

inline const char* to_string(OrderingStrategy s) {
  switch (s) {
    case OrderingStrategy::AsGiven: return "asis";
    case OrderingStrategy::Increasing: return "inc";
    case OrderingStrategy::Decreasing: return "dec";
    case OrderingStrategy::Leja: return "leja";
  }
  return "?";
}

/// perm[k] is the original index of the knot placed at position k.
struct OrderingPermutation {
  std::vector<std::size_t> perm;
  OrderingStrategy strategy = OrderingStrategy::AsGiven;

  static OrderingPermutation identity(std::size_t n) {
    OrderingPermutation p;
    p.perm.resize(n);
    std::iota(p.perm.begin(), p.perm.end(), std::size_t{0});
    return p;
  }

  std::size_t size() const noexcept { return perm.size(); }

  bool is_bijection() const {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i : perm) {
      if (i >= perm.size() || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  }

  OrderingPermutation inverse() const {
    OrderingPermutation inv;
    inv.strategy = strategy;
    inv.perm.resize(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv.perm[perm[k]] = k;
    return inv;
  }

  friend bool operator==(const OrderingPermutation&, const OrderingPermutation&) = default;
};

template <Scalar T>
struct OrderedProblem {
  InterpProblem<T> problem;
  OrderingPermutation permutation;
};

/// Reorders knots and values jointly: position k receives original index perm[k].
template <Scalar T>
InterpProblem<T> apply_permutation(const InterpProblem<T>& problem,
                                   const OrderingPermutation& perm) {
  if (perm.size() != problem.size()) {
    throw ShapeError("permutation of length " + std::to_string(perm.size()) +
                     " applied to " + std::to_string(problem.size()) + " knots");
  }
  if (!perm.is_bijection()) throw ShapeError("permutation is not a bijection");
  std::vector<T> knots(problem.size());
  std::vector<T> values(problem.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    knots[k] = problem.knot(perm.perm[k]);
    values[k] = problem.value(perm.perm[k]);
  }
  return InterpProblem<T>(std::move(knots), std::move(values));
}

/// Sorts real knots strictly increasing or decreasing. Complex data with a
/// nonzero imaginary part is rejected: monotone order is undefined there.
template <Scalar T>
OrderedProblem<T> order_monotone(const InterpProblem<T>& problem, OrderingStrategy direction) {
  if (direction != OrderingStrategy::Increasing && direction != OrderingStrategy::Decreasing) {
    throw OrderingDomainError("monotone ordering needs Increasing or Decreasing");
  }
  for (std::size_t j = 0; j < problem.size(); ++j) {
    if (imag_part(problem.knot(j)) != 0.0) {
      throw OrderingDomainError("knot " + std::to_string(j) +
                                " is complex; monotone ordering needs real knots");
    }
  }
  auto perm = OrderingPermutation::identity(problem.size());
  perm.strategy = direction;
  const bool up = direction == OrderingStrategy::Increasing;
  std::sort(perm.perm.begin(), perm.perm.end(), [&](std::size_t a, std::size_t b) {
    const double za = real_part(problem.knot(a));
    const double zb = real_part(problem.knot(b));
    return up ? za < zb : za > zb;
  });
  return {apply_permutation(problem, perm), std::move(perm)};
}

/// Greedy Leja order: start at a knot of maximal modulus, then repeatedly take
/// the remaining knot maximizing the product of distances to those already
/// placed. Ties go to the smallest original index. Products are accumulated
/// in working precision; a non-finite product raises OverflowError.
template <Scalar T>
OrderedProblem<T> order_leja(const InterpProblem<T>& problem) {
  const std::size_t m = problem.size();
  std::vector<std::size_t> remaining(m);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<double> score(m);
  for (std::size_t i = 0; i < m; ++i) score[i] = std::abs(problem.knot(i));

  OrderingPermutation perm;
  perm.strategy = OrderingStrategy::Leja;
  perm.perm.reserve(m);

  while (!remaining.empty()) {
    // `remaining` stays sorted by original index, so strict > keeps the first maximum.
    std::size_t best = 0;
    for (std::size_t r = 1; r < remaining.size(); ++r) {
      if (score[remaining[r]] > score[remaining[best]]) best = r;
    }
    const std::size_t chosen = remaining[best];
    perm.perm.push_back(chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));

    const T last = problem.knot(chosen);
    const bool first = perm.perm.size() == 1;
    for (std::size_t i : remaining) {
      const double d = std::abs(problem.knot(i) - last);
      score[i] = first ? d : score[i] * d;
      if (!std::isfinite(score[i])) {
        throw OverflowError("Leja product for knot " + std::to_string(i) + " is not finite");
      }
    }
  }
  return {apply_permutation(problem, perm), std::move(perm)};
}

/// Dispatch on strategy; AsGiven returns the identity permutation.
template <Scalar T>
OrderedProblem<T> order_knots(const InterpProblem<T>& problem, OrderingStrategy strategy) {
  switch (strategy) {
    case OrderingStrategy::Increasing:
    case OrderingStrategy::Decreasing:
      return order_monotone(problem, strategy);
    case OrderingStrategy::Leja:
      return order_leja(problem);
    case OrderingStrategy::AsGiven:
      break;
  }
  return {problem, OrderingPermutation::identity(problem.size())};
}

}  // namespace stabinterp
