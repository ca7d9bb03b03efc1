#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <string>

#include "stabinterp/error.hpp"

namespace stabinterp {

using Complex = std::complex<double>;

/// Working-precision scalar: real (`double`) or complex (`std::complex<double>`).
/// A real scalar carries no imaginary part at all, so "im == 0" holds by type.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Complex>;

template <Scalar T>
inline constexpr bool is_complex_v = std::same_as<T, Complex>;

enum class ArithmeticCase { Real, Complex };

template <Scalar T>
inline constexpr ArithmeticCase arithmetic_case_v =
    is_complex_v<T> ? ArithmeticCase::Complex : ArithmeticCase::Real;

inline const char* to_string(ArithmeticCase c) {
  return c == ArithmeticCase::Real ? "real" : "complex";
}

/// Machine epsilon of the working precision (2^-52 for binary64).
constexpr double unit_roundoff() noexcept {
  return std::numeric_limits<double>::epsilon();
}

inline bool is_finite(double x) noexcept { return std::isfinite(x); }
inline bool is_finite(const Complex& x) noexcept {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}

template <Scalar T>
void require_finite(const T& x, const std::string& what) {
  if (!is_finite(x)) throw InvalidScalar(what + " is not finite");
}

inline double real_part(double x) noexcept { return x; }
inline double real_part(const Complex& x) noexcept { return x.real(); }
inline double imag_part(double) noexcept { return 0.0; }
inline double imag_part(const Complex& x) noexcept { return x.imag(); }

/// Integer power by repeated multiplication, left to right.
template <Scalar T>
T int_pow(T base, int exponent) {
  T r{1.0};
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace stabinterp
