#pragma once

#include <cmath>
#include <compare>
#include <type_traits>

#include "stabinterp/scalar.hpp"

namespace stabinterp {

namespace detail {

struct TwoTerm {
  double hi;
  double lo;
};

// Error-free transformations.
inline TwoTerm two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b|.
inline TwoTerm quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoTerm two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 106 significant bits.
/// Every operation is accurate to a small multiple of u^2 (u = unit_roundoff()).
class DoubleDouble {
 public:
  constexpr DoubleDouble() noexcept = default;
  constexpr DoubleDouble(double x) noexcept : hi_(x) {}  // NOLINT(implicit)

  static DoubleDouble from_parts(double hi, double lo) noexcept {
    const auto s = detail::quick_two_sum(hi, lo);
    DoubleDouble r;
    r.hi_ = s.hi;
    r.lo_ = s.lo;
    return r;
  }

  double hi() const noexcept { return hi_; }
  double lo() const noexcept { return lo_; }

  /// Round to the nearest double.
  double to_double() const noexcept { return hi_ + lo_; }

  bool is_zero() const noexcept { return hi_ == 0.0; }

  DoubleDouble operator-() const noexcept {
    DoubleDouble r;
    r.hi_ = -hi_;
    r.lo_ = -lo_;
    return r;
  }

  friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    auto s = detail::two_sum(a.hi_, b.hi_);
    const auto t = detail::two_sum(a.lo_, b.lo_);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return from_parts(s.hi, s.lo);
  }

  friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    return a + (-b);
  }

  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    auto p = detail::two_prod(a.hi_, b.hi_);
    p.lo += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    return from_parts(p.hi, p.lo);
  }

  friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi_ / b.hi_;
    return from_parts(q1, q2) + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(const DoubleDouble& b) noexcept { return *this = *this + b; }
  DoubleDouble& operator-=(const DoubleDouble& b) noexcept { return *this = *this - b; }
  DoubleDouble& operator*=(const DoubleDouble& b) noexcept { return *this = *this * b; }
  DoubleDouble& operator/=(const DoubleDouble& b) noexcept { return *this = *this / b; }

  friend bool operator==(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend std::partial_ordering operator<=>(const DoubleDouble& a,
                                           const DoubleDouble& b) noexcept {
    if (const auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DoubleDouble abs(const DoubleDouble& a) noexcept { return a.hi() < 0.0 ? -a : a; }

inline DoubleDouble sqrt(const DoubleDouble& a) noexcept {
  if (a.hi() <= 0.0) return DoubleDouble(0.0);
  // One Newton step from the double square root doubles the accurate bits.
  const double x = 1.0 / std::sqrt(a.hi());
  const double ax = a.hi() * x;
  const auto sq = detail::two_prod(ax, ax);
  const double corr = (a - DoubleDouble::from_parts(sq.hi, sq.lo)).hi() * (x * 0.5);
  return DoubleDouble(ax) + DoubleDouble(corr);
}

/// Complex number with DoubleDouble components.
class WideComplex {
 public:
  constexpr WideComplex() noexcept = default;
  WideComplex(DoubleDouble re, DoubleDouble im = {}) noexcept : re_(re), im_(im) {}  // NOLINT
  WideComplex(const Complex& z) noexcept : re_(z.real()), im_(z.imag()) {}  // NOLINT
  WideComplex(double x) noexcept : re_(x) {}  // NOLINT

  const DoubleDouble& re() const noexcept { return re_; }
  const DoubleDouble& im() const noexcept { return im_; }

  Complex to_complex() const noexcept { return {re_.to_double(), im_.to_double()}; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  WideComplex operator-() const noexcept { return {-re_, -im_}; }

  friend WideComplex operator+(const WideComplex& a, const WideComplex& b) noexcept {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend WideComplex operator-(const WideComplex& a, const WideComplex& b) noexcept {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend WideComplex operator*(const WideComplex& a, const WideComplex& b) noexcept {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend WideComplex operator/(const WideComplex& a, const WideComplex& b) noexcept {
    const DoubleDouble den = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
  }

  WideComplex& operator+=(const WideComplex& b) noexcept { return *this = *this + b; }
  WideComplex& operator-=(const WideComplex& b) noexcept { return *this = *this - b; }
  WideComplex& operator*=(const WideComplex& b) noexcept { return *this = *this * b; }
  WideComplex& operator/=(const WideComplex& b) noexcept { return *this = *this / b; }

  friend bool operator==(const WideComplex& a, const WideComplex& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  DoubleDouble re_;
  DoubleDouble im_;
};

inline DoubleDouble abs(const WideComplex& a) noexcept {
  if (a.im().is_zero()) return abs(a.re());
  if (a.re().is_zero()) return abs(a.im());
  return sqrt(a.re() * a.re() + a.im() * a.im());
}

/// Widened counterpart of a working scalar.
template <Scalar T>
using Wide = std::conditional_t<is_complex_v<T>, WideComplex, DoubleDouble>;

/// Round a widened value back to working precision.
template <Scalar T>
T to_working(const Wide<T>& w) noexcept {
  if constexpr (is_complex_v<T>) {
    return w.to_complex();
  } else {
    return w.to_double();
  }
}

}  // namespace stabinterp
