#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stabinterp/wide.hpp"
#include "support.hpp"

using namespace stabinterp;

namespace {

// binary128 has 113 significand bits, enough to referee a ~106-bit format.
using Quad = __float128;

Quad to_quad(const DoubleDouble& x) { return static_cast<Quad>(x.hi()) + static_cast<Quad>(x.lo()); }

double rel_err(const DoubleDouble& got, Quad want) {
  const Quad diff = to_quad(got) - want;
  const Quad mag = want < 0 ? -want : want;
  return static_cast<double>((diff < 0 ? -diff : diff) / mag);
}

constexpr double kU2 = unit_roundoff() * unit_roundoff();

}  // namespace

TEST(DoubleDouble, RoundsBackToWorkingPrecisionForRepresentableOperands) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double a = fixtures::uniform(rng, -10, 10);
    const double b = fixtures::uniform(rng, -10, 10);
    EXPECT_EQ((DoubleDouble(a) + DoubleDouble(b)).to_double(), a + b);
    EXPECT_EQ((DoubleDouble(a) - DoubleDouble(b)).to_double(), a - b);
    EXPECT_EQ((DoubleDouble(a) * DoubleDouble(b)).to_double(), a * b);
    EXPECT_EQ((DoubleDouble(a) / DoubleDouble(b)).to_double(), a / b);
  }
}

TEST(DoubleDouble, ArithmeticErrorIsOfOrderUnitRoundoffSquared) {
  std::mt19937_64 rng(12);
  double worst[4] = {0, 0, 0, 0};
  for (int i = 0; i < 5000; ++i) {
    const auto a = DoubleDouble(fixtures::uniform(rng, 0.5, 2)) / DoubleDouble(3.0);
    const auto b = DoubleDouble(fixtures::uniform(rng, 0.5, 2)) / DoubleDouble(7.0);
    const Quad qa = to_quad(a);
    const Quad qb = to_quad(b);
    worst[0] = std::max(worst[0], rel_err(a + b, qa + qb));
    worst[1] = std::max(worst[1], rel_err(a * b, qa * qb));
    worst[2] = std::max(worst[2], rel_err(a / b, qa / qb));
    const Quad sub = to_quad(a - b) - (qa - qb);
    worst[3] = std::max(worst[3], static_cast<double>((sub < 0 ? -sub : sub) / (qa + qb)));
  }
  for (double w : worst) EXPECT_LE(w, 8 * kU2);
}

TEST(DoubleDouble, SqrtAndAbs) {
  const auto two = DoubleDouble(2.0);
  const auto r = sqrt(two);
  EXPECT_LE(rel_err(r * r, 2), 4 * kU2);
  EXPECT_EQ(sqrt(DoubleDouble(0.0)).to_double(), 0.0);
  EXPECT_EQ(abs(DoubleDouble(-3.5)).to_double(), 3.5);
  EXPECT_TRUE(DoubleDouble(1.0) < DoubleDouble::from_parts(1.0, 1e-20));
}

TEST(WideComplex, MatchesExactGaussianIntegerArithmetic) {
  const WideComplex a(Complex(3, 4));
  const WideComplex b(Complex(1, -2));
  EXPECT_EQ((a * b).to_complex(), Complex(11, -2));
  EXPECT_EQ((a / b).to_complex(), Complex(-1, 2));
  EXPECT_EQ(abs(a).to_double(), 5.0);
  EXPECT_EQ(to_working<Complex>(a - b), Complex(2, 6));
}

TEST(WideComplex, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const WideComplex a(fixtures::random_scalar<Complex>(rng));
    const WideComplex b(fixtures::random_scalar<Complex>(rng));
    const auto back = (a * b) / b;
    const double err = abs(back - a).to_double() / abs(a).to_double();
    EXPECT_LE(err, 16 * kU2);
  }
}
