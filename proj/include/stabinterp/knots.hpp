#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "stabinterp/error.hpp"
#include "stabinterp/scalar.hpp"

namespace stabinterp {

/// z_j = a + j (b - a) / N on the real line.
struct Equispaced {
  double a = -1.0;
  double b = 1.0;
};

/// N + 1 independent draws, uniform on [a, b).
struct RandomUniform {
  double a = 0.0;
  double b = 1.0;
  std::uint64_t seed = 0;
};

/// z_j = a + j (b - a) / N with complex endpoints.
struct ComplexSegment {
  Complex a;
  Complex b;
};

/// Knots read from a scalar file.
struct KnotFile {
  std::string path;
};

using KnotSource = std::variant<Equispaced, RandomUniform, ComplexSegment, KnotFile>;

/// Name of the generator behind RandomUniform, recorded in experiment headers.
inline constexpr const char* kRngName = "mt19937_64 (53 high bits -> [0,1))";

/// Uniform double in [0, 1) from the top 53 bits of a std::mt19937_64 draw.
/// std::mt19937_64 output is fixed by the standard, unlike the standard
/// distributions, so sequences match on every platform.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<double> equispaced_knots(const Equispaced& src, std::size_t N) {
  if (src.a == src.b) throw ConfigError("equispaced", "interval endpoints coincide");
  if (N == 0) return {src.a};
  const double h = (src.b - src.a) / static_cast<double>(N);
  std::vector<double> z(N + 1);
  for (std::size_t j = 0; j <= N; ++j) z[j] = src.a + static_cast<double>(j) * h;
  return z;
}

inline std::vector<double> random_knots(const RandomUniform& src, std::size_t N) {
  if (src.a == src.b) throw ConfigError("random", "interval endpoints coincide");
  std::mt19937_64 rng(src.seed);
  std::vector<double> z(N + 1);
  for (auto& x : z) x = src.a + (src.b - src.a) * uniform_unit(rng);
  return z;
}

inline std::vector<Complex> segment_knots(const ComplexSegment& src, std::size_t N) {
  if (src.a == src.b) throw ConfigError("complex-segment", "segment endpoints coincide");
  if (N == 0) return {src.a};
  const Complex h = (src.b - src.a) / static_cast<double>(N);
  std::vector<Complex> z(N + 1);
  for (std::size_t j = 0; j <= N; ++j) z[j] = src.a + static_cast<double>(j) * h;
  return z;
}

}  // namespace stabinterp
