#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace hardyscope {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline Complex unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

/// Absolute angular separation between two directions, in [0, pi].
inline double angle_distance(double a, double b) {
  double d = wrap_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Distance from z to the segment [a, b].
inline double segment_distance(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = abs2(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

inline Complex segment_closest(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = abs2(ab);
  if (len2 == 0.0) return a;
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return a + t * ab;
}

}  // namespace hardyscope
