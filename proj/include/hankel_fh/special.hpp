#pragma once

// Complex log-Gamma and log-Barnes-G in double precision. Both are the
// analytic continuations on C \ (-inf, 0] built from principal-branch
// logarithms; neither function value is ever formed directly.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "hankel_fh/errors.hpp"

namespace hankel_fh {

using ComplexValue = std::complex<double>;

namespace detail {

inline bool is_nonpositive_integer(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

using Wide = std::complex<long double>;

// B_{2k} for k = 1..12.
inline constexpr std::array<long double, 12> kBernoulliEven = {
    1.0L / 6.0L,       -1.0L / 30.0L, 1.0L / 42.0L,       -1.0L / 30.0L,       5.0L / 66.0L,
    -691.0L / 2730.0L, 7.0L / 6.0L,   -3617.0L / 510.0L,  43867.0L / 798.0L,   -174611.0L / 330.0L,
    854513.0L / 138.0L, -236364091.0L / 2730.0L};

inline constexpr long double kStirlingShift = 15.0L;
inline constexpr long double kBarnesShift = 20.0L;
inline constexpr long double kZetaPrimeMinusOne = -0.165421143700450929213919660242780642764L;
inline constexpr long double kHalfLogTwoPi = 0.918938533204672741780329736405617639861L;

inline Wide log_gamma_wide(Wide z) {
  if (z.imag() == 0.0L && z.real() > 0.0L) return {std::lgamma(z.real()), 0.0L};
  Wide shift_sum = 0.0L;
  while (std::abs(z) < kStirlingShift || z.real() < 0.5L) {
    shift_sum += std::log(z);
    z += 1.0L;
  }
  const Wide inv = 1.0L / z;
  const Wide inv2 = inv * inv;
  Wide series = 0.0L;
  Wide pw = inv;
  for (std::size_t k = 1; k <= 10; ++k) {
    const long double kd = static_cast<long double>(k);
    series += kBernoulliEven[k - 1] / (2.0L * kd * (2.0L * kd - 1.0L)) * pw;
    pw *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + kHalfLogTwoPi + series - shift_sum;
}

inline Wide log_barnes_g_wide(Wide z) {
  Wide shift_sum = 0.0L;
  while (z.real() < kBarnesShift) {
    shift_sum += log_gamma_wide(z);
    z += 1.0L;
  }
  // Large-argument expansion of log G(w+1) with w = z - 1.
  const Wide w = z - 1.0L;
  const Wide lw = std::log(w);
  Wide value = 0.5L * w * w * lw - 0.75L * w * w + w * kHalfLogTwoPi - lw / 12.0L + kZetaPrimeMinusOne;
  const Wide inv2 = 1.0L / (w * w);
  Wide pw = inv2;
  for (std::size_t k = 1; k <= 10; ++k) {
    const long double kd = static_cast<long double>(k);
    value += kBernoulliEven[k] / (4.0L * kd * (kd + 1.0L)) * pw;
    pw *= inv2;
  }
  return value - shift_sum;
}

inline ComplexValue narrow(Wide z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace detail

/// zeta'(-1) = 1/12 - log A (Glaisher-Kinkelin constant A).
inline constexpr double zeta_prime_minus_one() { return -0.165421143700450929213919660242780642764; }

inline constexpr const char* kZetaPrimeMinusOneDigits = "-0.165421143700450929213919660242780642764";

/// log Gamma(z): Stirling series after an upward shift to |z| >= 15.
inline ComplexValue log_gamma(ComplexValue z) {
  if (detail::is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  return detail::narrow(detail::log_gamma_wide(detail::Wide(z.real(), z.imag())));
}

/// log G(z) with G(z+1) = Gamma(z) G(z), G(1) = 1.
inline ComplexValue log_barnes_g(ComplexValue z) {
  if (detail::is_nonpositive_integer(z)) throw LogZeroError("log_barnes_g: G vanishes at non-positive integers");
  return detail::narrow(detail::log_barnes_g_wide(detail::Wide(z.real(), z.imag())));
}

/// log [ G(1 + a/2 + b) G(1 + a/2 - b) / G(1 + a) ].
inline ComplexValue barnes_ratio(ComplexValue alpha, ComplexValue beta) {
  return log_barnes_g(1.0 + 0.5 * alpha + beta) + log_barnes_g(1.0 + 0.5 * alpha - beta) - log_barnes_g(1.0 + alpha);
}

}  // namespace hankel_fh
