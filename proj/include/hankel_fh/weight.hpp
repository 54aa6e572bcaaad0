#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hankel_fh/cheb.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/special.hpp"

namespace hankel_fh {

inline constexpr double kDefaultSeparation = 1e-2;

/// Full description of a weight e^{-nV} e^{W} omega on the class interval.
///
/// `alphas` holds alpha_0..alpha_{m+1} (edge exponents at -1 and 1 included,
/// zero where the class has no hard edge) and `betas` holds beta_1..beta_m.
struct WeightSpec {
  EnsembleClass ensemble = EnsembleClass::Jacobi;
  ChebSeries V;
  ChebSeries W;
  std::vector<double> points;
  std::vector<ComplexValue> alphas{0.0, 0.0};
  std::vector<ComplexValue> betas;
  double separation = kDefaultSeparation;

  int m() const { return static_cast<int>(points.size()); }

  /// t_j with t_0 = -1 and t_{m+1} = 1.
  double t(int j) const {
    if (j <= 0) return -1.0;
    if (j > m()) return 1.0;
    return points[static_cast<std::size_t>(j - 1)];
  }
  ComplexValue alpha(int j) const { return alphas.at(static_cast<std::size_t>(j)); }
  /// beta_j with beta_0 = beta_{m+1} = 0.
  ComplexValue beta(int j) const {
    if (j <= 0 || j > m()) return 0.0;
    return betas[static_cast<std::size_t>(j - 1)];
  }
  /// Sum of all alpha_j, edges included.
  ComplexValue alpha_sum() const {
    ComplexValue s = 0.0;
    for (auto a : alphas) s += a;
    return s;
  }
  double beta_max() const {
    double b = 0.0;
    for (auto x : betas) b = std::max(b, std::abs(x.real()));
    return b;
  }

  friend bool operator==(const WeightSpec& a, const WeightSpec& b) {
    return a.ensemble == b.ensemble && a.V == b.V && a.W == b.W && a.points == b.points && a.alphas == b.alphas &&
           a.betas == b.betas && a.separation == b.separation;
  }
};

/// Checks every precondition shared by the asymptotic theorems; the message
/// names the violated inequality.
inline void validate(const WeightSpec& s) {
  const int m = s.m();
  if (s.alphas.size() != static_cast<std::size_t>(m + 2))
    throw InvalidSpec("alphas must list alpha_0..alpha_{m+1}: expected " + std::to_string(m + 2) + " entries, got " +
                      std::to_string(s.alphas.size()));
  if (s.betas.size() != static_cast<std::size_t>(m))
    throw InvalidSpec("betas must list beta_1..beta_m: expected " + std::to_string(m) + " entries, got " +
                      std::to_string(s.betas.size()));
  if (!(s.separation > 0.0)) throw InvalidSpec("separation delta must be positive");
  for (int j = 1; j <= m; ++j) {
    const double t = s.t(j);
    if (!std::isfinite(t) || !(t > -1.0 && t < 1.0))
      throw InvalidSpec("t_" + std::to_string(j) + " must satisfy -1 < t_" + std::to_string(j) + " < 1");
    if (j > 1 && !(s.t(j - 1) < t))
      throw InvalidSpec("points must satisfy -1 < t_1 < ... < t_m < 1 (t_" + std::to_string(j - 1) +
                        " >= t_" + std::to_string(j) + ")");
  }
  for (int j = 1; j <= m + 1; ++j) {
    if (s.t(j) - s.t(j - 1) < s.separation)
      throw InvalidSpec("min_{j != k} {|t_j - t_k|, |t_j - 1|, |t_j + 1|} >= delta violated between t_" +
                        std::to_string(j - 1) + " and t_" + std::to_string(j));
  }
  for (int j = 0; j <= m + 1; ++j) {
    const auto a = s.alpha(j);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(a.real() > -1.0))
      throw InvalidSpec("Re alpha_" + std::to_string(j) + " must be > -1");
  }
  for (int j = 1; j <= m; ++j) {
    const auto b = s.beta(j);
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag()) || !(b.real() > -0.25 && b.real() < 0.25))
      throw InvalidSpec("Re beta_" + std::to_string(j) + " must lie in (-1/4, 1/4)");
  }
  if (s.ensemble == EnsembleClass::Gaussian && (s.alpha(0) != 0.0 || s.alpha(m + 1) != 0.0))
    throw InvalidSpec("Gaussian-class weights have no hard edge: alpha_0 = alpha_{m+1} = 0 is required");
  if (s.ensemble == EnsembleClass::Laguerre && s.alpha(m + 1) != 0.0)
    throw InvalidSpec("Laguerre-class weights have a soft edge at 1: alpha_{m+1} = 0 is required");
  validate_potential_growth(s.V, s.ensemble);
  if (s.ensemble != EnsembleClass::Jacobi && !s.W.is_zero() && s.W.degree() > s.V.degree())
    throw InvalidSpec("W(x) = O(V(x)) at infinity requires deg W <= deg V for Gaussian and Laguerre classes");
}

}  // namespace hankel_fh
