#pragma once

// Equilibrium-measure densities for one-cut potentials supported on [-1,1].
//
// With V' expanded in Chebyshev-U, the density follows from
//   rho(t) = [2 pi + PV int V'(x) sqrt(1-x^2) / (x - t) dx] / (2 pi^2 sqrt(1-t^2)),
// and psi is rho with the class edge factor removed:
//   Gaussian  rho = psi sqrt(1-x^2)
//   Laguerre  rho = psi sqrt((1-x)/(1+x))
//   Jacobi    rho = psi / sqrt(1-x^2)
// Equivalently rho = psi m(x) / sqrt(1-x^2) with m = 1-x^2, 1-x, 1.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "hankel_fh/cheb.hpp"
#include "hankel_fh/errors.hpp"

namespace hankel_fh {

enum class EnsembleClass { Gaussian, Laguerre, Jacobi };

inline std::string_view to_string(EnsembleClass c) {
  switch (c) {
    case EnsembleClass::Gaussian: return "gaussian";
    case EnsembleClass::Laguerre: return "laguerre";
    case EnsembleClass::Jacobi: return "jacobi";
  }
  return "unknown";
}

inline EnsembleClass ensemble_class_from_string(std::string_view s) {
  if (s == "gaussian") return EnsembleClass::Gaussian;
  if (s == "laguerre") return EnsembleClass::Laguerre;
  if (s == "jacobi") return EnsembleClass::Jacobi;
  throw InvalidSpec("unknown ensemble class '" + std::string(s) + "' (expected gaussian, laguerre or jacobi)");
}

/// m(x) such that rho = psi m / sqrt(1-x^2).
inline ChebSeries edge_factor(EnsembleClass c) {
  switch (c) {
    case EnsembleClass::Gaussian: return ChebSeries({0.5, 0.0, -0.5});  // 1 - x^2
    case EnsembleClass::Laguerre: return ChebSeries({1.0, -1.0});       // 1 - x
    case EnsembleClass::Jacobi: return ChebSeries::constant(1.0);
  }
  return ChebSeries::constant(1.0);
}

inline double edge_factor_value(EnsembleClass c, double x) {
  switch (c) {
    case EnsembleClass::Gaussian: return 1.0 - x * x;
    case EnsembleClass::Laguerre: return 1.0 - x;
    case EnsembleClass::Jacobi: return 1.0;
  }
  return 1.0;
}

/// Reference potential and its constant psi: 2x^2 / 2/pi, 2(x+1) / 1/pi, 0 / 1/pi.
inline ChebSeries reference_potential(EnsembleClass c) {
  switch (c) {
    case EnsembleClass::Gaussian: return ChebSeries({1.0, 0.0, 1.0});
    case EnsembleClass::Laguerre: return ChebSeries({2.0, 2.0});
    case EnsembleClass::Jacobi: return ChebSeries::constant(0.0);
  }
  return ChebSeries::constant(0.0);
}

inline double reference_psi(EnsembleClass c) {
  return c == EnsembleClass::Gaussian ? 2.0 / std::numbers::pi : 1.0 / std::numbers::pi;
}

inline constexpr double kNormalizationTolerance = 1e-8;

struct EquilibriumDensity {
  EnsembleClass ensemble = EnsembleClass::Jacobi;
  ChebSeries psi;
  double normalization_defect = 0.0;  ///< |int rho - 1|
  double edge_residual = 0.0;         ///< |rho numerator| at the soft edges

  double rho(double x) const {
    return psi(x) * edge_factor_value(ensemble, x) / std::sqrt((1.0 - x) * (1.0 + x));
  }
};

/// Checks the growth conditions that make e^{-nV} integrable on the class
/// interval: even degree with positive leading coefficient (Gaussian),
/// positive leading coefficient (Laguerre).
inline void validate_potential_growth(const ChebSeries& v, EnsembleClass c) {
  const int d = v.degree();
  const double lead = v[static_cast<std::size_t>(d)];
  if (c == EnsembleClass::Gaussian && (d < 2 || d % 2 != 0 || !(lead > 0.0)))
    throw InvalidSpec("Gaussian-class V must have even degree >= 2 and positive leading coefficient");
  if (c == EnsembleClass::Laguerre && (d < 1 || !(lead > 0.0)))
    throw InvalidSpec("Laguerre-class V must have degree >= 1 and positive leading coefficient");
}

/// Equilibrium density of V, assuming its support is exactly [-1,1].
inline EquilibriumDensity solve_density(const ChebSeries& v, EnsembleClass c, int degree = kDefaultChebDegree) {
  const double pi = std::numbers::pi;
  degree = std::max(degree, v.degree() + 2);
  if (degree > kMaxChebDegree) throw InvalidInput("solve_density: V degree exceeds the configured maximum");

  // numerator(t) = 2 pi + PV int V' sqrt(1-x^2)/(x - t) dx, a polynomial.
  ChebSeries numerator = pv_hilbert_U_series(v.derivative());
  numerator += ChebSeries::constant(2.0 * pi);

  EquilibriumDensity out;
  out.ensemble = c;
  out.psi = cheb_fit_interior(
      [&](double x) { return numerator(x) / (2.0 * pi * pi * edge_factor_value(c, x)); }, degree);

  const double scale = 2.0 * pi;
  switch (c) {
    case EnsembleClass::Gaussian:
      out.edge_residual = std::max(std::abs(numerator(1.0)), std::abs(numerator(-1.0))) / scale;
      break;
    case EnsembleClass::Laguerre: out.edge_residual = std::abs(numerator(1.0)) / scale; break;
    case EnsembleClass::Jacobi: out.edge_residual = 0.0; break;
  }
  out.normalization_defect = std::abs(integrate_w1(out.psi * edge_factor(c)) - 1.0);

  if (out.normalization_defect > kNormalizationTolerance || out.edge_residual > kNormalizationTolerance)
    throw SupportNotNormalized("solve_density: equilibrium support of V is not [-1,1] (normalization defect " +
                               std::to_string(out.normalization_defect) + ", edge residual " +
                               std::to_string(out.edge_residual) + ")");
  for (double x : lobatto_nodes(degree)) {
    if (!(out.psi(x) > 0.0))
      throw NotRegular("solve_density: psi(" + std::to_string(x) + ") = " + std::to_string(out.psi(x)) +
                       " is not positive; V is not one-cut regular on [-1,1]");
  }
  return out;
}

/// int_t^1 rho(x) dx, integrated exactly in x = cos(theta).
inline double tail_integral(const EquilibriumDensity& density, double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("tail_integral: t must lie in [-1, 1]");
  // rho dx = psi(cos th) m(cos th) dth; its cosine series is the Chebyshev
  // series of psi m.
  const ChebSeries g = density.psi * edge_factor(density.ensemble);
  const double theta = std::acos(t);
  double s = g[0] * theta;
  for (std::size_t k = 1; k < g.size(); ++k) s += g[k] * std::sin(static_cast<double>(k) * theta) / static_cast<double>(k);
  return s;
}

/// V' = 2 PV int rho(y) / (x - y) dy for rho built from psi.
inline ChebSeries potential_prime_from_density(const ChebSeries& psi, EnsembleClass c) {
  // rho = f / sqrt(1-y^2) with f = psi m; PV int f / ((x - y) sqrt(1-y^2)) dy
  // = -pi sum_k f_k U_{k-1}(x).
  const ChebSeries f = psi * edge_factor(c);
  std::vector<double> u(std::max<std::size_t>(f.size(), 2) - 1, 0.0);
  for (std::size_t k = 1; k < f.size(); ++k) u[k - 1] = -2.0 * std::numbers::pi * f[k];
  // U_k -> T basis.
  std::vector<double> t(u.size(), 0.0);
  for (std::size_t k = 0; k < u.size(); ++k)
    for (std::size_t j = k % 2; j <= k; j += 2) t[j] += (j == 0 ? 1.0 : 2.0) * u[k];
  return ChebSeries(std::move(t));
}

}  // namespace hankel_fh
