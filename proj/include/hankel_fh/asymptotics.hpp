#pragma once

// Large-n expansion log D_n = C1 n^2 + C2 n + C3 log n + C4 + o(1) for
// Hankel determinants with Fisher-Hartwig singularities, together with the
// exact closed forms for the Laguerre and Jacobi reference weights.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hankel_fh/cheb.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/special.hpp"
#include "hankel_fh/weight.hpp"

namespace hankel_fh {

struct AsymptoticConstants {
  ComplexValue C1{0.0}, C2{0.0}, C3{0.0}, C4{0.0};
  double beta_max = 0.0;
  double error_exponent = 1.0;  ///< error term is O(log n / n^{error_exponent})
};

struct AsymptoticValue {
  ComplexValue value{0.0};
  double error_order = 0.0;  ///< log n / n^{error_exponent}, reported only
};

namespace detail {

inline double class_c1_constant(EnsembleClass c) {
  switch (c) {
    case EnsembleClass::Gaussian: return 0.75;
    case EnsembleClass::Laguerre: return 1.5;
    case EnsembleClass::Jacobi: return 0.0;
  }
  return 0.0;
}

inline double class_c3_constant(EnsembleClass c) {
  switch (c) {
    case EnsembleClass::Gaussian: return -1.0 / 12.0;
    case EnsembleClass::Laguerre: return -1.0 / 6.0;
    case EnsembleClass::Jacobi: return -0.25;
  }
  return 0.0;
}

// psi is scaled by this inside the log(psi(t_j)) terms.
inline double psi_log_scale(EnsembleClass c) {
  return c == EnsembleClass::Gaussian ? std::numbers::pi / 2.0 : std::numbers::pi;
}

inline ComplexValue point_term(EnsembleClass c, double t, ComplexValue a, ComplexValue b) {
  const double s2 = (1.0 - t) * (1.0 + t);
  switch (c) {
    case EnsembleClass::Gaussian:
      return a * a / 4.0 * std::log(2.0 * std::sqrt(s2)) - b * b * std::log(8.0 * s2 * std::sqrt(s2));
    case EnsembleClass::Laguerre:
      return a * a / 4.0 * (0.5 * std::log((1.0 - t) / (1.0 + t))) -
             b * b * std::log(4.0 * std::pow(1.0 - t, 1.5) * std::sqrt(1.0 + t));
    case EnsembleClass::Jacobi:
      return -a * a / 4.0 * (0.5 * std::log(s2)) - b * b * std::log(4.0 * std::sqrt(s2));
  }
  return 0.0;
}

// Pairwise interaction of singular points j < k, edges included.
inline ComplexValue pair_term(double tj, double tk, ComplexValue aj, ComplexValue ak, ComplexValue bj, ComplexValue bk) {
  using namespace std::complex_literals;
  ComplexValue out = -(aj * ak / 2.0) * std::numbers::ln2 - (aj * ak / 2.0 + 2.0 * bj * bk) * std::log(std::abs(tj - tk));
  if (bj * bk != 0.0) {
    const double arg = 1.0 - tj * tk - std::sqrt((1.0 - tj * tj) * (1.0 - tk * tk));
    out += 2.0 * bj * bk * std::log(arg);
  }
  out += 1i * (std::numbers::pi / 2.0) * (ak * bj - aj * bk);
  return out;
}

inline void require_sum_form(const WeightSpec& s) {
  if (s.ensemble != EnsembleClass::Jacobi || !s.V.is_zero() || !s.W.is_zero())
    throw InvalidSpec("the Deift-Its-Krasovsky expansion needs a Jacobi-class spec with V = 0 and W = 0");
}

}  // namespace detail

/// C1..C4 for any of the three classes. The density is solved here; pass a
/// precomputed one to avoid repeating the work.
inline AsymptoticConstants constants(const WeightSpec& spec, const EquilibriumDensity& density) {
  using namespace std::complex_literals;
  validate(spec);
  const double pi = std::numbers::pi;
  const EnsembleClass c = spec.ensemble;
  const int m = spec.m();
  const ChebSeries& psi = density.psi;
  const ChebSeries edge = edge_factor(c);
  const ComplexValue A = spec.alpha_sum();

  AsymptoticConstants out;
  out.beta_max = spec.beta_max();
  out.error_exponent = 1.0 - 4.0 * out.beta_max;

  // C1
  {
    const ChebSeries dv = spec.V - reference_potential(c);
    const ChebSeries psi_sum = psi + ChebSeries::constant(reference_psi(c));
    out.C1 = -std::numbers::ln2 - detail::class_c1_constant(c) - 0.5 * integrate_w1(dv * psi_sum * edge);
  }

  // C2
  {
    ComplexValue c2 = std::log(2.0 * pi) - A * std::numbers::ln2 - A / (2.0 * pi) * integrate_w1(spec.V);
    c2 += integrate_w1(spec.W * psi * edge);
    for (int j = 0; j <= m + 1; ++j) c2 += spec.alpha(j) / 2.0 * spec.V(spec.t(j));
    for (int j = 1; j <= m; ++j)
      c2 += pi * 1i * spec.beta(j) * (1.0 - 2.0 * tail_integral(density, spec.t(j)));
    out.C2 = c2;
  }

  // C3
  {
    const ComplexValue a0 = spec.alpha(0), am = spec.alpha(m + 1);
    ComplexValue c3 = detail::class_c3_constant(c) + (a0 * a0 + am * am) / 2.0;
    for (int j = 1; j <= m; ++j) c3 += spec.alpha(j) * spec.alpha(j) / 4.0 - spec.beta(j) * spec.beta(j);
    out.C3 = c3;
  }

  // C4
  {
    const double zp = zeta_prime_minus_one();
    const ComplexValue a0 = spec.alpha(0), am = spec.alpha(m + 1);
    const double lpl = std::log(pi * psi(-1.0));
    const double lpr = std::log(pi * psi(1.0));
    ComplexValue c4 = 0.0;
    switch (c) {
      case EnsembleClass::Gaussian:
        c4 = zp - (std::log(pi / 2.0 * psi(-1.0)) + std::log(pi / 2.0 * psi(1.0))) / 24.0;
        break;
      case EnsembleClass::Laguerre:
        c4 = 2.0 * zp - (1.0 - 4.0 * a0 * a0) / 8.0 * lpl - lpr / 24.0 + a0 / 2.0 * std::log(2.0 * pi) -
             log_barnes_g(1.0 + a0);
        break;
      case EnsembleClass::Jacobi:
        c4 = 3.0 * zp + std::numbers::ln2 / 12.0 - (1.0 - 4.0 * a0 * a0) / 8.0 * lpl -
             (1.0 - 4.0 * am * am) / 8.0 * lpr + (a0 + am) / 2.0 * std::log(2.0 * pi) -
             (a0 * a0 + am * am) / 2.0 * std::numbers::ln2 - log_barnes_g(1.0 + a0) - log_barnes_g(1.0 + am);
        break;
    }
    const double scale = detail::psi_log_scale(c);
    for (int j = 1; j <= m; ++j) {
      const double t = spec.t(j);
      const ComplexValue a = spec.alpha(j), b = spec.beta(j);
      c4 += (a * a / 4.0 - b * b) * std::log(scale * psi(t));
      c4 += detail::point_term(c, t, a, b);
      c4 += A * 1i * b * std::asin(t);
      c4 += barnes_ratio(a, b);
      c4 += 1i * b / pi * std::sqrt((1.0 - t) * (1.0 + t)) * (-pv_hilbert_T(spec.W, t));
    }
    for (int j = 0; j <= m + 1; ++j)
      for (int k = j + 1; k <= m + 1; ++k)
        c4 += detail::pair_term(spec.t(j), spec.t(k), spec.alpha(j), spec.alpha(k), spec.beta(j), spec.beta(k));
    c4 += A / (2.0 * pi) * integrate_w1(spec.W);
    for (int j = 0; j <= m + 1; ++j) c4 -= spec.alpha(j) / 2.0 * spec.W(spec.t(j));
    c4 += quadratic_form_W(spec.W);
    out.C4 = c4;
  }
  return out;
}

inline AsymptoticConstants constants(const WeightSpec& spec, int cheb_degree = kDefaultChebDegree) {
  validate(spec);
  return constants(spec, solve_density(spec.V, spec.ensemble, cheb_degree));
}

inline AsymptoticValue asymptotic_log_dn(const AsymptoticConstants& k, int n) {
  if (n < 1) throw InvalidInput("asymptotic_log_dn: n must be positive");
  const double nd = n;
  const double ln = std::log(nd);
  return {k.C1 * nd * nd + k.C2 * nd + k.C3 * ln + k.C4, ln / std::pow(nd, k.error_exponent)};
}

/// log of (2n)^{-n(n+a)} G(n+1) G(n+a+1) / G(1+a).
inline ComplexValue exact_log_laguerre(ComplexValue alpha0, int n) {
  if (n < 1) throw InvalidInput("exact_log_laguerre: n must be positive");
  if (!(alpha0.real() > -1.0)) throw InvalidSpec("Re alpha_0 must be > -1");
  const double nd = n;
  return -nd * (nd + alpha0) * std::log(2.0 * nd) + log_barnes_g(nd + 1.0) + log_barnes_g(nd + alpha0 + 1.0) -
         log_barnes_g(1.0 + alpha0);
}

/// log of 2^{n^2 + n(a+b)} G(n+1)G(n+a+1)G(n+b+1)G(n+a+b+1) / (G(1+a)G(1+b)G(2n+a+b+1)).
inline ComplexValue exact_log_jacobi(ComplexValue a, ComplexValue b, int n) {
  if (n < 1) throw InvalidInput("exact_log_jacobi: n must be positive");
  if (!(a.real() > -1.0)) throw InvalidSpec("Re alpha_0 must be > -1");
  if (!(b.real() > -1.0)) throw InvalidSpec("Re alpha_{m+1} must be > -1");
  const double nd = n;
  return (nd * nd + nd * (a + b)) * std::numbers::ln2 + log_barnes_g(nd + 1.0) + log_barnes_g(nd + a + 1.0) +
         log_barnes_g(nd + b + 1.0) + log_barnes_g(nd + a + b + 1.0) - log_barnes_g(1.0 + a) -
         log_barnes_g(1.0 + b) - log_barnes_g(2.0 * nd + a + b + 1.0);
}

/// Coefficients of n, log n and 1 in log J_n(alpha, beta) / J_n(0, 0).
struct DikExpansion {
  ComplexValue n_coeff{0.0}, log_n_coeff{0.0}, constant{0.0};
  double error_exponent = 1.0;  ///< 1 - 2 beta_max
};

inline DikExpansion dik_constants(const WeightSpec& spec) {
  using namespace std::complex_literals;
  validate(spec);
  detail::require_sum_form(spec);
  const int m = spec.m();
  const double pi = std::numbers::pi;
  const double ln2 = std::numbers::ln2;
  const ComplexValue A = spec.alpha_sum();
  const ComplexValue a0 = spec.alpha(0), am = spec.alpha(m + 1);

  DikExpansion d;
  d.error_exponent = 1.0 - 2.0 * spec.beta_max();
  ComplexValue sum_asin = 0.0;
  for (int j = 1; j <= m; ++j) sum_asin += spec.beta(j) * std::asin(spec.t(j));
  d.n_coeff = 2.0 * 1i * sum_asin - A * ln2;

  d.log_n_coeff = (a0 * a0 + am * am) / 2.0;
  for (int j = 1; j <= m; ++j) d.log_n_coeff += spec.alpha(j) * spec.alpha(j) / 4.0 - spec.beta(j) * spec.beta(j);

  ComplexValue k = 1i * A * sum_asin + (a0 + am) / 2.0 * std::log(2.0 * pi) - (a0 * a0 + am * am) / 2.0 * ln2;
  for (int j = 0; j <= m + 1; ++j)
    for (int l = j + 1; l <= m + 1; ++l)
      k += detail::pair_term(spec.t(j), spec.t(l), spec.alpha(j), spec.alpha(l), spec.beta(j), spec.beta(l));
  for (int j = 1; j <= m; ++j) {
    const double t = spec.t(j);
    const ComplexValue a = spec.alpha(j), b = spec.beta(j);
    k += barnes_ratio(a, b);
    k -= (a * a / 4.0 + b * b) * (0.5 * std::log((1.0 - t) * (1.0 + t)));
    k -= 2.0 * b * b * ln2;
  }
  k -= log_barnes_g(1.0 + a0) + log_barnes_g(1.0 + am);
  d.constant = k;
  return d;
}

/// exact_log_jacobi(0, 0, n) plus the DIK expansion of the ratio.
inline AsymptoticValue dik_log_jacobi(const WeightSpec& spec, int n) {
  const DikExpansion d = dik_constants(spec);
  if (n < 1) throw InvalidInput("dik_log_jacobi: n must be positive");
  const double nd = n;
  const double ln = std::log(nd);
  return {exact_log_jacobi(0.0, 0.0, n) + d.n_coeff * nd + d.log_n_coeff * ln + d.constant,
          ln / std::pow(nd, d.error_exponent)};
}

/// Log of the Laguerre-class ratio E[e^{sum W}] with only the hard-edge
/// exponent alpha_0: n int W rho + Q(W) + (alpha_0 / 2pi) int (W - W(-1)) / sqrt(1-x^2).
inline ComplexValue forrester_frankel_log_ratio(const WeightSpec& spec, int n, int cheb_degree = kDefaultChebDegree) {
  validate(spec);
  if (spec.ensemble != EnsembleClass::Laguerre) throw InvalidSpec("forrester_frankel_log_ratio needs a Laguerre-class spec");
  if (spec.m() != 0) throw InvalidSpec("forrester_frankel_log_ratio needs m = 0 (no interior singular points)");
  if (n < 0) throw InvalidInput("forrester_frankel_log_ratio: n must be non-negative");
  const auto density = solve_density(spec.V, spec.ensemble, cheb_degree);
  const double lin = integrate_w1(spec.W * density.psi * edge_factor(spec.ensemble));
  const ChebSeries shifted = spec.W - ChebSeries::constant(spec.W(-1.0));
  return static_cast<double>(n) * lin + quadratic_form_W(spec.W) +
         spec.alpha(0) / (2.0 * std::numbers::pi) * integrate_w1(shifted);
}

}  // namespace hankel_fh
