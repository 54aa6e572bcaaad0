#pragma once

// Partition functions, linear-statistic CLTs, characteristic-polynomial
// correlations and gap probabilities of piecewise thinned ensembles, all
// expressed through the asymptotic constants.

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/errors.hpp"

namespace hankel_fh {

struct CLTParams {
  double mu = 0.0;
  double sigma2 = 0.0;
  double centering = 0.0;  ///< int W rho
};

/// Intervals are numbered 1..m+1 with interval j = (t_{j-1}, t_j); points on
/// interval k in `keep` survive with probability `survival[i]`.
struct ThinningSpec {
  std::vector<int> keep;
  std::vector<double> survival;

  friend bool operator==(const ThinningSpec&, const ThinningSpec&) = default;
};

inline void validate(const ThinningSpec& th, int m) {
  if (th.keep.size() != th.survival.size())
    throw InvalidSpec("thinning: keep and survival must have the same length");
  std::set<int> seen;
  for (std::size_t i = 0; i < th.keep.size(); ++i) {
    const int k = th.keep[i];
    if (k < 1 || k > m + 1)
      throw InvalidSpec("thinning: interval index " + std::to_string(k) + " must lie in 1.." + std::to_string(m + 1));
    if (!seen.insert(k).second) throw InvalidSpec("thinning: interval " + std::to_string(k) + " listed twice");
    const double s = th.survival[i];
    if (!(s > 0.0 && s <= 1.0)) throw InvalidSpec("thinning: 0 < s_" + std::to_string(k) + " <= 1 violated");
  }
}

/// s~_1..s~_{m+1}: s_k on kept intervals, 1 elsewhere.
inline std::vector<double> thinning_factors(int m, const ThinningSpec& th) {
  validate(th, m);
  std::vector<double> s(static_cast<std::size_t>(m + 1), 1.0);
  for (std::size_t i = 0; i < th.keep.size(); ++i) s[static_cast<std::size_t>(th.keep[i] - 1)] = th.survival[i];
  return s;
}

inline AsymptoticConstants partition_asymptotics(EnsembleClass c, const ChebSeries& V, ComplexValue alpha0 = 0.0,
                                                 ComplexValue alpha_edge = 0.0, int cheb_degree = kDefaultChebDegree) {
  WeightSpec s;
  s.ensemble = c;
  s.V = V;
  s.W = ChebSeries::constant(0.0);
  s.alphas = {alpha0, alpha_edge};
  return constants(s, cheb_degree);
}

inline CLTParams clt_params(EnsembleClass c, const EquilibriumDensity& density, const ChebSeries& W, double alpha0 = 0.0,
                            double alpha_edge = 0.0) {
  if (!(alpha0 > -1.0) || !(alpha_edge > -1.0)) throw InvalidSpec("Re alpha_0 and Re alpha_{m+1} must be > -1");
  if (c == EnsembleClass::Gaussian && (alpha0 != 0.0 || alpha_edge != 0.0))
    throw InvalidSpec("Gaussian-class weights have no hard edge: alpha_0 = alpha_{m+1} = 0 is required");
  if (c == EnsembleClass::Laguerre && alpha_edge != 0.0)
    throw InvalidSpec("Laguerre-class weights have a soft edge at 1: alpha_{m+1} = 0 is required");
  const double pi = std::numbers::pi;
  CLTParams p;
  p.sigma2 = 2.0 * quadratic_form_W(W);
  p.centering = integrate_w1(W * density.psi * edge_factor(c));
  const double mean = integrate_w1(W) / (2.0 * pi);
  switch (c) {
    case EnsembleClass::Gaussian: p.mu = 0.0; break;
    case EnsembleClass::Laguerre: p.mu = alpha0 * mean - alpha0 / 2.0 * W(-1.0); break;
    case EnsembleClass::Jacobi:
      p.mu = (alpha0 + alpha_edge) * mean - alpha0 / 2.0 * W(-1.0) - alpha_edge / 2.0 * W(1.0);
      break;
  }
  return p;
}

inline WeightSpec without_interior_singularities(WeightSpec s) {
  for (int j = 1; j <= s.m(); ++j) s.alphas[static_cast<std::size_t>(j)] = 0.0;
  for (auto& b : s.betas) b = 0.0;
  return s;
}

/// log E[prod |p_n(t_k)|^{alpha_k} e^{2 i beta_k arg p_n(t_k)}], asymptotically.
inline ComplexValue char_poly_correlation_log(const WeightSpec& spec, int n, int cheb_degree = kDefaultChebDegree) {
  using namespace std::complex_literals;
  validate(spec);
  const auto density = solve_density(spec.V, spec.ensemble, cheb_degree);
  const auto with = constants(spec, density);
  const auto without = constants(without_interior_singularities(spec), density);
  ComplexValue beta_sum = 0.0;
  for (auto b : spec.betas) beta_sum += b;
  return asymptotic_log_dn(with, n).value - asymptotic_log_dn(without, n).value -
         static_cast<double>(n) * std::numbers::pi * 1i * beta_sum;
}

/// beta_j = log(s~_j / s~_{j+1}) / (2 pi i), j = 1..m.
inline std::vector<ComplexValue> thinning_to_fh(int m, const ThinningSpec& th) {
  using namespace std::complex_literals;
  const auto s = thinning_factors(m, th);
  std::vector<ComplexValue> betas;
  betas.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const ComplexValue b = std::log(s[static_cast<std::size_t>(j)] / s[static_cast<std::size_t>(j + 1)]) /
                           (2.0 * std::numbers::pi * 1i);
    if (b.real() != 0.0) throw NumericalError("thinning_to_fh: produced a beta with nonzero real part");
    betas.push_back(b);
  }
  return betas;
}

/// log P(no observed points), asymptotically, with the s_k^{n/2} factors.
inline ComplexValue gap_probability_log(const WeightSpec& spec_base, const ThinningSpec& th, int n,
                                        int cheb_degree = kDefaultChebDegree) {
  validate(spec_base);
  for (int j = 1; j <= spec_base.m(); ++j)
    if (spec_base.alpha(j) != 0.0) throw InvalidSpec("gap_probability_log needs interior alpha_j = 0");
  if (th.keep.empty()) {
    validate(th, spec_base.m());
    return 0.0;
  }
  WeightSpec thinned = spec_base;
  thinned.betas = thinning_to_fh(spec_base.m(), th);
  WeightSpec plain = spec_base;
  for (auto& b : plain.betas) b = 0.0;
  const auto density = solve_density(spec_base.V, spec_base.ensemble, cheb_degree);
  ComplexValue out = asymptotic_log_dn(constants(thinned, density), n).value -
                     asymptotic_log_dn(constants(plain, density), n).value;
  for (double s : th.survival) out += static_cast<double>(n) / 2.0 * std::log(s);
  return out;
}

}  // namespace hankel_fh
