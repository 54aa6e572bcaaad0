#pragma once

// Gauss-Jacobi rules on [-1,1] for the weight (1-y)^a (1+y)^b, generic in the
// scalar type. Nodes start from the eigenvalues of the double-precision
// Jacobi matrix and are polished by Newton iteration on the orthonormal
// three-term recurrence carried out in the target precision. Weights are
// Christoffel numbers 1 / sum_k p_k(x_i)^2.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hankel_fh/errors.hpp"
#include "hankel_fh/mp.hpp"

namespace hankel_fh {

template <class Real>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  static double make(double v, const double&) { return v; }
  static double eps(const double&) { return 4.0 * std::numeric_limits<double>::epsilon(); }
  static double lgamma(double x) { return std::lgamma(x); }
  static double to_double(double x) { return x; }
};

template <>
struct ScalarOps<mp::HpReal> {
  static mp::HpReal make(double v, const mp::HpReal& like) { return {v, like.prec()}; }
  static mp::HpReal eps(const mp::HpReal& like) { return mp::HpReal::pow2(8 - static_cast<long>(like.prec()), like.prec()); }
  static mp::HpReal lgamma(const mp::HpReal& x) { return mp::lgamma(x); }
  static double to_double(const mp::HpReal& x) { return x.to_double(); }
};

template <class Real>
struct GaussRule {
  std::vector<Real> nodes;    ///< ascending, in (-1,1)
  std::vector<Real> weights;  ///< positive
};

namespace detail {

template <class Real>
struct JacobiRecurrence {
  std::vector<Real> diag;     // alpha_k, k = 0..n-1
  std::vector<Real> offdiag;  // sqrt(b_k), k = 1..n  (offdiag[k-1])
  Real p0;                    // 1 / sqrt(mu_0)
};

template <class Real>
JacobiRecurrence<Real> jacobi_recurrence(int n, const Real& a, const Real& b) {
  using Ops = ScalarOps<Real>;
  using std::exp;
  using std::log;
  using std::sqrt;
  const Real one = Ops::make(1.0, a);
  const Real two = Ops::make(2.0, a);
  JacobiRecurrence<Real> rec{{}, {}, one};
  rec.diag.reserve(static_cast<std::size_t>(n));
  rec.offdiag.reserve(static_cast<std::size_t>(n));
  const Real ab = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      rec.diag.push_back((b - a) / (ab + 2.0));
    } else {
      const Real s = ab + 2.0 * k;
      rec.diag.push_back((b * b - a * a) / (s * (s + 2.0)));
    }
  }
  for (int k = 1; k <= n; ++k) {
    Real bk = one;
    if (k == 1) {
      bk = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const Real s = ab + 2.0 * k;
      const double kd = k;
      bk = 4.0 * kd * (a + kd) * (b + kd) * (ab + kd) / (s * s * (s + 1.0) * (s - 1.0));
    }
    rec.offdiag.push_back(sqrt(bk));
  }
  // mu_0 = 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)
  const Real log_mu0 = (ab + 1.0) * log(two) + Ops::lgamma(a + 1.0) + Ops::lgamma(b + 1.0) - Ops::lgamma(ab + 2.0);
  rec.p0 = exp(-0.5 * log_mu0);
  return rec;
}

}  // namespace detail

template <class Real>
GaussRule<Real> gauss_jacobi(int n, const Real& a, const Real& b) {
  using Ops = ScalarOps<Real>;
  using std::abs;
  if (n < 1) throw InvalidInput("gauss_jacobi: node count must be positive");
  if (!(Ops::to_double(a) > -1.0) || !(Ops::to_double(b) > -1.0))
    throw InvalidInput("gauss_jacobi: exponents must exceed -1");

  const auto rec = detail::jacobi_recurrence(n, a, b);

  Eigen::VectorXd d(n);
  Eigen::VectorXd e(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) d[k] = Ops::to_double(rec.diag[static_cast<std::size_t>(k)]);
  for (int k = 0; k + 1 < n; ++k) e[k] = Ops::to_double(rec.offdiag[static_cast<std::size_t>(k)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("gauss_jacobi: tridiagonal eigensolver failed");

  GaussRule<Real> rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));
  const Real tol = Ops::eps(a);

  for (int i = 0; i < n; ++i) {
    Real x = Ops::make(solver.eigenvalues()[i], a);
    Real sum_sq = Ops::make(0.0, a);
    for (int iter = 0; iter < 60; ++iter) {
      Real p_prev = Ops::make(0.0, a);
      Real p = rec.p0;
      Real dp_prev = Ops::make(0.0, a);
      Real dp = Ops::make(0.0, a);
      sum_sq = p * p;
      for (int k = 0; k < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const Real& beta_next = rec.offdiag[ku];
        const Real beta_k = k == 0 ? Ops::make(0.0, a) : rec.offdiag[ku - 1];
        Real p_next = ((x - rec.diag[ku]) * p - beta_k * p_prev) / beta_next;
        Real dp_next = ((x - rec.diag[ku]) * dp + p - beta_k * dp_prev) / beta_next;
        p_prev = std::move(p);
        p = std::move(p_next);
        dp_prev = std::move(dp);
        dp = std::move(dp_next);
        if (k + 1 < n) sum_sq += p * p;
      }
      const Real step = p / dp;
      x -= step;
      if (abs(step) <= tol) {
        if (iter > 0) break;
      }
    }
    // Recompute the Christoffel sum at the converged node.
    {
      Real p_prev = Ops::make(0.0, a);
      Real p = rec.p0;
      sum_sq = p * p;
      for (int k = 0; k + 1 < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const Real beta_k = k == 0 ? Ops::make(0.0, a) : rec.offdiag[ku - 1];
        Real p_next = ((x - rec.diag[ku]) * p - beta_k * p_prev) / rec.offdiag[ku];
        p_prev = std::move(p);
        p = std::move(p_next);
        sum_sq += p * p;
      }
    }
    rule.weights.push_back(1.0 / sum_sq);
    rule.nodes.push_back(std::move(x));
  }
  return rule;
}

template <class Real>
GaussRule<Real> gauss_legendre(int n, const Real& like) {
  const Real zero = ScalarOps<Real>::make(0.0, like);
  return gauss_jacobi(n, zero, zero);
}

}  // namespace hankel_fh
