#pragma once

// Double-precision Chebyshev spectral engine on [-1,1]: interpolation,
// weighted integration, and principal-value integrals via the exact
// Chebyshev Hilbert-transform identities
//
//   PV int T_k(x) / ((x - t) sqrt(1 - x^2)) dx     =  pi U_{k-1}(t)
//   PV int U_{k-1}(y) sqrt(1 - y^2) / (y - t) dy   = -pi T_k(t)
//
// Both PV operations are written with (x - t) in the denominator; callers
// that need (t - x) negate explicitly.

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hankel_fh/errors.hpp"
#include "hankel_fh/gauss.hpp"

namespace hankel_fh {

inline constexpr int kDefaultChebDegree = 128;
inline constexpr int kMaxChebDegree = 4096;

/// Chebyshev-T expansion sum_k a_k T_k(x).
class ChebSeries {
 public:
  ChebSeries() : coeffs_{0.0} {}
  explicit ChebSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("ChebSeries: at least one coefficient is required");
    for (double c : coeffs_)
      if (!std::isfinite(c)) throw InvalidInput("ChebSeries: coefficients must be finite");
  }

  static ChebSeries constant(double c) { return ChebSeries({c}); }

  /// Converts monomial coefficients c_0 + c_1 x + ... to Chebyshev form.
  static ChebSeries from_monomial(std::span<const double> mono) {
    if (mono.empty()) return constant(0.0);
    // Horner in the Chebyshev basis: p <- x p + c_k.
    std::vector<double> p{mono.back()};
    for (std::size_t k = mono.size() - 1; k-- > 0;) {
      std::vector<double> q(p.size() + 1, 0.0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        // x T_j = (T_{j+1} + T_{|j-1|}) / 2, x T_0 = T_1
        if (j == 0) {
          q[1] += p[0];
        } else {
          q[j + 1] += 0.5 * p[j];
          q[j - 1] += 0.5 * p[j];
        }
      }
      q[0] += mono[k];
      p = std::move(q);
    }
    return ChebSeries(std::move(p));
  }

  /// Monomial coefficients of the same polynomial.
  std::vector<double> to_monomial() const {
    const std::size_t n = coeffs_.size();
    std::vector<double> out(n, 0.0);
    std::vector<double> t_prev(n, 0.0), t_cur(n, 0.0);
    t_prev[0] = 1.0;  // T_0
    if (n > 1) t_cur[1] = 1.0;  // T_1
    for (std::size_t i = 0; i < n; ++i) out[i] += coeffs_[0] * t_prev[i];
    if (n > 1)
      for (std::size_t i = 0; i < n; ++i) out[i] += coeffs_[1] * t_cur[i];
    for (std::size_t k = 2; k < n; ++k) {
      std::vector<double> t_next(n, 0.0);
      for (std::size_t i = 0; i + 1 < n; ++i) t_next[i + 1] += 2.0 * t_cur[i];
      for (std::size_t i = 0; i < n; ++i) t_next[i] -= t_prev[i];
      for (std::size_t i = 0; i < n; ++i) out[i] += coeffs_[k] * t_next[i];
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
    return out;
  }

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  /// Index of the last nonzero coefficient (0 for the zero series).
  int degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;)
      if (coeffs_[k] != 0.0) return static_cast<int>(k);
    return 0;
  }
  bool is_zero() const {
    for (double c : coeffs_)
      if (c != 0.0) return false;
    return true;
  }

  /// Clenshaw evaluation; valid for any real x (the series is a polynomial).
  double operator()(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
      const double b0 = 2.0 * x * b1 - b2 + coeffs_[k];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + coeffs_[0];
  }

  ChebSeries derivative() const {
    const std::size_t n = coeffs_.size();
    if (n <= 1) return constant(0.0);
    std::vector<double> d(n - 1, 0.0);
    // c'_{k-1} = c'_{k+1} + 2k c_k, then halve c'_0.
    std::vector<double> tmp(n + 1, 0.0);
    for (std::size_t k = n - 1; k >= 1; --k) tmp[k - 1] = tmp[k + 1] + 2.0 * static_cast<double>(k) * coeffs_[k];
    for (std::size_t k = 0; k + 1 < n; ++k) d[k] = tmp[k];
    d[0] *= 0.5;
    return ChebSeries(std::move(d));
  }

  /// Antiderivative vanishing at x = -1.
  ChebSeries antiderivative() const {
    const std::size_t n = coeffs_.size();
    std::vector<double> a(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double c = coeffs_[k];
      if (k == 0) {
        a[1] += c;
      } else if (k == 1) {
        a[2] += 0.25 * c;
      } else {
        const double kd = static_cast<double>(k);
        a[k + 1] += c / (2.0 * (kd + 1.0));
        a[k - 1] -= c / (2.0 * (kd - 1.0));
      }
    }
    ChebSeries out(std::move(a));
    const double at_minus_one = out(-1.0);
    out.coeffs_[0] -= at_minus_one;
    return out;
  }

  ChebSeries& operator+=(const ChebSeries& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  ChebSeries& operator-=(const ChebSeries& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  ChebSeries& operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
  }
  friend ChebSeries operator+(ChebSeries a, const ChebSeries& b) { return a += b; }
  friend ChebSeries operator-(ChebSeries a, const ChebSeries& b) { return a -= b; }
  friend ChebSeries operator*(ChebSeries a, double s) { return a *= s; }
  friend ChebSeries operator*(double s, ChebSeries a) { return a *= s; }

  /// Exact product, using T_i T_j = (T_{i+j} + T_{|i-j|}) / 2.
  friend ChebSeries operator*(const ChebSeries& a, const ChebSeries& b) {
    const std::size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
    std::vector<double> out(na + nb - 1, 0.0);
    for (std::size_t i = 0; i < na; ++i) {
      if (a.coeffs_[i] == 0.0) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        const double h = 0.5 * a.coeffs_[i] * b.coeffs_[j];
        out[i + j] += h;
        out[i > j ? i - j : j - i] += h;
      }
    }
    return ChebSeries(std::move(out));
  }

  friend bool operator==(const ChebSeries& a, const ChebSeries& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] != b[k]) return false;
    return true;
  }

 private:
  std::vector<double> coeffs_;
};

/// Chebyshev-Lobatto nodes cos(pi j / N), j = 0..N (descending from 1).
inline std::vector<double> lobatto_nodes(int degree) {
  std::vector<double> x(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) x[static_cast<std::size_t>(j)] = std::cos(std::numbers::pi * j / degree);
  if (degree == 0) x[0] = 1.0;
  return x;
}

/// Interpolant of f through the degree+1 Chebyshev-Lobatto nodes.
inline ChebSeries cheb_fit(const std::function<double(double)>& f, int degree) {
  if (degree < 1 || degree > kMaxChebDegree)
    throw InvalidInput("cheb_fit: degree must lie in [1, " + std::to_string(kMaxChebDegree) + "]");
  const auto n = static_cast<std::size_t>(degree);
  const auto x = lobatto_nodes(degree);
  std::vector<double> fx(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    fx[j] = f(x[j]);
    if (!std::isfinite(fx[j]))
      throw InvalidInput("cheb_fit: non-finite sample at x = " + std::to_string(x[j]));
  }
  std::vector<double> a(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      s += w * fx[j] * std::cos(std::numbers::pi * static_cast<double>(j * k % (2 * n)) / degree);
    }
    a[k] = 2.0 * s / degree;
  }
  a[0] *= 0.5;
  a[n] *= 0.5;
  // Drop roundoff-level noise so exact polynomials come back clean.
  double scale = 0.0;
  for (double v : fx) scale = std::max(scale, std::abs(v));
  for (double& c : a)
    if (std::abs(c) <= 1e-15 * scale) c = 0.0;
  return ChebSeries(std::move(a));
}

/// Polynomial of degree <= N-2 through values given at the interior
/// Lobatto nodes cos(pi j / N), j = 1..N-1. Endpoint values come from the
/// interpolant itself.
inline ChebSeries cheb_fit_interior(const std::function<double(double)>& f, int degree) {
  if (degree < 2 || degree > kMaxChebDegree)
    throw InvalidInput("cheb_fit_interior: degree must lie in [2, " + std::to_string(kMaxChebDegree) + "]");
  const auto n = static_cast<std::size_t>(degree);
  std::vector<double> g(n);  // g[j] = f(cos th_j) sin th_j
  double scale = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double th = std::numbers::pi * static_cast<double>(j) / degree;
    const double v = f(std::cos(th));
    if (!std::isfinite(v)) throw InvalidInput("cheb_fit_interior: non-finite sample");
    scale = std::max(scale, std::abs(v));
    g[j] = v * std::sin(th);
  }
  // p(cos th) sin th = sum_k c_k sin((k+1) th): discrete sine transform.
  std::vector<double> u(n - 1, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j < n; ++j)
      s += g[j] * std::sin(std::numbers::pi * static_cast<double>(j * (k + 1) % (2 * n)) / degree);
    u[k] = 2.0 * s / degree;
  }
  // U_k = 2 sum_{j = k, k-2, ..., > 0} T_j  (+ T_0 when k is even).
  std::vector<double> a(n - 1, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = k % 2; j <= k; j += 2) a[j] += (j == 0 ? 1.0 : 2.0) * u[k];
  }
  for (double& c : a)
    if (std::abs(c) <= 1e-15 * scale) c = 0.0;
  return ChebSeries(std::move(a));
}

/// int_{-1}^{1} f(x) (1-x^2)^{-1/2} dx by Gauss-Chebyshev (first kind).
inline double integrate_w1(const ChebSeries& f) {
  const std::size_t m = f.size() + 1;
  double s = 0.0;
  for (std::size_t j = 0; j < m; ++j) s += f(std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * m)));
  return std::numbers::pi * s / static_cast<double>(m);
}

/// int_{-1}^{1} f(x) (1-x^2)^{1/2} dx by Gauss-Chebyshev (second kind).
inline double integrate_w2(const ChebSeries& f) {
  const std::size_t m = f.size() + 1;
  double s = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    const double th = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m + 1);
    const double sn = std::sin(th);
    s += f(std::cos(th)) * sn * sn;
  }
  return std::numbers::pi * s / static_cast<double>(m + 1);
}

/// int_a^b f(x) (x-a)^left_exp (b-x)^right_exp dx by Gauss-Jacobi with the
/// given node count (exact for polynomial f of degree <= 2 nodes - 1).
inline double integrate_jacobi_panel(const std::function<double(double)>& f, double a, double b, double left_exp,
                                     double right_exp, int nodes) {
  if (!(left_exp > -1.0) || !(right_exp > -1.0))
    throw InvalidInput("integrate_jacobi_panel: exponents must exceed -1");
  if (!(a < b)) throw InvalidInput("integrate_jacobi_panel: require a < b");
  // x = c + h y; (x - a) = h (1 + y), (b - x) = h (1 - y).
  const auto rule = gauss_jacobi<double>(nodes, right_exp, left_exp);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
  return s * std::pow(h, left_exp + right_exp + 1.0);
}

inline void require_open_interval(double t, const char* who) {
  if (!(std::abs(t) < 1.0)) throw DomainError(std::string(who) + ": t must lie in (-1, 1)");
}

/// Chebyshev-U values U_0(t)..U_{n-1}(t).
inline std::vector<double> cheb_u_values(double t, std::size_t n) {
  std::vector<double> u(n, 0.0);
  if (n > 0) u[0] = 1.0;
  if (n > 1) u[1] = 2.0 * t;
  for (std::size_t k = 2; k < n; ++k) u[k] = 2.0 * t * u[k - 1] - u[k - 2];
  return u;
}

/// PV int_{-1}^{1} f(x) / ((x - t) sqrt(1 - x^2)) dx.
inline double pv_hilbert_T(const ChebSeries& f, double t) {
  require_open_interval(t, "pv_hilbert_T");
  const auto u = cheb_u_values(t, f.size());
  double s = 0.0;
  for (std::size_t k = 1; k < f.size(); ++k) s += f[k] * u[k - 1];
  return std::numbers::pi * s;
}

/// Coefficients of f in the Chebyshev-U basis.
inline std::vector<double> cheb_t_to_u(const ChebSeries& f) {
  const std::size_t n = f.size();
  std::vector<double> c(n, 0.0);
  c[0] += f[0];
  for (std::size_t k = 1; k < n; ++k) {
    c[k] += 0.5 * f[k];
    if (k >= 2) c[k - 2] -= 0.5 * f[k];
  }
  return c;
}

/// The series g with g(t) = PV int_{-1}^{1} f(y) sqrt(1 - y^2) / (y - t) dy
/// for t in (-1,1).
inline ChebSeries pv_hilbert_U_series(const ChebSeries& f) {
  const auto c = cheb_t_to_u(f);
  std::vector<double> g(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) g[k + 1] = -std::numbers::pi * c[k];
  return ChebSeries(std::move(g));
}

/// PV int_{-1}^{1} f(y) sqrt(1 - y^2) / (y - t) dy.
inline double pv_hilbert_U(const ChebSeries& f, double t) {
  require_open_interval(t, "pv_hilbert_U");
  return pv_hilbert_U_series(f)(t);
}

/// (1/4pi^2) int W(x) (1-x^2)^{-1/2} [PV int W'(y) sqrt(1-y^2) / (x - y) dy] dx.
inline double quadratic_form_W(const ChebSeries& w) {
  // Inner PV has (x - y) orientation: the negative of pv_hilbert_U.
  const ChebSeries inner = -1.0 * pv_hilbert_U_series(w.derivative());
  return integrate_w1(w * inner) / (4.0 * std::numbers::pi * std::numbers::pi);
}

}  // namespace hankel_fh
