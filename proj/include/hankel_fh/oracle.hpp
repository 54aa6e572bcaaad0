#pragma once

// Reference values of log D_n computed directly from the moment matrix in
// MPFR arithmetic. Moments are assembled panel by panel: panels end at every
// singular point, the singular factor |x - t|^{Re alpha} sits in a
// Gauss-Jacobi weight, and node counts follow from the Bernstein-ellipse
// analyticity of everything that remains.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>
#include <tuple>
#include <vector>

#include "hankel_fh/applications.hpp"
#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/cheb.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/gauss.hpp"
#include "hankel_fh/mp.hpp"
#include "hankel_fh/weight.hpp"

namespace hankel_fh {

inline constexpr int kMaxOracleN = 32;
inline constexpr int kMinOracleBits = 128;

inline int default_oracle_bits(int n) { return 256 + 32 * n; }

struct OracleResult {
  int n = 0;
  int bits = 0;
  double log_abs = 0.0;
  double phase = 0.0;        ///< arg D_n in (-pi, pi]
  double pivot_decay = 0.0;  ///< log(min |pivot| / max |pivot|)
  mp::HpReal log_abs_hp;     ///< log |D_n| at working precision
};

namespace detail {

inline mp::HpReal cheb_eval_hp(const ChebSeries& f, const mp::HpReal& x) {
  const mpfr_prec_t p = x.prec();
  mp::HpReal b1(p), b2(p);
  const mp::HpReal two_x = x * 2.0;
  for (std::size_t k = f.size(); k-- > 1;) {
    mp::HpReal b0 = two_x * b1 - b2 + f[k];
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return x * b1 - b2 + f[0];
}

inline std::complex<double> cheb_eval_complex(const ChebSeries& f, std::complex<double> z) {
  std::complex<double> b1 = 0.0, b2 = 0.0;
  for (std::size_t k = f.size(); k-- > 1;) {
    const std::complex<double> b0 = 2.0 * z * b1 - b2 + f[k];
    b2 = b1;
    b1 = b0;
  }
  return z * b1 - b2 + f[0];
}

struct FhPoint {
  double t;
  ComplexValue alpha;
};

// Endpoints are anchor + lo and anchor + hi, so panels graded toward a
// singular point keep their width below double resolution of the point.
struct Panel {
  double anchor = 0.0;
  double lo = 0.0, hi = 0.0;
  int left_sing = -1;   // FH index whose |x - t|^{Re alpha} sits in the rule
  int right_sing = -1;
  int interval = 1;     // 1-based FH interval (t_{j-1}, t_j)
  int nodes = 8;
};

using RuleKey = std::tuple<int, double, double, long>;

inline std::shared_ptr<const GaussRule<mp::HpReal>> cached_rule(int nodes, double right_exp, double left_exp,
                                                                 mpfr_prec_t bits) {
  static std::mutex mu;
  static std::map<RuleKey, std::shared_ptr<const GaussRule<mp::HpReal>>> cache;
  const RuleKey key{nodes, right_exp, left_exp, static_cast<long>(bits)};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussRule<mp::HpReal>>(
      gauss_jacobi<mp::HpReal>(nodes, mp::HpReal(right_exp, bits), mp::HpReal(left_exp, bits)));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rule)).first->second;
}

// Everything the quadrature needs to know about one weight.
class MomentPlan {
 public:
  MomentPlan(const WeightSpec& spec, int n, int n_param, int bits, std::vector<double> multipliers)
      : spec_(spec), n_(n), n_param_(n_param), bits_(bits), mult_(std::move(multipliers)) {
    const int m = spec.m();
    for (int k = 0; k <= m + 1; ++k) pts_.push_back({spec.t(k), spec.alpha(k)});
    if (mult_.empty()) mult_.assign(static_cast<std::size_t>(m + 1), 1.0);
    if (mult_.size() != static_cast<std::size_t>(m + 1))
      throw InvalidInput("moments: expected one multiplier per interval");
    target_bits_ = 0.75 * bits + 32.0;
    find_support();
    build_panels();
  }

  std::vector<mp::HpComplex> moment_sequence() const;
  bool real_weight() const {
    for (const auto& p : pts_)
      if (p.alpha.imag() != 0.0) return false;
    for (auto b : spec_.betas)
      if (b.real() != 0.0) return false;
    return true;
  }

 private:
  bool singular(int k) const { return pts_[static_cast<std::size_t>(k)].alpha != 0.0; }

  // log of e^{-n V + W} max(1,|x|)^{2n-2}, the reference magnitude.
  double log_scale(double x) const {
    return -n_param_ * spec_.V(x) + spec_.W(x) + (2.0 * n_ - 2.0) * std::log(std::max(1.0, std::abs(x)));
  }
  double log_bound(double x) const {
    double s = log_scale(x);
    for (const auto& p : pts_)
      if (p.alpha != 0.0) s += p.alpha.real() * std::log(std::abs(x - p.t));
    return s;
  }

  double truncation_point(double dir);
  void find_support();
  void build_panels();
  void split_interval(double p, double q, int left_sing, int right_sing, int interval);
  int node_count(const Panel& pan) const;

  const WeightSpec& spec_;
  int n_, n_param_, bits_;
  std::vector<double> mult_;
  std::vector<FhPoint> pts_;
  double target_bits_ = 0.0;
  double lo_ = -1.0, hi_ = 1.0;
  double ref_ = 0.0;
  std::vector<Panel> panels_;
};

inline double MomentPlan::truncation_point(double dir) {
  // Cauchy root bound of V' in the monomial basis.
  const auto mono = spec_.V.derivative().to_monomial();
  std::size_t deg = mono.size();
  while (deg > 0 && mono[deg - 1] == 0.0) --deg;
  double r = 1.0;
  if (deg > 1) {
    const double lead = mono[deg - 1];
    for (std::size_t i = 0; i + 1 < deg; ++i) r = std::max(r, 1.0 + std::abs(mono[i] / lead));
  }
  const double threshold_drop = (bits_ + 64.0) * std::numbers::ln2;
  for (double x = 1.01;; x *= 1.02) {
    if (x > 1e6)
      throw InvalidPotential("oracle: e^{-nV+W} x^{2n} does not decay on the unbounded part of the support");
    const double v = log_bound(dir * x);
    if (!std::isfinite(v))
      throw InvalidPotential("oracle: integrand bound is not finite on the unbounded part of the support");
    ref_ = std::max(ref_, log_scale(dir * x));
    if (x < r + 1.0) continue;
    if (v < ref_ - threshold_drop && log_bound(dir * 1.1 * x) < v && log_bound(dir * 2.0 * x) < v) return dir * x;
  }
}

inline void MomentPlan::find_support() {
  ref_ = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 2000; ++i) ref_ = std::max(ref_, log_scale(-1.0 + i / 1000.0));
  switch (spec_.ensemble) {
    case EnsembleClass::Jacobi: lo_ = -1.0, hi_ = 1.0; break;
    case EnsembleClass::Laguerre: lo_ = -1.0, hi_ = truncation_point(1.0); break;
    case EnsembleClass::Gaussian:
      hi_ = truncation_point(1.0);
      lo_ = truncation_point(-1.0);
      break;
  }
}

inline void MomentPlan::split_interval(double p, double q, int left_sing, int right_sing, int interval) {
  std::vector<double> cuts;
  // Left tail: geometric toward -1.5.
  std::vector<double> left;
  for (double x = -1.5; x > p; x = 1.5 * x + 0.5) left.push_back(x);
  std::reverse(left.begin(), left.end());
  cuts.push_back(p);
  for (double x : left)
    if (x > p) cuts.push_back(x);
  const double lo_u = std::max(p, -1.5), hi_u = std::min(q, 1.5);
  if (hi_u > lo_u) {
    const int k = std::max(1, static_cast<int>(std::ceil((hi_u - lo_u) / 0.25 - 1e-9)));
    for (int i = 1; i < k; ++i) cuts.push_back(lo_u + (hi_u - lo_u) * i / k);
    if (hi_u > cuts.back()) cuts.push_back(hi_u);
  }
  for (double x = 1.5 * 1.5 - 0.5; x < q; x = 1.5 * x - 0.5) cuts.push_back(x);
  if (q > cuts.back()) cuts.push_back(q);
  // Merge slivers at either end.
  if (cuts.size() > 2 && cuts.back() - cuts[cuts.size() - 2] < 0.3 * (cuts[cuts.size() - 2] - cuts[cuts.size() - 3]))
    cuts.erase(cuts.end() - 2);
  if (cuts.size() > 2 && cuts[1] - cuts[0] < 0.3 * (cuts[2] - cuts[1])) cuts.erase(cuts.begin() + 1);

  const auto complex_end = [&](int k) {
    return k >= 0 && pts_[static_cast<std::size_t>(k)].alpha.imag() != 0.0;
  };
  if (cuts.size() == 2 && complex_end(left_sing) && complex_end(right_sing))
    cuts.insert(cuts.begin() + 1, 0.5 * (p + q));

  constexpr double kGrade = 0.15;
  const auto graded_levels = [&](int k) {
    const double re_alpha = pts_[static_cast<std::size_t>(k)].alpha.real();
    return static_cast<int>(std::ceil(target_bits_ * std::numbers::ln2 / ((re_alpha + 1.0) * std::log(1.0 / kGrade))));
  };

  const std::size_t np = cuts.size() - 1;
  for (std::size_t i = 0; i < np; ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const int ls = i == 0 ? left_sing : -1;
    const int rs = i + 1 == np ? right_sing : -1;
    if (complex_end(ls)) {
      const double w = b - a;
      const int levels = graded_levels(ls);
      panels_.push_back({a, 0.0, w * std::pow(kGrade, levels), ls, -1, interval, 0});
      for (int l = levels; l > 0; --l) {
        const double lo = w * std::pow(kGrade, l), hi = w * std::pow(kGrade, l - 1);
        panels_.push_back({a, lo, l == 1 ? w : hi, -1, l == 1 ? rs : -1, interval, 0});
      }
      continue;
    }
    if (complex_end(rs)) {
      const double w = b - a;
      const int levels = graded_levels(rs);
      for (int l = 1; l <= levels; ++l) {
        const double lo = -w * std::pow(kGrade, l - 1), hi = -w * std::pow(kGrade, l);
        panels_.push_back({b, l == 1 ? -w : lo, hi, l == 1 ? ls : -1, -1, interval, 0});
      }
      panels_.push_back({b, -w * std::pow(kGrade, levels), 0.0, -1, rs, interval, 0});
      continue;
    }
    panels_.push_back({0.0, a, b, ls, rs, interval, 0});
  }
}

inline void MomentPlan::build_panels() {
  const int m = spec_.m();
  std::vector<double> bp{lo_};
  for (int j = 1; j <= m; ++j) bp.push_back(spec_.t(j));
  bp.push_back(hi_);
  for (int j = 1; j <= m + 1; ++j) {
    int ls = j - 1, rs = j;
    if (j == 1 && spec_.ensemble == EnsembleClass::Gaussian) ls = -1;
    if (j == m + 1 && spec_.ensemble != EnsembleClass::Jacobi) rs = -1;
    if (ls >= 0 && !singular(ls)) ls = -1;
    if (rs >= 0 && !singular(rs)) rs = -1;
    split_interval(bp[static_cast<std::size_t>(j - 1)], bp[static_cast<std::size_t>(j)], ls, rs, j);
  }
  for (auto& p : panels_) p.nodes = node_count(p);
}

inline int MomentPlan::node_count(const Panel& pan) const {
  const double c_off = 0.5 * (pan.lo + pan.hi), h = 0.5 * (pan.hi - pan.lo);
  double rho = 8.0;
  for (int k = 0; k < static_cast<int>(pts_.size()); ++k) {
    if (!singular(k) || k == pan.left_sing || k == pan.right_sing) continue;
    const double y = std::abs(((pts_[static_cast<std::size_t>(k)].t - pan.anchor) - c_off) / h);
    const double r = y <= 1.0 + 1e-12 ? 1.0 + 1e-6 : y + std::sqrt(y * y - 1.0);
    rho = std::min(rho, r);
  }
  rho = std::pow(rho, 0.9);
  double growth = -std::numeric_limits<double>::infinity();
  constexpr int kSamples = 64;
  for (int i = 0; i < kSamples; ++i) {
    const double th = 2.0 * std::numbers::pi * (i + 0.5) / kSamples;
    const std::complex<double> e = std::polar(rho, th);
    const std::complex<double> u = c_off + h * 0.5 * (e + 1.0 / e);
    const std::complex<double> z = pan.anchor + u;
    double g = (-static_cast<double>(n_param_) * cheb_eval_complex(spec_.V, z) + cheb_eval_complex(spec_.W, z)).real();
    g += (2.0 * n_ - 2.0) * std::log(std::max(1.0, std::abs(z)));
    for (int k = 0; k < static_cast<int>(pts_.size()); ++k) {
      if (!singular(k) || k == pan.left_sing || k == pan.right_sing) continue;
      const auto& p = pts_[static_cast<std::size_t>(k)];
      g += (p.alpha * std::log((pan.anchor - p.t) + u)).real();
    }
    growth = std::max(growth, g);
  }
  const double growth_bits = (growth - ref_) / std::numbers::ln2;
  const double need = target_bits_ + std::max(growth_bits, -target_bits_) + 16.0;
  int nodes = static_cast<int>(std::ceil(need / (2.0 * std::log2(rho)))) + 8;
  nodes = std::clamp(nodes, 8, 3000);
  return (nodes + 3) / 4 * 4;
}

inline std::vector<mp::HpComplex> MomentPlan::moment_sequence() const {
  const mpfr_prec_t bits = bits_;
  const int count = 2 * n_ - 1;
  const bool real = real_weight();
  const int m = spec_.m();
  const mp::HpReal pi = mp::HpReal::pi(bits);

  std::vector<mp::HpReal> re(static_cast<std::size_t>(count), mp::HpReal(bits));
  std::vector<mp::HpReal> im(static_cast<std::size_t>(count), mp::HpReal(bits));

  // Per-interval constant: jump factor times thinning multiplier.
  std::vector<mp::HpComplex> interval_const;
  for (int j = 1; j <= m + 1; ++j) {
    ComplexValue bsum = 0.0;
    for (int k = 1; k <= m; ++k) bsum += (k >= j ? 1.0 : -1.0) * spec_.beta(k);
    // exp(i pi bsum)
    const mp::HpReal mag = mp::exp(pi * (-bsum.imag())) * mult_[static_cast<std::size_t>(j - 1)];
    if (bsum.real() == 0.0) {
      interval_const.emplace_back(mag, mp::HpReal(bits));
    } else {
      const mp::HpReal ph = pi * bsum.real();
      interval_const.emplace_back(mag * mp::cos(ph), mag * mp::sin(ph));
    }
  }

  for (const Panel& pan : panels_) {
    const double le = pan.left_sing >= 0 ? pts_[static_cast<std::size_t>(pan.left_sing)].alpha.real() : 0.0;
    const double rexp = pan.right_sing >= 0 ? pts_[static_cast<std::size_t>(pan.right_sing)].alpha.real() : 0.0;
    const auto rule = cached_rule(pan.nodes, rexp, le, bits);
    const mp::HpReal lo(pan.lo, bits), hi(pan.hi, bits);
    const mp::HpReal h = (hi - lo) / 2.0;
    const mp::HpReal c_off = (lo + hi) / 2.0;
    const mp::HpReal jac = mp::pow(h, mp::HpReal(le, bits) + mp::HpReal(rexp, bits) + 1.0);
    const mp::HpComplex& kc = interval_const[static_cast<std::size_t>(pan.interval - 1)];
    std::vector<mp::HpReal> offsets;
    for (const auto& p : pts_) offsets.push_back(mp::HpReal(pan.anchor, bits) - p.t);

    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const mp::HpReal u = c_off + h * rule->nodes[i];
      const mp::HpReal x = u + pan.anchor;
      mp::HpReal logmag = detail::cheb_eval_hp(spec_.W, x) - detail::cheb_eval_hp(spec_.V, x) * static_cast<double>(n_param_);
      mp::HpReal phase(bits);
      bool has_phase = false;
      for (int k = 0; k < static_cast<int>(pts_.size()); ++k) {
        const auto& p = pts_[static_cast<std::size_t>(k)];
        if (p.alpha == 0.0) continue;
        const bool in_rule = k == pan.left_sing || k == pan.right_sing;
        if (in_rule && p.alpha.imag() == 0.0) continue;
        const mp::HpReal ld = mp::log(mp::abs(u + offsets[static_cast<std::size_t>(k)]));
        if (!in_rule && p.alpha.real() != 0.0) logmag += ld * p.alpha.real();
        if (p.alpha.imag() != 0.0) {
          phase += ld * p.alpha.imag();
          has_phase = true;
        }
      }
      const mp::HpReal mag = mp::exp(logmag) * rule->weights[i] * jac;
      mp::HpReal wr(bits), wi(bits);
      if (has_phase) {
        const mp::HpReal cr = mag * mp::cos(phase), ci = mag * mp::sin(phase);
        wr = cr * kc.re - ci * kc.im;
        wi = cr * kc.im + ci * kc.re;
      } else {
        wr = mag * kc.re;
        if (!real) wi = mag * kc.im;
      }
      for (int k = 0; k < count; ++k) {
        re[static_cast<std::size_t>(k)] += wr;
        wr *= x;
        if (!real) {
          im[static_cast<std::size_t>(k)] += wi;
          wi *= x;
        }
      }
    }
  }
  std::vector<mp::HpComplex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.emplace_back(re[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k)]);
  return out;
}

inline void check_oracle_args(const WeightSpec& spec, int n, int bits) {
  validate(spec);
  if (n < 1 || n > kMaxOracleN)
    throw InvalidInput("oracle: n must lie in 1.." + std::to_string(kMaxOracleN));
  if (bits < kMinOracleBits) throw InvalidInput("oracle: bits must be at least " + std::to_string(kMinOracleBits));
}

inline mp::HpReal reduce_phase(mp::HpReal ph) {
  const mp::HpReal pi = mp::HpReal::pi(ph.prec());
  const mp::HpReal two_pi = pi * 2.0;
  while (ph > pi) ph -= two_pi;
  while (ph <= -pi) ph += two_pi;
  return ph;
}

inline OracleResult hankel_log_det(const std::vector<mp::HpComplex>& mom, int n, int bits, bool real) {
  OracleResult r;
  r.n = n;
  r.bits = bits;
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  mp::HpReal log_abs(bits), phase(bits);
  double lmin = std::numeric_limits<double>::infinity(), lmax = -lmin;
  const auto fail = [&](int k) {
    const double decay = std::isfinite(lmin) ? lmin - lmax : 0.0;
    throw DeterminantUnderflow("oracle: pivot " + std::to_string(k + 1) + " vanished at " + std::to_string(bits) +
                                   " bits; raise the working precision",
                               decay);
  };
  // Entries below this magnitude are indistinguishable from rounding noise.
  long emax = std::numeric_limits<long>::min();
  for (const auto& z : mom) emax = std::max({emax, z.re.exponent(), z.im.exponent()});
  const long floor_exp = emax - bits + 8;

  if (real) {
    std::vector<mp::HpReal> A;
    A.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.push_back(mom[static_cast<std::size_t>(i + j)].re);
    for (int k = 0; k < n; ++k) {
      const mp::HpReal& piv = A[idx(k, k)];
      if (!(piv > 0.0) || piv.exponent() < floor_exp) fail(k);
      const mp::HpReal lp = mp::log(piv);
      log_abs += lp;
      lmin = std::min(lmin, lp.to_double());
      lmax = std::max(lmax, lp.to_double());
      for (int i = k + 1; i < n; ++i) {
        const mp::HpReal f = A[idx(i, k)] / piv;
        for (int j = k + 1; j < n; ++j) A[idx(i, j)] -= f * A[idx(k, j)];
      }
    }
  } else {
    std::vector<mp::HpComplex> A;
    A.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.push_back(mom[static_cast<std::size_t>(i + j)]);
    const mp::HpReal pi = mp::HpReal::pi(bits);
    for (int k = 0; k < n; ++k) {
      int best = k;
      mp::HpReal best_mag = mp::abs(A[idx(k, k)]);
      for (int i = k + 1; i < n; ++i) {
        mp::HpReal mag = mp::abs(A[idx(i, k)]);
        if (mag > best_mag) {
          best_mag = std::move(mag);
          best = i;
        }
      }
      if (best != k) {
        for (int j = 0; j < n; ++j) std::swap(A[idx(k, j)], A[idx(best, j)]);
        phase += pi;
      }
      const mp::HpComplex piv = A[idx(k, k)];
      if (best_mag.is_zero() || best_mag.exponent() < floor_exp) fail(k);
      const mp::HpReal lp = mp::log(best_mag);
      log_abs += lp;
      phase += mp::arg(piv);
      lmin = std::min(lmin, lp.to_double());
      lmax = std::max(lmax, lp.to_double());
      for (int i = k + 1; i < n; ++i) {
        const mp::HpComplex f = A[idx(i, k)] / piv;
        for (int j = k + 1; j < n; ++j) A[idx(i, j)] -= f * A[idx(k, j)];
      }
    }
  }
  r.log_abs = log_abs.to_double();
  r.log_abs_hp = std::move(log_abs);
  r.phase = reduce_phase(std::move(phase)).to_double();
  if (r.phase == -0.0) r.phase = 0.0;
  r.pivot_decay = lmin - lmax;
  return r;
}

}  // namespace detail

/// The moments int x^k e^{-n_param V} e^W omega dx for k = 0..2n-2, with
/// `multipliers[j-1]` applied on the j-th interval (t_{j-1}, t_j).
inline std::vector<mp::HpComplex> moment_sequence(const WeightSpec& spec, int n, int n_param, int bits,
                                                  std::vector<double> multipliers = {}) {
  detail::check_oracle_args(spec, n, bits);
  detail::MomentPlan plan(spec, n, n_param, bits, std::move(multipliers));
  return plan.moment_sequence();
}

/// The n x n Hankel matrix of moments.
inline std::vector<std::vector<mp::HpComplex>> moments(const WeightSpec& spec, int n, int n_param, int bits) {
  const auto seq = moment_sequence(spec, n, n_param, bits);
  std::vector<std::vector<mp::HpComplex>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)].push_back(seq[static_cast<std::size_t>(i + j)]);
  return out;
}

inline OracleResult oracle_log_dn(const WeightSpec& spec, int n, int bits = 0, std::vector<double> multipliers = {}) {
  if (bits == 0) bits = default_oracle_bits(n);
  detail::check_oracle_args(spec, n, bits);
  detail::MomentPlan plan(spec, n, n, bits, std::move(multipliers));
  return detail::hankel_log_det(plan.moment_sequence(), n, bits, plan.real_weight());
}

inline bool is_real_positive_weight(const WeightSpec& spec) {
  for (auto a : spec.alphas)
    if (a.imag() != 0.0) return false;
  for (auto b : spec.betas)
    if (b.real() != 0.0) return false;
  return true;
}

/// E[prod s~_j^{N_j}] = D~_n / D_n, exactly at finite n.
inline mp::HpReal thinned_expectation(const WeightSpec& spec, const ThinningSpec& th, int n, int bits = 0) {
  for (int j = 1; j <= spec.m(); ++j)
    if (spec.alpha(j) != 0.0 || spec.beta(j) != 0.0)
      throw InvalidSpec("thinned_expectation needs interior alpha_j = beta_j = 0");
  if (!is_real_positive_weight(spec)) throw InvalidSpec("thinned_expectation needs a real positive weight");
  const auto s = thinning_factors(spec.m(), th);
  const auto thinned = oracle_log_dn(spec, n, bits, s);
  const auto plain = oracle_log_dn(spec, n, bits);
  return mp::exp(thinned.log_abs_hp - plain.log_abs_hp);
}

/// log E[exp(t sum W(x_i))] = log D_n(tW) - log D_n(0).
inline double mgf_ratio(const WeightSpec& spec, double t, int n, int bits = 0) {
  if (!is_real_positive_weight(spec)) throw InvalidSpec("mgf_ratio needs a real positive weight");
  WeightSpec with = spec, without = spec;
  with.W = spec.W * t;
  without.W = ChebSeries::constant(0.0);
  const auto a = oracle_log_dn(with, n, bits);
  const auto b = oracle_log_dn(without, n, bits);
  return (a.log_abs_hp - b.log_abs_hp).to_double();
}

/// log of the Laguerre closed form at working precision (real alpha_0).
inline mp::HpReal exact_log_laguerre_hp(double alpha0, int n, int bits) {
  if (!(alpha0 > -1.0)) throw InvalidSpec("Re alpha_0 must be > -1");
  if (n < 1) throw InvalidInput("exact_log_laguerre_hp: n must be positive");
  const mp::HpReal a(alpha0, bits);
  mp::HpReal s(bits);
  for (int k = 0; k < n; ++k) {
    s += mp::lgamma(mp::HpReal(static_cast<long>(k + 1), bits));
    s += mp::lgamma(a + static_cast<double>(k + 1));
  }
  const double nd = n;
  s -= (a + nd) * nd * mp::log(mp::HpReal(2.0 * nd, bits));
  return s;
}

/// log of the Jacobi (Selberg) closed form at working precision.
inline mp::HpReal exact_log_jacobi_hp(double a0, double b0, int n, int bits) {
  if (!(a0 > -1.0)) throw InvalidSpec("Re alpha_0 must be > -1");
  if (!(b0 > -1.0)) throw InvalidSpec("Re alpha_{m+1} must be > -1");
  if (n < 1) throw InvalidInput("exact_log_jacobi_hp: n must be positive");
  const mp::HpReal a(a0, bits), b(b0, bits);
  const mp::HpReal ab = a + b;
  mp::HpReal s(bits);
  for (int k = 0; k < n; ++k) {
    const double kd = k;
    s += mp::lgamma(mp::HpReal(kd + 1.0, bits)) + mp::lgamma(a + (kd + 1.0)) + mp::lgamma(b + (kd + 1.0)) +
         mp::lgamma(ab + (kd + 1.0));
    s -= mp::lgamma(ab + (2.0 * kd + 1.0)) + mp::lgamma(ab + (2.0 * kd + 2.0));
  }
  const double nd = n;
  s += (ab * nd + nd * nd) * mp::HpReal::log2(bits);
  return s;
}

struct SweepRow {
  int n = 0;
  double oracle_log_abs = 0.0;
  double asymptotic_re = 0.0;
  double delta = 0.0;
  double phase_defect = 0.0;
  double pivot_decay = 0.0;
  double seconds = 0.0;
};

inline unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HANKEL_FH_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

/// Oracle versus asymptotics over `n_list`. bits = 0 selects the default
/// precision for each n. Wall-clock seconds are recorded only with `timing`.
inline std::vector<SweepRow> convergence_sweep(const WeightSpec& spec, const std::vector<int>& n_list, int bits = 0,
                                               int cheb_degree = kDefaultChebDegree, bool timing = false) {
  std::vector<SweepRow> rows(n_list.size());
  if (n_list.empty()) return rows;
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) throw InvalidInput("convergence_sweep: n list must be strictly ascending");
  const AsymptoticConstants k = constants(spec, cheb_degree);

  std::vector<std::exception_ptr> errors(n_list.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n_list.size(); i = next++) {
      try {
        const int n = n_list[i];
        const auto t0 = std::chrono::steady_clock::now();
        const auto o = oracle_log_dn(spec, n, bits);
        const auto asym = asymptotic_log_dn(k, n).value;
        SweepRow& r = rows[i];
        r.n = n;
        r.oracle_log_abs = o.log_abs;
        r.asymptotic_re = asym.real();
        r.delta = o.log_abs - asym.real();
        r.phase_defect = std::remainder(o.phase - asym.imag(), 2.0 * std::numbers::pi);
        r.pivot_decay = o.pivot_decay;
        if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned nt = std::min<unsigned>(worker_threads(), static_cast<unsigned>(n_list.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace hankel_fh
