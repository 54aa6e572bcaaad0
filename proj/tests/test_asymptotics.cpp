#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hankel_fh/asymptotics.hpp"
#include "oracles.hpp"

using namespace hankel_fh;
using namespace std::complex_literals;
constexpr double pi = std::numbers::pi;
const double ln2 = std::log(2.0);
const double zp = zeta_prime_minus_one();

namespace {

WeightSpec preset(EnsembleClass c) {
  WeightSpec s;
  s.ensemble = c;
  s.V = reference_potential(c);
  s.W = ChebSeries::constant(0.0);
  return s;
}

WeightSpec jacobi_with_points(std::vector<double> t, std::vector<ComplexValue> a, std::vector<ComplexValue> b) {
  WeightSpec s = preset(EnsembleClass::Jacobi);
  s.points = std::move(t);
  s.alphas = std::move(a);
  s.betas = std::move(b);
  return s;
}

void expect_c(ComplexValue got, ComplexValue want, double tol, const char* what) {
  EXPECT_NEAR(got.real(), want.real(), tol) << what;
  EXPECT_NEAR(got.imag(), want.imag(), tol) << what;
}

}  // namespace

TEST(Constants, GaussianPreset) {
  const auto k = constants(preset(EnsembleClass::Gaussian));
  expect_c(k.C1, -ln2 - 0.75, 1e-12, "C1");
  expect_c(k.C2, std::log(2 * pi), 1e-12, "C2");
  expect_c(k.C3, -1.0 / 12, 1e-12, "C3");
  expect_c(k.C4, zp, 1e-12, "C4");
  EXPECT_EQ(k.beta_max, 0.0);
  EXPECT_EQ(k.error_exponent, 1.0);
}

TEST(Constants, JacobiPreset) {
  const auto k = constants(preset(EnsembleClass::Jacobi));
  expect_c(k.C1, -ln2, 1e-12, "C1");
  expect_c(k.C2, std::log(2 * pi), 1e-12, "C2");
  expect_c(k.C3, -0.25, 1e-12, "C3");
  expect_c(k.C4, 3 * zp + ln2 / 12, 1e-12, "C4");
}

TEST(Constants, LaguerreStartingPointForEveryEdgeExponent) {
  for (double a0 : {0.0, 0.5, 1.3, -0.4}) {
    WeightSpec s = preset(EnsembleClass::Laguerre);
    s.alphas = {a0, 0.0};
    const auto k = constants(s);
    expect_c(k.C1, -ln2 - 1.5, 1e-10, "C1");
    expect_c(k.C2, std::log(2 * pi) - a0 * (1 + ln2), 1e-10, "C2");
    expect_c(k.C3, a0 * a0 / 2 - 1.0 / 6, 1e-10, "C3");
    expect_c(k.C4, a0 / 2 * std::log(2 * pi) + 2 * zp - log_barnes_g(1 + a0), 1e-10, "C4");
  }
}

TEST(Constants, RealForRealAlphaAndImaginaryBeta) {
  WeightSpec s = preset(EnsembleClass::Gaussian);
  s.points = {-0.4, 0.35};
  s.alphas = {0.0, 0.7, 1.2, 0.0};
  s.betas = {0.2i, -0.15i};
  s.W = ChebSeries({0.1, 0.4, -0.2});
  const auto k = constants(s);
  for (auto c : {k.C1, k.C2, k.C3, k.C4}) EXPECT_NEAR(c.imag(), 0.0, 1e-13);
}

TEST(Constants, ConjugationSymmetry) {
  WeightSpec s = preset(EnsembleClass::Laguerre);
  s.V = ChebSeries({2.0, 2.0});
  s.W = ChebSeries({0.0, 0.3});
  s.points = {-0.1, 0.5};
  s.alphas = {0.4 + 0.3i, 0.5 - 0.2i, 1.0 + 0.1i, 0.0};
  s.betas = {0.1 + 0.05i, -0.2 + 0.3i};
  WeightSpec c = s;
  for (auto& a : c.alphas) a = std::conj(a);
  for (auto& b : c.betas) b = -std::conj(b);
  const auto k = constants(s), kc = constants(c);
  expect_c(kc.C1, std::conj(k.C1), 1e-12, "C1");
  expect_c(kc.C2, std::conj(k.C2), 1e-12, "C2");
  expect_c(kc.C3, std::conj(k.C3), 1e-12, "C3");
  expect_c(kc.C4, std::conj(k.C4), 1e-12, "C4");
}

TEST(Constants, TrivialSingularitiesDropOut) {
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi}) {
    WeightSpec base = preset(c);
    base.W = ChebSeries({0.2, -0.3});
    if (c != EnsembleClass::Gaussian) base.alphas = {0.6, 0.0};
    const auto k0 = constants(base);
    for (auto pts : {std::vector<double>{0.2}, std::vector<double>{-0.5, 0.7}}) {
      WeightSpec s = base;
      s.points = pts;
      s.alphas.assign(pts.size() + 2, 0.0);
      s.alphas.front() = base.alphas.front();
      s.betas.assign(pts.size(), 0.0);
      const auto k = constants(s);
      expect_c(k.C3, k0.C3, 1e-12, "C3");
      expect_c(k.C4, k0.C4, 1e-12, "C4");
    }
  }
}

TEST(Constants, InvariantUnderReflection) {
  // x -> -x maps (t_j, alpha_j, beta_j) to (-t_j, alpha_j, -beta_j), swaps the
  // edges and leaves every Hankel determinant unchanged.
  const auto s = jacobi_with_points({-0.6, 0.1, 0.45}, {0.3, 0.5, 1.1, -0.2, 0.7}, {0.1i, -0.05 + 0.02i, 0.12});
  const auto r = jacobi_with_points({-0.45, -0.1, 0.6}, {0.7, -0.2, 1.1, 0.5, 0.3}, {-0.12, 0.05 - 0.02i, -0.1i});
  const auto k = constants(s), kr = constants(r);
  expect_c(kr.C1, k.C1, 1e-12, "C1");
  expect_c(kr.C2, k.C2, 1e-12, "C2");
  expect_c(kr.C3, k.C3, 1e-12, "C3");
  expect_c(kr.C4, k.C4, 1e-12, "C4");
}

TEST(Constants, PairwiseTermIsSymmetric) {
  // Swapping the roles of j and k in the pair term leaves the sum over j < k
  // unchanged once the points are reordered.
  const double t1 = -0.3, t2 = 0.55;
  const ComplexValue a1 = 0.4, a2 = 1.2, b1 = 0.1i, b2 = -0.07i;
  const auto p12 = detail::pair_term(t1, t2, a1, a2, b1, b2);
  const auto p21 = detail::pair_term(-t2, -t1, a2, a1, -b2, -b1);
  expect_c(p12, p21, 1e-14, "pair");
}

TEST(Constants, RejectsInvalidSpecs) {
  auto s = jacobi_with_points({0.2}, {0.0, 0.0, 0.0}, {0.3});
  try {
    constants(s);
    FAIL() << "expected InvalidSpec";
  } catch (const InvalidSpec& e) {
    EXPECT_NE(std::string(e.what()).find("Re beta_1 must lie in (-1/4, 1/4)"), std::string::npos);
  }
  EXPECT_THROW(constants(jacobi_with_points({0.5, 0.4}, {0, 0, 0, 0}, {0.0, 0.0})), InvalidSpec);
  EXPECT_THROW(constants(jacobi_with_points({0.2}, {0, -1.0, 0}, {0.0})), InvalidSpec);
  EXPECT_THROW(constants(jacobi_with_points({0.995}, {0, 0, 0}, {0.0})), InvalidSpec);
  WeightSpec g = preset(EnsembleClass::Gaussian);
  g.alphas = {0.5, 0.0};
  EXPECT_THROW(constants(g), InvalidSpec);
  WeightSpec l = preset(EnsembleClass::Laguerre);
  l.alphas = {0.0, 0.5};
  EXPECT_THROW(constants(l), InvalidSpec);
  l.alphas = {0.0, 0.0};
  l.W = ChebSeries({0.0, 0.0, 1.0});
  EXPECT_THROW(constants(l), InvalidSpec);
}

TEST(AsymptoticLogDn, Examples) {
  AsymptoticConstants zero;
  EXPECT_EQ(asymptotic_log_dn(zero, 7).value, ComplexValue(0.0));
  const auto g = constants(preset(EnsembleClass::Gaussian));
  const double want = 100 * (-ln2 - 0.75) + 10 * std::log(2 * pi) - std::log(10.0) / 12 + zp;
  EXPECT_NEAR(asymptotic_log_dn(g, 10).value.real(), want, 1e-11);
  EXPECT_NEAR(asymptotic_log_dn(g, 1).value.real(), (g.C1 + g.C2 + g.C4).real(), 1e-15);
  EXPECT_NEAR(asymptotic_log_dn(g, 10).error_order, std::log(10.0) / 10.0, 1e-15);
  EXPECT_THROW(asymptotic_log_dn(g, 0), InvalidInput);
}

TEST(ExactLaguerre, Examples) {
  EXPECT_NEAR(exact_log_laguerre(0.0, 2).real(), -std::log(256.0), 1e-12);
  EXPECT_NEAR(exact_log_laguerre(0.0, 1).real(), std::log(0.5), 1e-13);
  EXPECT_NEAR(exact_log_laguerre(1.0, 1).real(), -2 * ln2, 1e-13);
}

TEST(ExactLaguerre, MatchesDirectMomentDeterminants) {
  // V = 2(x+1), n_param = n: moments are int_0^inf (u-1)^k e^{-2n u} u^a du; for a = 0 exact.
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<double>> h(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h[i][j] = oracle_ref::shifted_exp_moment(i + j, 2.0 * n);
    EXPECT_NEAR(exact_log_laguerre(0.0, n).real(), std::log(oracle_ref::det(h)), 1e-9) << n;
  }
}

TEST(ExactJacobi, Examples) {
  EXPECT_NEAR(exact_log_jacobi(0.0, 0.0, 1).real(), ln2, 1e-13);
  EXPECT_NEAR(exact_log_jacobi(0.0, 0.0, 2).real(), std::log(4.0 / 3.0), 1e-13);
  EXPECT_NEAR(exact_log_jacobi(1.0, 0.0, 1).real(), ln2, 1e-13);
}

TEST(ExactJacobi, MatchesSelbergGammaProduct) {
  for (double a : {-0.5, 0.0, 1.5})
    for (double b : {0.0, 0.7})
      for (int n : {1, 3, 10, 25}) {
        double s = (n * n + n * (a + b)) * ln2;
        for (int k = 0; k < n; ++k)
          s += std::lgamma(k + 1.0) + std::lgamma(k + a + 1) + std::lgamma(k + b + 1) + std::lgamma(k + a + b + 1) -
               std::lgamma(2 * k + a + b + 1) - std::lgamma(2 * k + a + b + 2);
        EXPECT_NEAR(exact_log_jacobi(a, b, n).real(), s, 1e-10 * std::max(1.0, std::abs(s)));
      }
}

TEST(Dik, TrivialRatio) {
  const auto s = preset(EnsembleClass::Jacobi);
  for (int n : {1, 5, 20}) EXPECT_NEAR(std::abs(dik_log_jacobi(s, n).value - exact_log_jacobi(0.0, 0.0, n)), 0.0, 1e-12);
}

TEST(Dik, EdgeExponentsMatchClosedFormToFirstOrder) {
  const auto s = jacobi_with_points({}, {0.6, 1.4}, {});
  double prev = 1e9;
  for (int n : {25, 50, 100, 200}) {
    const double d = std::abs(dik_log_jacobi(s, n).value - exact_log_jacobi(0.6, 1.4, n));
    EXPECT_LT(d, 2.0 / n);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(Dik, AgreesWithTheoremConstantsCoefficientwise) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.2, 0.2), ua(0.0, 1.5);
  for (int trial = 0; trial < 4; ++trial) {
    const auto s = jacobi_with_points({-0.35 + u(rng), 0.4 + u(rng)}, {ua(rng), ua(rng), ua(rng), ua(rng)},
                                      {ComplexValue(0.0, u(rng)), ComplexValue(0.0, u(rng))});
    const auto k = constants(s);
    const auto d = dik_constants(s);
    expect_c(k.C1, -ln2, 1e-10, "C1");
    expect_c(k.C2, std::log(2 * pi) + d.n_coeff, 1e-10, "C2");
    expect_c(k.C3, -0.25 + d.log_n_coeff, 1e-10, "C3");
    expect_c(k.C4, 3 * zp + ln2 / 12 + d.constant, 1e-10, "C4");
  }
}

TEST(Dik, SpecializationChainDecays) {
  const auto s = jacobi_with_points({0.0}, {0.0, 0.0, 0.0}, {0.1i});
  const auto k = constants(s);
  double prev = 0.0;
  for (int n : {8, 16, 32}) {
    const double d = std::abs(asymptotic_log_dn(k, n).value - dik_log_jacobi(s, n).value);
    EXPECT_LT(d, 1.0 / n);
    if (prev > 0.0) {
      EXPECT_LE(d, prev);
    }
    prev = d;
  }
}

TEST(Dik, RejectsPotentials) {
  auto s = preset(EnsembleClass::Jacobi);
  s.W = ChebSeries({0.0, 1.0});
  EXPECT_THROW(dik_constants(s), InvalidSpec);
  EXPECT_THROW(dik_constants(preset(EnsembleClass::Laguerre)), InvalidSpec);
}

TEST(ForresterFrankel, Examples) {
  WeightSpec s = preset(EnsembleClass::Laguerre);
  EXPECT_NEAR(std::abs(forrester_frankel_log_ratio(s, 12)), 0.0, 1e-15);
  s.W = ChebSeries::constant(0.8);
  EXPECT_NEAR(forrester_frankel_log_ratio(s, 12).real(), 12 * 0.8, 1e-12);
  s.W = ChebSeries({0.0, 1.0});
  s.alphas = {2.0, 0.0};
  EXPECT_NEAR(forrester_frankel_log_ratio(s, 0).real(), 1.0 / 8 + 1.0, 1e-12);
  // int x rho for psi = 1/pi is -1/2.
  EXPECT_NEAR(forrester_frankel_log_ratio(s, 10).real(), -5.0 + 1.0 / 8 + 1.0, 1e-12);
  s.points = {0.1};
  s.alphas = {2.0, 0.0, 0.0};
  s.betas = {0.0};
  EXPECT_THROW(forrester_frankel_log_ratio(s, 10), InvalidSpec);
}
