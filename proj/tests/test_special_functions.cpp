#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hankel_fh/special.hpp"
#include "oracles.hpp"

using namespace hankel_fh;

namespace {

void expect_complex_near(ComplexValue got, ComplexValue want, double tol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

}  // namespace

TEST(LogGamma, Examples) {
  expect_complex_near(log_gamma(1.0), 0.0, 1e-15);
  expect_complex_near(log_gamma(0.5), 0.5723649429247001, 1e-14);
  expect_complex_near(log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGamma, PolesThrow) {
  EXPECT_THROW(log_gamma(0.0), PoleError);
  EXPECT_THROW(log_gamma(-3.0), PoleError);
}

TEST(LogGamma, ComplexValuesMatchReflectionAndRecurrence) {
  // |Gamma(i y)|^2 = pi / (y sinh(pi y))
  for (double y : {0.3, 1.0, 4.5}) {
    const double want = 0.5 * std::log(std::numbers::pi / (y * std::sinh(std::numbers::pi * y)));
    EXPECT_NEAR(log_gamma(ComplexValue(0.0, y)).real(), want, 1e-13);
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-4.5, 40.0), im(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const ComplexValue z(re(rng), im(rng));
    const ComplexValue d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    // Equal modulo 2 pi i.
    EXPECT_NEAR(d.real(), 0.0, 1e-12);
    EXPECT_NEAR(std::remainder(d.imag(), 2 * std::numbers::pi), 0.0, 1e-11);
  }
}

TEST(LogGamma, ConjugateSymmetry) {
  for (ComplexValue z : {ComplexValue(0.3, 2.0), ComplexValue(-2.5, 0.7), ComplexValue(12.0, -30.0)})
    expect_complex_near(log_gamma(std::conj(z)), std::conj(log_gamma(z)), 1e-13);
}

TEST(LogBarnesG, Examples) {
  expect_complex_near(log_barnes_g(1.0), 0.0, 1e-13);
  expect_complex_near(log_barnes_g(4.0), std::log(2.0), 1e-13);
  expect_complex_near(log_barnes_g(6.0), std::log(288.0), 1e-12);
  for (int n = 2; n <= 14; ++n)
    EXPECT_NEAR(log_barnes_g(static_cast<double>(n)).real(), std::log(oracle_ref::barnes_g_int(n)), 1e-11);
}

TEST(LogBarnesG, ZerosThrow) {
  EXPECT_THROW(log_barnes_g(0.0), LogZeroError);
  EXPECT_THROW(log_barnes_g(-2.0), LogZeroError);
}

TEST(LogBarnesG, HalfIntegerValue) {
  // log G(1/2) = log2/24 - log(pi)/4 + 3/2 zeta'(-1)... via G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A^{-3/2}
  const double logA = 1.0 / 12.0 - zeta_prime_minus_one();
  const double want = std::log(2.0) / 24.0 + 0.125 - 0.25 * std::log(std::numbers::pi) - 1.5 * logA;
  EXPECT_NEAR(log_barnes_g(0.5).real(), want, 1e-13);
}

TEST(LogBarnesG, RecurrenceResidualOnRandomGrid) {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> re(0.2, 40.0), im(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const ComplexValue z(re(rng), im(rng));
    const ComplexValue r = log_barnes_g(z + 1.0) - log_gamma(z) - log_barnes_g(z);
    EXPECT_NEAR(r.real(), 0.0, 1e-12) << z;
    EXPECT_NEAR(std::remainder(r.imag(), 2 * std::numbers::pi), 0.0, 1e-12) << z;
  }
}

TEST(LogBarnesG, ConjugateSymmetry) {
  for (ComplexValue z : {ComplexValue(0.7, 1.5), ComplexValue(3.0, -8.0), ComplexValue(25.0, 4.0)})
    expect_complex_near(log_barnes_g(std::conj(z)), std::conj(log_barnes_g(z)), 1e-12);
}

TEST(LogBarnesG, LogGammaIntegralIdentity) {
  for (double z : {0.5, 1.5, 3.0}) {
    const double lhs = oracle_ref::simpson([](double x) { return std::lgamma(1.0 + x); }, 0.0, z);
    const double rhs = 0.5 * z * std::log(2 * std::numbers::pi) - 0.5 * z * (z + 1.0) +
                       z * log_gamma(z + 1.0).real() - log_barnes_g(z + 1.0).real();
    EXPECT_NEAR(lhs, rhs, 1e-10) << "z=" << z;
  }
}

TEST(ZetaPrime, StoredConstant) {
  EXPECT_DOUBLE_EQ(zeta_prime_minus_one(), -0.16542114370045092921);
  EXPECT_EQ(std::string(kZetaPrimeMinusOneDigits).substr(0, 22), "-0.1654211437004509292");
  EXPECT_EQ(zeta_prime_minus_one(), zeta_prime_minus_one());
}

TEST(BarnesRatio, Examples) {
  expect_complex_near(barnes_ratio(0.0, 0.0), 0.0, 1e-13);
  expect_complex_near(barnes_ratio(2.0, 0.0), 0.0, 1e-12);
  expect_complex_near(barnes_ratio(2.0, 1.0), 0.0, 1e-12);
  EXPECT_THROW(barnes_ratio(2.0, 2.0), LogZeroError);
}
