#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "hankel_fh/equilibrium.hpp"
#include "oracles.hpp"

using namespace hankel_fh;
constexpr double pi = std::numbers::pi;

namespace {

// Random psi > 0 of degree 4, normalized so that int rho = 1.
ChebSeries random_psi(std::mt19937_64& rng, EnsembleClass c) {
  auto coeffs = oracle_ref::random_coeffs(rng, 4, 0.15);
  coeffs[0] = 1.0;
  ChebSeries psi(coeffs);
  const double mass = oracle_ref::int_w1([&](double x) { return psi(x) * edge_factor_value(c, x); });
  return psi * (1.0 / mass);
}

ChebSeries potential_from(const ChebSeries& psi, EnsembleClass c) {
  return potential_prime_from_density(psi, c).antiderivative();
}

}  // namespace

TEST(SolveDensity, PresetsAreConstant) {
  const struct {
    EnsembleClass c;
    ChebSeries v;
    double psi;
  } cases[] = {{EnsembleClass::Gaussian, ChebSeries({1.0, 0.0, 1.0}), 2 / pi},
               {EnsembleClass::Laguerre, ChebSeries({2.0, 2.0}), 1 / pi},
               {EnsembleClass::Jacobi, ChebSeries({0.0}), 1 / pi}};
  for (const auto& k : cases) {
    const auto d = solve_density(k.v, k.c);
    for (double x : lobatto_nodes(64)) EXPECT_NEAR(d.psi(x), k.psi, 1e-12);
    EXPECT_LT(d.normalization_defect, 1e-12);
  }
}

TEST(SolveDensity, MatchesDirectPrincipalValueFormula) {
  // rho(t) = [2 pi + PV int V' sqrt(1-x^2) / (x - t)] / (2 pi^2 sqrt(1-t^2))
  std::mt19937_64 rng(8);
  const auto psi = random_psi(rng, EnsembleClass::Jacobi);
  const ChebSeries v = potential_from(psi, EnsembleClass::Jacobi);
  const auto d = solve_density(v, EnsembleClass::Jacobi);
  const ChebSeries vp = v.derivative();
  const auto dv = vp.coeffs();
  for (double t : {-0.6, 0.1, 0.8}) {
    const double rho = (2 * pi + oracle_ref::pv_U(dv, t)) / (2 * pi * pi * std::sqrt(1 - t * t));
    EXPECT_NEAR(d.rho(t), rho, 1e-8);
  }
}

TEST(SolveDensity, RejectsWrongSupport) {
  EXPECT_THROW(solve_density(ChebSeries({1.0, 0.0, 2.0}), EnsembleClass::Gaussian), SupportNotNormalized);
  EXPECT_THROW(solve_density(ChebSeries({0.5, 0.0, 0.5}), EnsembleClass::Gaussian), SupportNotNormalized);
  EXPECT_THROW(solve_density(ChebSeries({3.0, 3.0}), EnsembleClass::Laguerre), SupportNotNormalized);
  EXPECT_THROW(solve_density(ChebSeries({0.0, 3.0}), EnsembleClass::Jacobi), NotRegular);
}

TEST(SolveDensity, NormalizationHoldsForAcceptedDensities) {
  std::mt19937_64 rng(21);
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi})
    for (int trial = 0; trial < 3; ++trial) {
      const auto d = solve_density(potential_from(random_psi(rng, c), c), c);
      const double mass = oracle_ref::int_w1([&](double x) { return d.psi(x) * edge_factor_value(c, x); });
      EXPECT_NEAR(mass, 1.0, 1e-10);
    }
}

TEST(TailIntegral, Examples) {
  const auto lag = solve_density(ChebSeries({2.0, 2.0}), EnsembleClass::Laguerre);
  EXPECT_NEAR(tail_integral(lag, -1.0), 1.0, 1e-13);
  EXPECT_NEAR(tail_integral(lag, 1.0), 0.0, 1e-13);
  EXPECT_NEAR(tail_integral(lag, 0.0), 0.5 - 1 / pi, 1e-13);
  EXPECT_THROW(tail_integral(lag, 1.5), DomainError);
}

TEST(TailIntegral, AgreesWithDirectQuadrature) {
  std::mt19937_64 rng(4);
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi}) {
    const auto d = solve_density(potential_from(random_psi(rng, c), c), c);
    for (double t : {-0.7, 0.2, 0.9}) {
      // int_t^1 rho dx = int_0^{acos t} psi(cos th) m(cos th) dth
      const double th0 = std::acos(t);
      const double ref = oracle_ref::simpson(
          [&](double th) { return d.psi(std::cos(th)) * edge_factor_value(c, std::cos(th)); }, 0.0, th0);
      EXPECT_NEAR(tail_integral(d, t), ref, 1e-12);
    }
  }
}

TEST(TailIntegral, PotentialIdentity) {
  // int_t^1 rho = sqrt(1-t^2)/(2 pi^2) PV int V / ((t - x) sqrt(1-x^2)) dx + acos(t)/pi
  std::mt19937_64 rng(13);
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi}) {
    const ChebSeries presets[] = {reference_potential(c), potential_from(random_psi(rng, c), c)};
    for (const auto& v : presets) {
      const auto d = solve_density(v, c);
      for (double t : {-0.5, 0.3, 0.75}) {
        const double pv = -oracle_ref::pv_T(v.coeffs(), t);
        const double want = std::sqrt(1 - t * t) / (2 * pi * pi) * pv + std::acos(t) / pi;
        EXPECT_NEAR(tail_integral(d, t), want, 1e-9);
      }
    }
  }
}

TEST(PotentialPrime, Examples) {
  const auto g = potential_prime_from_density(ChebSeries({2 / pi}), EnsembleClass::Gaussian);
  EXPECT_NEAR(g(0.5), 2.0, 1e-14);
  EXPECT_NEAR(g(-0.25), -1.0, 1e-14);
  const auto l = potential_prime_from_density(ChebSeries({1 / pi}), EnsembleClass::Laguerre);
  for (double x : {-0.9, 0.0, 0.6}) EXPECT_NEAR(l(x), 2.0, 1e-14);
  const auto j = potential_prime_from_density(ChebSeries({1 / pi}), EnsembleClass::Jacobi);
  for (double x : {-0.9, 0.0, 0.6}) EXPECT_NEAR(j(x), 0.0, 1e-14);
}

TEST(PotentialPrime, RoundTripRecoversPsi) {
  std::mt19937_64 rng(99);
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi})
    for (int trial = 0; trial < 5; ++trial) {
      const auto psi = random_psi(rng, c);
      const auto d = solve_density(potential_from(psi, c), c);
      for (double x : lobatto_nodes(32)) EXPECT_NEAR(d.psi(x), psi(x), 1e-10);
    }
}

TEST(ValidatePotential, GrowthConditions) {
  EXPECT_THROW(validate_potential_growth(ChebSeries({0.0, 1.0}), EnsembleClass::Gaussian), InvalidSpec);
  EXPECT_THROW(validate_potential_growth(ChebSeries({0.0, 0.0, -1.0}), EnsembleClass::Gaussian), InvalidSpec);
  EXPECT_THROW(validate_potential_growth(ChebSeries({1.0, -2.0}), EnsembleClass::Laguerre), InvalidSpec);
  EXPECT_NO_THROW(validate_potential_growth(ChebSeries({0.0}), EnsembleClass::Jacobi));
}

TEST(EnsembleClassNames, RoundTrip) {
  for (auto c : {EnsembleClass::Gaussian, EnsembleClass::Laguerre, EnsembleClass::Jacobi})
    EXPECT_EQ(ensemble_class_from_string(to_string(c)), c);
  EXPECT_THROW(ensemble_class_from_string("hermite"), InvalidSpec);
}
