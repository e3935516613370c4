#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dicke/bogoliubov.hpp"
#include "dicke/ising.hpp"

using namespace dicke;

namespace {

constexpr double kPi = std::numbers::pi;

IsingParams flat(double eta, double g, int n = 6, double w = 1.0) {
  return {eta, 1.0, flat_dispersion(w), g, n};
}

}  // namespace

TEST(Magnon, Spectrum) {
  for (double k : {0.0, 0.7, kPi}) EXPECT_EQ(magnon_spectrum(flat(0.0, 0.1), k).e_k, 1.0);
  for (double eta : {-0.2, 0.1, 0.9}) {
    EXPECT_NEAR(magnon_spectrum(flat(eta, 0.1), kPi / 2).e_k, 1.0, 1e-15);
  }
  const auto m = magnon_spectrum(flat(0.1, 0.4), 0.0);
  EXPECT_NEAR(m.e_k, 1.2, 1e-15);
  EXPECT_NEAR(m.beta_k, 0.1, 1e-15);
  EXPECT_EQ(m.alpha_k, 1.0);
  EXPECT_NEAR(m.g_tilde_k, 0.44, 1e-15);
}

TEST(Magnon, ReducesToDicke) {
  for (double k : {0.0, 1.0, 2.5}) {
    const auto m = dicke_ising_modes(flat(0.0, 0.3, 6, 1.4), k);
    const auto d = normal_modes({1.4, 1.0, 0.3, 6, 0.0});
    EXPECT_NEAR(m.eps_minus_k, d.eps_minus, 1e-14);
    EXPECT_NEAR(m.eps_plus_k, d.eps_plus, 1e-14);
    EXPECT_NEAR(m.gamma_k, d.gamma, 1e-14);
  }
}

TEST(Magnon, Identities) {
  const auto m = dicke_ising_modes(flat(0.1, 0.4), 0.0);
  const double w = 1.0, e = 1.2, gt = 0.44;
  EXPECT_NEAR(m.eps_minus_k * m.eps_minus_k + m.eps_plus_k * m.eps_plus_k, w * w + e * e, 1e-13);
  EXPECT_NEAR(m.eps_minus_k * m.eps_minus_k * m.eps_plus_k * m.eps_plus_k,
              w * w * e * e - 4 * gt * gt * w * e, 1e-13);
}

TEST(Magnon, Ferromagnetic) {
  const auto ip = flat(-0.2, 0.3);
  const auto k0 = dicke_ising_modes(ip, 0.0);
  const auto kpi = dicke_ising_modes(ip, kPi);
  EXPECT_NEAR(k0.e_k, 0.6, 1e-15);
  EXPECT_LT(k0.e_k, 1.0);
  EXPECT_LT(k0.eps_minus_k, kpi.eps_minus_k);
}

TEST(Magnon, SoftModeThrows) {
  EXPECT_THROW(dicke_ising_modes(flat(0.1, 0.6), 0.0), SuperradiantInput);
  EXPECT_THROW(dicke_ising_modes(flat(-0.6, 0.1), 0.0), std::domain_error);
}

TEST(Magnon, Symmetry) {
  for (double k : {0.3, 1.2, 2.9}) {
    const auto a = dicke_ising_modes(flat(0.15, 0.35), k);
    const auto b = dicke_ising_modes(flat(0.15, 0.35), -k);
    EXPECT_EQ(a.e_k, b.e_k);
    EXPECT_EQ(a.eps_minus_k, b.eps_minus_k);
    EXPECT_EQ(a.gamma_k, b.gamma_k);
    EXPECT_LE(a.eps_minus_k, a.eps_plus_k);
  }
}

TEST(CriticalK, Values) {
  const auto z = critical_coupling_k(flat(0.0, 0.1, 6, 2.0), 0.4);
  EXPECT_NEAR(z.exact_quadratic, std::sqrt(2.0) / 2, 1e-15);
  EXPECT_EQ(z.exact_quadratic, z.leading);
  const auto a = critical_coupling_k(flat(0.1, 0.1), 0.0);
  EXPECT_NEAR(a.exact_quadratic, 0.497930, 1e-6);
  EXPECT_EQ(a.leading, 0.5);
  const auto b = critical_coupling_k(flat(0.1, 0.1), kPi);
  EXPECT_NEAR(b.exact_quadratic, std::sqrt(0.8) / 1.8, 1e-15);
}

TEST(CriticalK, QuadraticGap) {
  // C fitted once from eta in {0.01, 0.02, 0.04}: the gap / eta^2 sits just
  // under 0.25 there, so C = 0.25 is frozen
  constexpr double C = 0.25;
  for (double eta : {0.01, 0.02, 0.05, 0.1, 0.2}) {
    const auto c = critical_coupling_k(flat(eta, 0.1), 0.0);
    EXPECT_LE(std::abs(c.exact_quadratic - c.leading), C * eta * eta);
  }
}

TEST(Quadrature, ReducesToDicke) {
  const auto q = squeezed_quadrature_coefficients_k(flat(0.0, 0.3, 1), 0.0);
  const auto w = two_mode_quadrature_coefficients({1.0, 1.0, 0.3, 1, 0.0});
  EXPECT_NEAR(q.boson, w.boson, 1e-15);
  EXPECT_NEAR(q.spin, w.spin, 1e-15);
}

TEST(Quadrature, Factors) {
  const int n = 4;
  const auto q = squeezed_quadrature_coefficients_k(flat(0.1, 0.3, n), 0.0);
  const double gamma = mixing_angle(1.0, 1.2, 0.33);
  EXPECT_NEAR(q.spin, 0.9 * std::sqrt(1.2 / (2 * n)) * std::sin(gamma), 1e-15);
  const auto a = squeezed_quadrature_coefficients_k(flat(0.1, 0.3, n), kPi);
  ASSERT_EQ(a.phases.size(), 4u);
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(a.phases[i].real(), i % 2 ? -1.0 : 1.0, 1e-14);
    EXPECT_NEAR(a.phases[i].imag(), 0.0, 1e-14);
  }
}

TEST(Dispersion, Tables) {
  LadderParams lp;
  lp.j_r = 1.0;
  lp.omega_r = 2.0;
  lp.n_sites = 8;
  const auto spec = map_ladder_to_dicke(lp);
  const auto tab = tabulated_dispersion(spec);
  const auto fn = ladder_dispersion_fn(2.0, 1.0);
  EXPECT_NEAR(tab(kPi / 2), fn(kPi / 2), 1e-14);
  EXPECT_NEAR(tab(-kPi / 4), fn(-kPi / 4), 1e-14);
  EXPECT_THROW(tab(0.1), std::out_of_range);
  EXPECT_THROW(flat_dispersion(0.0), std::invalid_argument);
}

TEST(Validity, EtaWarning) {
  EXPECT_FALSE(eta_outside_small_regime(flat(0.3, 0.1)));
  EXPECT_TRUE(eta_outside_small_regime(flat(-0.31, 0.1)));
  IsingParams bad = flat(0.1, 0.1);
  bad.dispersion = nullptr;
  EXPECT_THROW(validate_ising(bad), std::invalid_argument);
}
