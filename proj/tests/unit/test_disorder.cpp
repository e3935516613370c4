#include <gtest/gtest.h>

#include <cmath>

#include "dicke/disorder.hpp"

using namespace dicke;

TEST(Renormalized, Coupling) {
  EXPECT_EQ(renormalized_coupling(0.5, 10, 0), 0.5);
  EXPECT_NEAR(renormalized_coupling(0.5, 99, 1), 0.497494, 1e-6);
  EXPECT_NEAR(renormalized_coupling(0.4, 99, 1), 0.397995, 1e-6);
  EXPECT_THROW(renormalized_coupling(0.4, 0, 1), std::invalid_argument);
  EXPECT_THROW(renormalized_coupling(0.4, 1, -1), std::invalid_argument);
}

TEST(Ensemble, Validation) {
  EXPECT_THROW(validate_ensemble({1, {{0.0, 1.0}}}), std::invalid_argument);
  EXPECT_THROW(validate_ensemble({1, {{1.0, -1.0}}}), std::invalid_argument);
  EXPECT_THROW(validate_ensemble({0, {}}), std::invalid_argument);
  EXPECT_NO_THROW(validate_ensemble({3, {{-1.0, 0.0}}}));
}

TEST(Perturbative, WorkedExample) {
  const DickeParams p{1.0, 1.0, 0.4, 99, 0.0};
  const auto r = disorder_xi_perturbative(p, {99, {{2.0, 1.0}}});
  EXPECT_NEAR(r.xi, 0.45956, 1e-4);
  EXPECT_NEAR(r.term_clean, 0.451675, 1e-6);
  EXPECT_NEAR(r.term_pinned, 0.005, 1e-12);
  EXPECT_NEAR(r.term_coupling, 0.002884, 1e-6);
  EXPECT_EQ(r.xi, r.term_clean + r.term_pinned + r.term_coupling);
}

TEST(Perturbative, NoDefectsIsClean) {
  const DickeParams p{1.0, 1.3, 0.45, 5, 0.0};
  const auto r = disorder_xi_perturbative(p, {5, {}});
  EXPECT_NEAR(r.xi, squeezing_ratio_ground(p).xi, 1e-14);
  EXPECT_EQ(r.term_pinned, 0.0);
  EXPECT_EQ(r.term_coupling, 0.0);
}

TEST(Perturbative, UncoupledDefects) {
  const DickeParams p{1.0, 1.0, 0.3, 8, 0.0};
  const auto r = disorder_xi_perturbative(p, {8, {{1.5, 0.0}, {0.7, 0.0}}});
  const double gbar = 0.3 * std::sqrt(0.8);
  const double eps = std::sqrt(1 - 2 * gbar);
  EXPECT_NEAR(r.xi, eps + 0.5 * 2.0 / 10.0, 1e-14);
  EXPECT_EQ(r.term_coupling, 0.0);
}

TEST(Perturbative, DilutionScaling) {
  const DickeParams base{1.0, 1.0, 0.3, 1, 0.0};
  double ref = 0.0;
  for (int m : {1, 2, 4}) {
    DisorderEnsemble d{50 * m, std::vector<DefectSpin>(m, {2.0, 0.5})};
    DickeParams p = base;
    p.n_spins = d.n_clean;
    const auto r = disorder_xi_perturbative(p, d);
    const double c = r.term_pinned * d.n_total() / m;
    if (m == 1) ref = c;
    EXPECT_NEAR(c, ref, 1e-14);
    EXPECT_GT(r.term_coupling, 0.0);
  }
}

TEST(Perturbative, NegativeSplitting) {
  const DickeParams p{1.0, 1.0, 0.3, 20, 0.0};
  const auto up = disorder_xi_perturbative(p, {20, {{-2.0, 0.5}}});
  const auto down = disorder_xi_perturbative(p, {20, {{2.0, 0.5}}});
  EXPECT_NEAR(up.term_coupling, -down.term_coupling, 1e-15);
}

TEST(Perturbative, Errors) {
  EXPECT_THROW(disorder_xi_perturbative({1.0, 1.0, 0.5, 3, 0.0}, {3, {}}), std::domain_error);
  EXPECT_THROW(disorder_xi_perturbative({1.0, 1.0, 0.8, 3, 0.0}, {3, {{1, 1}}}), std::domain_error);
  EXPECT_THROW(disorder_xi_perturbative({1.0, 1.0, 0.3, 4, 0.0}, {3, {}}), std::invalid_argument);
}

TEST(Perturbativity, Flags) {
  const auto none = perturbativity_check({1.0, 1.0, 0.4, 10, 0.0}, {10, {{1.0, 0.0}}});
  EXPECT_TRUE(none[0]);
  const auto fig = perturbativity_check({1.0, 1.0, 0.5, 6, 0.0}, {6, {{2.1, 2.0}}});
  EXPECT_FALSE(fig[0]);
  const auto big = perturbativity_check({1.0, 1.0, 0.3, 10000, 0.0}, {10000, {{1.0, 1.0}}});
  EXPECT_TRUE(big[0]);
}
