#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <numbers>
#include <random>

#include "lorentzqi/lorentz.hpp"
#include "lorentzqi/measures.hpp"
#include "lorentzqi/oracle.hpp"

using namespace lorentzqi;
using std::numbers::pi;

namespace {

double max_diff(const PureState& a, const PureState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(OracleTransform, IdentityAtZero) {
  const auto g = make_state(StateId::ghz_plus);
  EXPECT_EQ(max_diff(oracle::oracle_transform(g, {0, 0, 0}), g), 0.0);
}

TEST(OracleTransform, FixedCases) {
  const auto w = make_state(StateId::w);
  EXPECT_LT(max_diff(oracle::oracle_transform(w, {pi, pi, pi}), product_transform(w, {pi, pi, pi})),
            1e-12);
  const auto g = make_state(StateId::ghz_plus);
  const WignerAngles a{pi / 2, pi / 3, pi / 5};
  EXPECT_LT(max_diff(oracle::oracle_transform(g, a), product_transform(g, a)), 1e-12);
}

TEST(OracleTransform, AgreesWithFastPathOnRandomInputs) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int trial = 0; trial < 1000; ++trial) {
    const auto psi = oracle::random_pure_state(3, rng);
    const auto a = oracle::random_angles(rng, -4 * pi, 4 * pi);
    EXPECT_LT(max_diff(oracle::oracle_transform(psi, a), product_transform(psi, a)), 1e-12);
  }
}

TEST(OraclePartialTrace, GhzPair) {
  const auto red = oracle::oracle_partial_trace(to_density(make_state(StateId::ghz_plus)), {0, 1});
  EXPECT_LT(max_abs_diff(red.matrix(), ComplexMatrix::diagonal({0.5, 0, 0, 0.5})), 1e-15);
}

TEST(OraclePartialTrace, ProductStateGivesMarginals) {
  std::mt19937_64 rng(oracle::test_seed() + 1);
  const auto a = oracle::random_pure_state(1, rng), b = oracle::random_pure_state(1, rng);
  const auto c = oracle::random_pure_state(1, rng);
  const ComplexVector abc{a[0] * b[0] * c[0], a[0] * b[0] * c[1], a[0] * b[1] * c[0],
                          a[0] * b[1] * c[1], a[1] * b[0] * c[0], a[1] * b[0] * c[1],
                          a[1] * b[1] * c[0], a[1] * b[1] * c[1]};
  const auto rho = to_density(PureState::normalized(abc));
  EXPECT_LT(max_abs_diff(oracle::oracle_partial_trace(rho, {1}).matrix(),
                         outer(b.amplitudes(), b.amplitudes())),
            1e-12);
  EXPECT_LT(max_abs_diff(oracle::oracle_partial_trace(rho, {0, 2}).matrix(),
                         kron(outer(a.amplitudes(), a.amplitudes()), outer(c.amplitudes(), c.amplitudes()))),
            1e-12);
}

TEST(OraclePartialTrace, AgreesWithFastPath) {
  std::mt19937_64 rng(oracle::test_seed() + 2);
  const std::vector<std::vector<std::size_t>> keeps{{0}, {1}, {2}, {3}, {0, 1}, {0, 3}, {1, 2},
                                                    {0, 2, 3}, {0, 1, 2, 3}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = oracle::random_density(4, 1 + trial % 5, rng);
    const auto& k = keeps[trial % keeps.size()];
    const auto ref = oracle::oracle_partial_trace(rho, k);
    EXPECT_LT(max_abs_diff(ref.matrix(), partial_trace(rho.matrix(), 4, k)), 1e-12);
    EXPECT_NEAR(trace(ref.matrix()).real(), 1.0, 1e-12);
  }
}

TEST(OracleThreeTangle, Baselines) {
  EXPECT_NEAR(oracle::oracle_three_tangle(make_state(StateId::ghz_plus)), 1.0, 1e-15);
  EXPECT_NEAR(oracle::oracle_three_tangle(make_state(StateId::ghz_minus)), 1.0, 1e-15);
  EXPECT_NEAR(oracle::oracle_three_tangle(make_state(StateId::w)), 0.0, 1e-15);
  EXPECT_NEAR(oracle::oracle_three_tangle(make_state(StateId::w_prime)), 0.0, 1e-15);
}

TEST(OracleThreeTangle, ProductStatesVanish) {
  std::mt19937_64 rng(oracle::test_seed() + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = oracle::random_product_state(3, rng);
    EXPECT_NEAR(oracle::oracle_three_tangle(psi), 0.0, 1e-10);
    EXPECT_NEAR(three_tangle(psi).three_tangle, 0.0, 1e-8);
  }
}

TEST(OracleThreeTangle, InvariantUnderLocalRotations) {
  std::mt19937_64 rng(oracle::test_seed() + 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = oracle::random_pure_state(3, rng);
    const auto moved = oracle::oracle_transform(psi, oracle::random_angles(rng));
    EXPECT_NEAR(oracle::oracle_three_tangle(moved), oracle::oracle_three_tangle(psi), 1e-12);
  }
}

TEST(OracleSeed, EnvironmentOverride) {
  const char* prior = std::getenv("LORENTZQI_SEED");
  const std::string saved = prior ? prior : "";
  ::setenv("LORENTZQI_SEED", "12345", 1);
  EXPECT_EQ(oracle::test_seed(), 12345u);
  ::unsetenv("LORENTZQI_SEED");
  EXPECT_EQ(oracle::test_seed(), oracle::kDefaultSeed);
  if (prior) ::setenv("LORENTZQI_SEED", saved.c_str(), 1);
}
