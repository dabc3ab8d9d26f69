#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lorentzqi/oracle.hpp"
#include "lorentzqi/states.hpp"

using namespace lorentzqi;

TEST(MakeState, GhzPlusAmplitudes) {
  const auto s = make_state(StateId::ghz_plus);
  const double g = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(s.amplitudes(), (ComplexVector{g, 0, 0, 0, 0, 0, 0, g}));
  EXPECT_EQ(s.qubit_count(), 3u);
}

TEST(MakeState, GhzMinusAmplitudes) {
  const double g = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(make_state(StateId::ghz_minus).amplitudes(), (ComplexVector{g, 0, 0, 0, 0, 0, 0, -g}));
}

TEST(MakeState, WAndWPrimeAmplitudes) {
  const double w = 1.0 / std::sqrt(3.0);
  EXPECT_EQ(make_state(StateId::w).amplitudes(), (ComplexVector{0, w, w, 0, w, 0, 0, 0}));
  EXPECT_EQ(make_state(StateId::w_prime).amplitudes(), (ComplexVector{0, 0, 0, w, 0, w, w, 0}));
}

TEST(MakeState, UnitNormAndRealNonnegativeLeadingAmplitude) {
  for (const StateId id : kAllStates) {
    const auto s = make_state(id);
    double sum = 0.0;
    for (const auto& a : s.amplitudes()) sum += std::norm(a);
    EXPECT_NEAR(sum, 1.0, 1e-15) << to_string(id);
    const auto lead = std::find_if(s.amplitudes().begin(), s.amplitudes().end(),
                                   [](complex a) { return a != complex{}; });
    EXPECT_GT(lead->real(), 0.0);
    EXPECT_EQ(lead->imag(), 0.0);
  }
}

TEST(StateId, RoundTripsThroughText) {
  for (const StateId id : kAllStates) EXPECT_EQ(parse_state_id(to_string(id)), id);
  EXPECT_FALSE(parse_state_id("ghz").has_value());
}

TEST(PureState, RejectsBadInput) {
  EXPECT_THROW(PureState(ComplexVector{1.0, 1.0}), numeric_error);
  EXPECT_THROW(PureState(ComplexVector{1.0, 0.0, 0.0}), usage_error);
  EXPECT_THROW(PureState::normalized(ComplexVector{0.0, 0.0}), usage_error);
}

TEST(ToDensity, BasisState) {
  const auto rho = to_density(basis_state(1, 0));
  EXPECT_EQ(max_abs_diff(rho.matrix(), ComplexMatrix::diagonal({1.0, 0.0})), 0.0);
}

TEST(ToDensity, PlusStateAllHalves) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto rho = to_density(PureState({r, r}));
  for (const auto& x : rho.matrix().data()) EXPECT_NEAR(std::abs(x - 0.5), 0.0, 1e-15);
}

TEST(ToDensity, GhzCorners) {
  // Outer-product oracle: only entries (i, j) with i, j in {0, 7} are nonzero.
  const auto rho = to_density(make_state(StateId::ghz_plus)).matrix();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const bool corner = (i == 0 || i == 7) && (j == 0 || j == 7);
      EXPECT_NEAR(std::abs(rho(i, j) - (corner ? 0.5 : 0.0)), 0.0, 1e-15);
    }
}

TEST(ToDensity, RankOneSpectrumAndPurity) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = to_density(oracle::random_pure_state(3, rng));
    const auto ev = eigvals_hermitian(rho.matrix());
    EXPECT_NEAR(ev[0], 1.0, 1e-10);
    for (std::size_t k = 1; k < ev.size(); ++k) EXPECT_NEAR(ev[k], 0.0, 1e-10);
    EXPECT_NEAR(trace(rho.matrix() * rho.matrix()).real(), 1.0, 1e-12);
  }
}

TEST(ValidateDensity, Diagnostics) {
  EXPECT_TRUE(validate_density(ComplexMatrix::diagonal({0.5, 0.5})).pass);

  const auto trace_two = validate_density(ComplexMatrix::diagonal({1.0, 1.0}));
  EXPECT_FALSE(trace_two.pass);
  EXPECT_NEAR(trace_two.trace_deviation, 1.0, 1e-15);

  const auto negative = validate_density(ComplexMatrix::diagonal({1.2, -0.2}));
  EXPECT_FALSE(negative.pass);
  EXPECT_NEAR(negative.min_eigenvalue, -0.2, 1e-15);

  const auto skew = validate_density(ComplexMatrix{{0.5, 0.1}, {0.3, 0.5}});
  EXPECT_FALSE(skew.pass);
  EXPECT_NEAR(skew.hermiticity_violation, 0.2, 1e-15);
}

TEST(DensityOperator, ConstructorEnforcesInvariants) {
  EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal({1.0, 1.0})), numeric_error);
  EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal({1.2, -0.2})), numeric_error);
  EXPECT_NO_THROW(DensityOperator::maximally_mixed(3));
}
