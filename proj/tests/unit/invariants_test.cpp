#include "flagcoh/invariants.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace flagcoh {
namespace {

std::vector<std::uint64_t> random_point(std::size_t n, Rng& rng, std::uint64_t p = kDefaultPrime) {
  std::vector<std::uint64_t> x(n);
  for (auto& v : x) v = rng.below(p);
  return x;
}

class E8Invariants : public ::testing::Test {
 protected:
  RootSystem rs = RootSystem::build("E8");
  TCoordinateFrame frame = TCoordinateFrame::e8(rs);
};

TEST_F(E8Invariants, OddPowerSumsVanish) {
  Rng rng(1);
  for (unsigned j : {1U, 3U, 7U, 15U}) {
    auto oracle = power_sum_oracle(frame.canonical(), j);
    for (int trial = 0; trial < 20; ++trial) {
      EXPECT_EQ(oracle.evaluate(random_point(8, rng), kDefaultPrime), 0U) << j;
    }
  }
}

TEST_F(E8Invariants, DegreeTwoMatchesDoubleLoop) {
  auto oracle = power_sum_oracle(frame.canonical(), 2);
  ASSERT_EQ(oracle.weight_count(), 240U);
  Rng rng(2);
  const std::uint64_t p = kDefaultPrime;
  for (int trial = 0; trial < 5; ++trial) {
    auto x = random_point(8, rng);
    // sum_{k,l} x_k x_l sum_alpha a_k a_l, summed in a different order.
    std::uint64_t expected = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      for (std::size_t l = 0; l < 8; ++l) {
        std::int64_t gram = 0;
        for (const auto& form : oracle.forms()) gram += form[k] * form[l];
        std::uint64_t g = modp::reduce(Integer(static_cast<long>(gram)), p);
        expected = modp::add(expected, modp::mul(g, modp::mul(x[k], x[l], p), p), p);
      }
    }
    EXPECT_EQ(oracle.evaluate(x, p), expected);
  }
}

TEST_F(E8Invariants, EvenPowerSumsAreEven) {
  Rng rng(3);
  const std::uint64_t p = kDefaultPrime;
  for (unsigned j : {2U, 8U, 12U, 30U}) {
    auto oracle = power_sum_oracle(frame.canonical(), j);
    auto x = random_point(8, rng);
    std::vector<std::uint64_t> minus;
    for (auto v : x) minus.push_back(modp::neg(v, p));
    EXPECT_EQ(oracle.evaluate(x, p), oracle.evaluate(minus, p));
  }
}

TEST_F(E8Invariants, ExpansionAgreesWithOracle) {
  Rng rng(4);
  for (unsigned j : {2U, 8U}) {
    auto oracle = power_sum_oracle(frame.canonical(), j);
    Polynomial pj = expand_power_sum(oracle, 1'000'000);
    ASSERT_TRUE(pj.is_homogeneous());
    EXPECT_EQ(pj.degree(), j);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_point(8, rng);
      EXPECT_EQ(evaluate_mod_p(pj, x, kDefaultPrime), oracle.evaluate(x, kDefaultPrime));
    }
  }
  EXPECT_THROW(expand_power_sum(power_sum_oracle(frame.canonical(), 2), 1), CapExceeded);
}

TEST_F(E8Invariants, InvarianceOfPowerSums) {
  InvarianceOptions opts;
  opts.seed = 99;
  for (unsigned j : {2U, 8U, 30U}) {
    auto report = invariance_check(power_sum_oracle(frame.canonical(), j), opts);
    EXPECT_TRUE(report.passed) << j;
    EXPECT_EQ(report.results.size(), 8U);
    EXPECT_LT(report.bound->per_trial_log2(), -55);
  }
}

TEST_F(E8Invariants, InvarianceOfRho2AndNegativeControl) {
  const Ring& r = frame.ring();
  Polynomial rho2 = frame.elementary(2) - parse("4*t^2", r);
  InvarianceOptions opts;
  opts.seed = 5;
  EXPECT_TRUE(invariance_check(rho2, frame.canonical(), opts).passed);
  auto bad = invariance_check(rho2 + parse("t2^2", r), frame.canonical(), opts);
  EXPECT_FALSE(bad.passed);
}

TEST_F(E8Invariants, ReportIndependentOfJobs) {
  InvarianceOptions opts;
  opts.seed = 11;
  auto oracle = power_sum_oracle(frame.canonical(), 12);
  auto one = invariance_check(oracle, opts);
  opts.jobs = 3;
  auto three = invariance_check(oracle, opts);
  EXPECT_EQ(one.payload().dump(), three.payload().dump());
  EXPECT_EQ(one.parameters["representative"], kInvariantRepresentative);
}

TEST(SmallInvariants, A2RootPowerSumByHand) {
  auto rs = RootSystem::build("A2");
  auto frame = WeightFrame::fundamental(rs, CoefficientRing::rationals());
  PowerSumOracle roots(frame, rs.roots(), 2);
  // Roots +-(2,-1), +-(-1,2), +-(1,1) give 12(a^2 - a b + b^2).
  EXPECT_EQ(expand_power_sum(roots, 100), parse("12*w1^2 - 12*w1*w2 + 12*w2^2", frame.ring()));
}

TEST(SmallInvariants, ChevalleyDegrees) {
  EXPECT_EQ(chevalley_degrees(RootSystem::build("E8")), (std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30}));
  for (const char* name : {"A2", "G2"}) {
    auto rs = RootSystem::build(name);
    // The degrees reproduce the length generating function of W.
    auto lgf = length_generating_function(chevalley_degrees(rs));
    auto profile = length_profile(rs);
    ASSERT_EQ(lgf.size(), profile.size());
    for (std::size_t k = 0; k < lgf.size(); ++k) EXPECT_EQ(lgf[k], profile[k]);
  }
}

TEST(SmallInvariants, AlgebraicIndependence) {
  Rng rng(8);
  for (const char* name : {"A2", "G2"}) {
    auto rs = RootSystem::build(name);
    auto frame = WeightFrame::fundamental(rs, CoefficientRing::rationals());
    std::vector<Polynomial> basics;
    for (int d : rs.chevalley_degrees()) {
      auto oracle = power_sum_oracle(frame, static_cast<unsigned>(d));
      Polynomial p = expand_power_sum(oracle, 10000);
      ASSERT_FALSE(p.is_zero()) << name << " degree " << d;
      InvarianceOptions opts;
      EXPECT_TRUE(invariance_check(p, frame, opts).passed);
      basics.push_back(p);
    }
    EXPECT_EQ(jacobian_rank(basics, rng), 2U) << name;
    EXPECT_EQ(jacobian_rank({basics[0], basics[0] * basics[0]}, rng), 1U);
  }
}

TEST(SmallInvariants, RootPowerSumVanishesAtOddDegree) {
  // Why type A uses an orbit of omega_1: the cubic root power sum is zero.
  auto rs = RootSystem::build("A2");
  auto frame = WeightFrame::fundamental(rs, CoefficientRing::rationals());
  EXPECT_TRUE(expand_power_sum(PowerSumOracle(frame, rs.roots(), 3), 100).is_zero());
  EXPECT_FALSE(expand_power_sum(power_sum_oracle(frame, 3), 100).is_zero());
}

}  // namespace
}  // namespace flagcoh
