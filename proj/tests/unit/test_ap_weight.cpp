#include <gtest/gtest.h>

#include <cmath>

#include "mrlab/ap_weight.hpp"
#include "mrlab/weight.hpp"
#include "oracles.hpp"

namespace mrlab {
namespace {

std::function<Weight(const Grid&)> power_weight(double a) {
  return [a](const Grid& g) { return Weight::power(g, {a}); };
}

TEST(ApWeight, ConstantWeightIsOne) {
  for (const Grid& g : {Grid({1.0}, {64}), Grid({1.0, 2.0}, {16, 32})}) {
    const Weight w = Weight::constant(g);
    for (double p : {1.5, 2.0, 4.0}) EXPECT_DOUBLE_EQ(ap_constant(w, p, default_cube_family(g)), 1.0);
  }
}

TEST(ApWeight, MatchesBruteForceDyadicSup) {
  for (double a : {0.5, -0.5, 1.5}) {
    for (std::size_t m : {64u, 256u}) {
      const Grid g({1.0}, {m});
      const double got = ap_constant(Weight::power(g, {a}), 2.0, default_cube_family(g));
      EXPECT_NEAR(got, oracle::dyadic_a2_power(a, 1.0, m), 1e-12 * got);
    }
  }
}

TEST(ApWeight, SquareRootWeightPinned) {
  // Frozen from oracle::dyadic_a2_power(0.5, 1, 1024).
  const Grid g({1.0}, {1024});
  const double got = ap_constant(Weight::power(g, {0.5}), 2.0, default_cube_family(g));
  EXPECT_NEAR(got, 1.3155216031868444, 1e-12);
  // The cube [0, r] gives (2/3)(2) = 4/3 in the continuum; the discrete values approach it from below.
  EXPECT_LT(got, 4.0 / 3.0);
}

TEST(ApWeight, LadderVerdicts) {
  const Grid coarse({1.0}, {64});
  for (double a : {-0.5, 0.0, 0.5}) {
    EXPECT_EQ(classify_ladder(ap_refinement_ladder(power_weight(a), coarse, 2.0, 5)), ApVerdict::stable) << a;
  }
  for (double a : {1.1, 1.5}) {
    const auto ladder = ap_refinement_ladder(power_weight(a), coarse, 2.0, 5);
    EXPECT_EQ(classify_ladder(ladder), ApVerdict::growing) << a;
    for (std::size_t i = 1; i < ladder.size(); ++i) EXPECT_GT(ladder[i].constant, ladder[i - 1].constant);
  }
}

TEST(ApWeight, FixedCubeGrowsUnderRefinementOutsideA2) {
  // The 4-point cube at the origin looks the same at every resolution, so the
  // growth is tracked on a fixed physical cube size as the grid refines.
  double previous = 0.0;
  for (std::size_t m : {64u, 128u, 256u, 512u, 1024u}) {
    const Grid g({1.0}, {m});
    const auto profile = ap_profile(Weight::power(g, {1.5}), 2.0);
    ASSERT_EQ(profile.size(), static_cast<std::size_t>(dyadic_generation_count(g)));
    EXPECT_GT(profile[3].constant, previous);
    previous = profile[3].constant;
  }
}

TEST(ApWeight, RejectsDegenerateCubes) {
  const Grid g({1.0}, {16});
  const Weight w = Weight::constant(g);
  EXPECT_THROW(ap_cube_value(w, 2.0, IndexCube{{0}, {1}}), std::invalid_argument);
  EXPECT_THROW(ap_cube_value(w, 2.0, IndexCube{{12}, {8}}), std::invalid_argument);
  EXPECT_THROW(ap_cube_value(w, 1.0, IndexCube{{0}, {4}}), std::invalid_argument);
}

}  // namespace
}  // namespace mrlab
