#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rumor/bounds.hpp"
#include "rumor/error.hpp"
#include "rumor/renewal.hpp"

namespace rumor {
namespace {

TEST(TailBound, ExponentialValues) {
  const BoundParams p{0.5, 0.5, 2.0, 0.0};
  EXPECT_NEAR(tail_bound(BoundVariant::exponential, p, 1), 2.0 * std::exp(0.5) * 0.5, 1e-14);
  EXPECT_NEAR(tail_bound(BoundVariant::exponential, p, 1), 1.64872, 1e-5);
  EXPECT_DOUBLE_EQ(tail_bound(BoundVariant::exponential, p, 0), 2.0);
}

TEST(TailBound, RegVarValue) {
  BoundParams p;
  p.alpha = 0.75;
  EXPECT_NEAR(tail_bound(BoundVariant::regvar, p, 10'000), 0.1, 1e-14);
}

TEST(TailBound, ParameterRanges) {
  EXPECT_THROW(tail_bound(BoundVariant::exponential, {0.5, 0.7, 2, 0}, 1), InvalidArgument);
  EXPECT_THROW(tail_bound(BoundVariant::exponential, {1.0, 0.1, 2, 0}, 1), InvalidArgument);
  EXPECT_THROW(tail_bound(BoundVariant::polylog, {0.5, 0.5, 1.0, 0}, 2), InvalidArgument);
  EXPECT_THROW(tail_bound(BoundVariant::harmonic, {1.2, 0.5, 2, 0}, 2), InvalidArgument);
  EXPECT_THROW(tail_bound(BoundVariant::regvar, {0.5, 0.5, 0.4, 0}, 2), InvalidArgument);
  EXPECT_THROW(tail_bound(BoundVariant::polylog, {0.5, 0.5, 2.0, 1.0}, 1), InvalidArgument);
}

TEST(TailBound, SequenceMarksUndefinedPrefix) {
  const auto b = tail_bound_sequence(BoundVariant::polylog, {0.5, 0.5, 2.0, 1.0}, 5);
  EXPECT_TRUE(std::isnan(b[0]));
  EXPECT_TRUE(std::isnan(b[1]));
  EXPECT_NEAR(b[2], std::log(2.0) / 4.0, 1e-15);
}

TEST(VariantNames, RoundTrip) {
  for (auto v : {BoundVariant::exponential, BoundVariant::polylog, BoundVariant::harmonic,
                 BoundVariant::regvar}) {
    EXPECT_EQ(parse_bound_variant(to_string(v)), v);
  }
  EXPECT_FALSE(parse_bound_variant("nope"));
}

TEST(HarmonicVerdict, Threshold) {
  EXPECT_TRUE(harmonic_verdict_applies(0.3));
  EXPECT_FALSE(harmonic_verdict_applies(0.5));
}

TEST(VerifyBound, ExponentialDominatesGeomDefect) {
  const auto u = renewal_sequence(parse_distribution("geomdefect:C=0.5,r=0.5"), 2000);
  const auto b = tail_bound_sequence(BoundVariant::exponential, {0.5, 0.5, 2, 0}, 2000);
  for (std::size_t k = 0; k <= 2000; ++k) ASSERT_LE(u[k], b[k]) << k;
  const auto rep = verify_bound(u.u, b, 1);
  EXPECT_TRUE(rep.dominated);
  EXPECT_LE(rep.max_ratio, 1.0);
}

TEST(VerifyBound, ConstantBoundOne) {
  const auto u = renewal_sequence(RadiusDistribution::frac(2), 1000);
  const std::vector<double> one(1001, 1.0);
  const auto rep = verify_bound(u.u, one, 1);
  EXPECT_TRUE(rep.dominated);
  EXPECT_NEAR(rep.max_ratio, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(rep.arg_max, 1u);
}

TEST(VerifyBound, ShapeChecksPerVariant) {
  constexpr std::size_t K = 10'000;
  struct Case {
    const char* dist;
    BoundVariant v;
    BoundParams p;
  };
  const Case cases[] = {
      {"polydefect:C=0.5,a=2", BoundVariant::polylog, {0.5, 0.5, 2.0, 0.0}},
      {"harmonic:r=0.3", BoundVariant::harmonic, {0.3, 0.5, 2.0, 0.0}},
      {"powratio:a=0.75", BoundVariant::regvar, {0.5, 0.5, 0.75, 0.0}},
  };
  for (const Case& c : cases) {
    const auto u = renewal_sequence(parse_distribution(c.dist), K);
    const auto b = tail_bound_sequence(c.v, c.p, K);
    const auto rep = verify_bound(u.u, b, bound_min_index(c.v));
    EXPECT_TRUE(rep.pass) << c.dist;
    EXPECT_TRUE(std::isfinite(rep.max_ratio)) << c.dist;
    EXPECT_TRUE(rep.tail_nonincreasing) << c.dist;
  }
}

TEST(VerifyBound, DefectSequenceAsBound) {
  // u_k / (1 - alpha_k) stays bounded for a summable polynomial defect.
  const auto d = parse_distribution("polydefect:C=0.5,a=2");
  const auto u = renewal_sequence(d, 10'000);
  std::vector<double> b(10'001);
  for (std::size_t k = 0; k <= 10'000; ++k) b[k] = d.defect(k);
  const auto rep = verify_bound(u.u, b, 1);
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.constant_estimate, 0.0);
}

TEST(VerifyBound, GrowingRatioFails) {
  // A bound decaying faster than u cannot pass.
  const auto u = renewal_sequence(RadiusDistribution::frac(2), 1000);
  std::vector<double> b(1001);
  for (std::size_t k = 0; k <= 1000; ++k) b[k] = std::pow(0.99, static_cast<double>(k));
  EXPECT_FALSE(verify_bound(u.u, b, 1).pass);
}

TEST(VerifyBound, Errors) {
  const std::vector<double> a(10, 0.5);
  const std::vector<double> b(9, 0.5);
  EXPECT_THROW(verify_bound(a, b, 1), InvalidArgument);
  EXPECT_THROW(verify_bound(a, a, 0), InvalidArgument);
  EXPECT_THROW(verify_bound(a, a, 10), InvalidArgument);
}

}  // namespace
}  // namespace rumor
