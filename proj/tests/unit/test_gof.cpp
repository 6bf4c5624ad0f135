#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rumor/error.hpp"
#include "rumor/gof.hpp"

namespace rumor {
namespace {

std::vector<index_t> geometric_sample(double r, std::size_t n, std::uint64_t seed) {
  RandomStream s(seed);
  std::geometric_distribution<index_t> g(r);
  std::vector<index_t> out(n);
  for (auto& x : out) x = g(s) + 1;
  return out;
}

TEST(ChiSquare, HandCase) {
  const std::vector<std::uint64_t> obs{10, 20, 30};
  const std::vector<double> p{1.0 / 3, 1.0 / 3, 1.0 / 3};
  const GofReport r = chi_square_gof("hand", obs, p);
  EXPECT_NEAR(r.statistic, 10.0, 1e-12);
  EXPECT_EQ(r.dof, 2u);
  EXPECT_NEAR(r.pvalue, std::exp(-5.0), 1e-12);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.sample_size, 60u);
}

TEST(ChiSquare, MergesSmallBuckets) {
  // Expected counts 50, 30, 16, 2, 2: the last two merge into the third.
  const std::vector<std::uint64_t> obs{50, 30, 16, 2, 2};
  const std::vector<double> p{0.5, 0.3, 0.16, 0.02, 0.02};
  const GofReport r = chi_square_gof("merge", obs, p);
  EXPECT_EQ(r.dof, 2u);
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(ChiSquare, ImpossibleCategory) {
  const std::vector<std::uint64_t> obs{50, 50, 1};
  const std::vector<double> p{0.5, 0.5, 0.0};
  const GofReport r = chi_square_gof("zero", obs, p);
  EXPECT_TRUE(std::isinf(r.statistic));
  EXPECT_EQ(r.pvalue, 0.0);
  EXPECT_FALSE(r.pass);
}

TEST(ChiSquare, Errors) {
  const std::vector<std::uint64_t> obs{3, 3};
  EXPECT_THROW(chi_square_gof("x", obs, std::vector<double>{0.5, 0.5}), InvalidArgument);
  EXPECT_THROW(chi_square_gof("x", obs, std::vector<double>{0.5, 0.4}), InvalidArgument);
  EXPECT_THROW(chi_square_gof("x", obs, std::vector<double>{1.0}), InvalidArgument);
}

TEST(Kolmogorov, MatchesAlternatingSeries) {
  for (double lambda = 0.3; lambda <= 3.0; lambda += 0.05) {
    double s = 0.0;
    for (int k = 1; k <= 400; ++k) {
      s += (k % 2 ? 2.0 : -2.0) * std::exp(-2.0 * k * k * lambda * lambda);
    }
    EXPECT_NEAR(kolmogorov_survival(lambda), s, 1e-12) << lambda;
  }
  EXPECT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_survival(1.6276), 0.01, 1e-4);
  EXPECT_EQ(kolmogorov_survival(0.0), 1.0);
  EXPECT_NEAR(kolmogorov_survival(0.1), 1.0, 1e-15);
}

TEST(Ks, NormalSamplePasses) {
  RandomStream s(12);
  std::normal_distribution<double> nd;
  std::vector<double> z(5000);
  for (auto& x : z) x = nd(s);
  EXPECT_TRUE(ks_standard_normal("normal", z).pass);
  for (auto& x : z) x += 0.2;
  EXPECT_FALSE(ks_standard_normal("shifted", z).pass);
}

TEST(Geometric, PassFailAndDegenerate) {
  const auto sample = geometric_sample(0.4, 100'000, 1);
  const GofReport ok = gof_geometric(sample, 0.4);
  EXPECT_TRUE(ok.pass) << ok.pvalue;
  EXPECT_FALSE(gof_geometric(sample, 0.6).pass);
  EXPECT_FALSE(gof_geometric(sample, 0.2).pass);
  const std::vector<index_t> ones(20'000, 1);
  EXPECT_FALSE(gof_geometric(ones, 0.4).pass);
}

TEST(Geometric, Errors) {
  const auto small = geometric_sample(0.4, 9'999, 1);
  EXPECT_THROW(gof_geometric(small, 0.4), InvalidArgument);
  const auto big = geometric_sample(0.4, 10'000, 1);
  EXPECT_THROW(gof_geometric(big, 1.0), InvalidArgument);
  EXPECT_THROW(gof_geometric(big, 0.0), InvalidArgument);
}

TEST(Homogeneity, SameAndDifferentLaws) {
  const auto a = geometric_sample(0.4, 50'000, 1);
  const auto b = geometric_sample(0.4, 50'000, 2);
  const auto c = geometric_sample(0.45, 50'000, 3);
  EXPECT_TRUE(chi_square_homogeneity("same", a, b).pass);
  EXPECT_FALSE(chi_square_homogeneity("diff", a, c).pass);
  EXPECT_THROW(chi_square_homogeneity("empty", a, std::vector<index_t>{}), InvalidArgument);
}

TEST(Clt, PowRatioPassesAndWrongMuFails) {
  const auto d = RadiusDistribution::powratio(4);
  const CltExperiment ok = clt_experiment(d, 10'000, 1000, RunOptions{42, 0});
  EXPECT_TRUE(ok.report.pass) << ok.report.pvalue;
  EXPECT_EQ(ok.z.size(), 1000u);
  const CltExperiment bad = clt_experiment(d, 10'000, 1000, RunOptions{42, 0}, ok.mu * 1.05);
  EXPECT_FALSE(bad.report.pass);
}

TEST(Clt, Refusals) {
  EXPECT_THROW(clt_experiment(RadiusDistribution::frac(2), 10'000, 1000, RunOptions{}),
               InvalidArgument);
  EXPECT_THROW(clt_experiment(parse_distribution("finite:0.5,0.3,0.2"), 10'000, 1000, RunOptions{}),
               InvalidArgument);
  EXPECT_THROW(clt_experiment(RadiusDistribution::powratio(4), 100, 1000, RunOptions{}),
               InvalidArgument);
}

}  // namespace
}  // namespace rumor
