#include <gtest/gtest.h>

#include <vector>

#include "rumor/error.hpp"
#include "rumor/firework.hpp"
#include "rumor/gof.hpp"
#include "rumor/renewal.hpp"

namespace rumor {
namespace {

const RadiusDistribution kFinite = parse_distribution("finite:0.5,0.3,0.2");

TEST(FpTail, Examples) {
  EXPECT_DOUBLE_EQ(fp_tail(kFinite, 0), 0.5);
  EXPECT_DOUBLE_EQ(fp_tail(kFinite, 2), 0.225);
  EXPECT_NEAR(fp_tail(RadiusDistribution::frac(2), 10'000), 0.5, 1e-3);
}

TEST(FpTail, TableMatchesPointwise) {
  const auto table = fp_tail_table(kFinite, 20);
  ASSERT_EQ(table.size(), 21u);
  for (index_t n = 0; n <= 20; ++n) EXPECT_EQ(table[n], fp_tail(kFinite, n));
}

TEST(FpTail, MonotoneInAlpha) {
  // Pointwise smaller alpha (stochastically larger radii) never lowers P(M > n).
  const std::pair<const char*, const char*> pairs[] = {
      {"frac:c=2", "frac:c=3"},
      {"powratio:a=2", "powratio:a=4"},
      {"finite:0.5,0.3,0.2", "finite:0.4,0.3,0.3"},
      {"geomdefect:C=0.3,r=0.5", "geomdefect:C=0.6,r=0.5"},
  };
  for (const auto& [larger, smaller] : pairs) {
    const auto a = parse_distribution(larger);
    const auto b = parse_distribution(smaller);
    for (index_t k = 0; k < 500; ++k) ASSERT_LE(b.alpha(k), a.alpha(k));
    const auto ta = fp_tail_table(a, 100);
    const auto tb = fp_tail_table(b, 100);
    for (index_t n = 0; n <= 100; ++n) {
      EXPECT_GE(tb[n], ta[n] - 1e-15) << larger << " vs " << smaller << " n=" << n;
    }
  }
}

TEST(FpRange, MinFormulaExamples) {
  const std::vector<index_t> zeros{0, 0, 0};
  EXPECT_EQ(fp_range(zeros), 0u);
  const std::vector<index_t> r{2, 0, 0};
  EXPECT_EQ(fp_range(r), 2u);
  const std::vector<index_t> open{3, 0, 0};
  EXPECT_FALSE(fp_range(open));
  const std::vector<index_t> chain{1, 1, 1, 0};
  EXPECT_EQ(fp_range(chain), 3u);
}

TEST(SimulateFp, RejectsZeroHorizon) {
  const RadiusSampler s(kFinite);
  RandomStream stream(1);
  EXPECT_THROW(simulate_fp(s, 0, stream), InvalidArgument);
}

TEST(SimulateFp, TailEstimateMatchesRenewalSequence) {
  const RadiusSampler s(kFinite);
  const Estimate tail = estimate(200'000, RunOptions{11, 1}, [&](std::size_t, RandomStream& st) {
    const FpOutcome o = simulate_fp(s, 10, st);
    return !o.died() || o.m > 2;
  });
  EXPECT_TRUE(tail.within(0.225, 3.0)) << tail.p_hat << " +- " << tail.std_error;
}

TEST(SimulateFp, FrontierAgreesWithStagesPathwise) {
  for (const char* spec : {"finite:0.5,0.3,0.2", "frac:c=2", "geomdefect:C=0.5,r=0.5"}) {
    const RadiusSampler s(parse_distribution(spec));
    for (std::uint64_t i = 0; i < 10'000; ++i) {
      RandomStream a = derive_stream(5, i);
      RandomStream b = derive_stream(5, i);
      const FpOutcome x = simulate_fp(s, 200, a);
      const FpOutcome y = simulate_fp_stages(s, 200, b);
      ASSERT_EQ(x.status, y.status) << spec << " trial " << i;
      if (x.died()) ASSERT_EQ(x.m, y.m) << spec << " trial " << i;
    }
  }
}

TEST(SimulateFp, ReversedConstructionHasSameLaw) {
  for (const char* spec : {"finite:0.5,0.3,0.2", "frac:c=2"}) {
    const RadiusSampler s(parse_distribution(spec));
    const index_t horizon = 50;
    auto value = [&](const FpOutcome& o) { return o.died() ? o.m : horizon; };
    const auto fwd = run_trials(100'000, RunOptions{21, 1}, [&](std::size_t, RandomStream& st) {
      return value(simulate_fp(s, horizon, st));
    });
    const auto rev = run_trials(100'000, RunOptions{22, 1}, [&](std::size_t, RandomStream& st) {
      return value(simulate_fp_reversed(s, horizon, st));
    });
    const GofReport r = chi_square_homogeneity("reversal", fwd, rev);
    EXPECT_TRUE(r.pass) << spec << " p=" << r.pvalue;
  }
}

TEST(SimulateFp, ReachesSemantics) {
  const FpOutcome died{FpStatus::died, 3, 10};
  EXPECT_TRUE(died.reaches(3));
  EXPECT_FALSE(died.reaches(4));
  const FpOutcome alive{FpStatus::alive_at_horizon, 0, 10};
  EXPECT_TRUE(alive.reaches(9));
}

TEST(HChain, TrivialPath) {
  const RadiusSampler s(kFinite);
  RandomStream st(3);
  const HPath p = simulate_h_chain(s, 4, 4, st);
  ASSERT_EQ(p.values.size(), 1u);
  EXPECT_EQ(p.values[0], 0u);
  EXPECT_THROW(simulate_h_chain(s, 5, 4, st), InvalidArgument);
}

TEST(HChain, StepsAreIncrementOrReset) {
  const RadiusSampler s(RadiusDistribution::frac(2));
  RandomStream st(4);
  const HPath p = simulate_h_chain(s, -10, 500, st);
  EXPECT_EQ(p.at(-10), 0u);
  for (std::int64_t t = -9; t <= 500; ++t) {
    const index_t h = p.at(t);
    EXPECT_TRUE(h == 0 || h == p.at(t - 1) + 1);
    EXPECT_LE(static_cast<std::int64_t>(h), t + 10);
  }
}

TEST(HChain, MarginalIsRenewalSequence) {
  const RadiusSampler s(kFinite);
  const Estimate e = estimate(200'000, RunOptions{31, 1}, [&](std::size_t, RandomStream& st) {
    return simulate_h_chain(s, 0, 3, st).values.back() == 0;
  });
  EXPECT_TRUE(e.within(0.225, 3.0)) << e.p_hat;
}

TEST(Coupling, SharedTablePairIsMonotone) {
  const RadiusSampler s(kFinite);
  RandomStream st(9);
  const UniformTable table = make_uniform_table(-4, 30, st);
  const std::vector<HPath> paths{simulate_h_chain(s, -5, 30, table),
                                 simulate_h_chain(s, -2, 30, table)};
  for (std::int64_t t = -2; t <= 30; ++t) EXPECT_GE(paths[0].at(t), paths[1].at(t));
  const CouplingReport rep = check_monotone_coalescence(paths);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.comparisons, 33u);
}

TEST(Coupling, ManySharedTablesNeverViolate) {
  const RadiusSampler s(RadiusDistribution::frac(2));
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RandomStream st = derive_stream(13, i);
    const UniformTable table = make_uniform_table(-39, 40, st);
    std::vector<HPath> paths;
    for (std::int64_t m : {-40, -25, -10, -3, 0, 17}) paths.push_back(simulate_h_chain(s, m, 40, table));
    ASSERT_TRUE(check_monotone_coalescence(paths).pass) << i;
  }
}

TEST(Coupling, DesynchronizedTablesViolate) {
  const RadiusSampler s(kFinite);
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    RandomStream st = derive_stream(17, i);
    const std::vector<HPath> paths{simulate_h_chain(s, -5, 30, st),
                                   simulate_h_chain(s, -2, 30, st)};
    const CouplingReport rep = check_monotone_coalescence(paths);
    if (!rep.pass) {
      ++violations;
      ASSERT_TRUE(rep.first_violation);
      EXPECT_EQ(rep.first_violation->m, -5);
      EXPECT_EQ(rep.first_violation->k, -2);
    }
  }
  EXPECT_GT(violations, 0u);
}

TEST(Coupling, SinglePathPassesVacuously) {
  const RadiusSampler s(kFinite);
  RandomStream st(1);
  const std::vector<HPath> one{simulate_h_chain(s, 0, 10, st)};
  const CouplingReport rep = check_monotone_coalescence(one);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.comparisons, 0u);
}

TEST(Coupling, DetectsPlantedViolations) {
  const std::vector<HPath> mono{{0, {0, 1, 0, 1}}, {1, {0, 1, 2}}};
  const auto a = check_monotone_coalescence(mono);
  EXPECT_FALSE(a.pass);
  EXPECT_EQ(a.first_violation->kind, CouplingViolation::Kind::monotonicity);
  EXPECT_EQ(a.first_violation->t, 2);

  const std::vector<HPath> coal{{0, {0, 1, 2, 0, 1, 2}}, {2, {0, 0, 1, 0}}};
  const auto b = check_monotone_coalescence(coal);
  EXPECT_FALSE(b.pass);
  EXPECT_EQ(b.first_violation->kind, CouplingViolation::Kind::coalescence);
}

}  // namespace
}  // namespace rumor
