#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/montecarlo.hpp"

namespace rumor {

inline constexpr double kSignificance = 0.01;

struct GofReport {
  std::string name;
  double statistic = 0.0;
  double pvalue = 0.0;
  /// Degrees of freedom for chi-square tests, 0 for KS.
  std::size_t dof = 0;
  std::size_t sample_size = 0;
  /// pvalue > kSignificance.
  bool pass = false;
};

/// Pearson chi-square of observed category counts against probabilities
/// (which must sum to 1). Adjacent categories are merged until every
/// expected count is at least 5. A positive count in a zero-probability
/// category gives statistic = inf and pvalue = 0. Throws InvalidArgument if
/// fewer than two buckets survive merging.
GofReport chi_square_gof(std::string name, std::span<const std::uint64_t> observed,
                         std::span<const double> probs);

/// Chi-square of samples against P(N = k) = r (1-r)^(k-1), k >= 1, with the
/// tail pooled into one bucket. Requires at least 10^4 samples, r in (0,1).
GofReport gof_geometric(std::span<const index_t> samples, double r);

/// Two-sample chi-square homogeneity test on integer-valued samples;
/// values are pooled into adjacent buckets with expected counts >= 5 in
/// both samples.
GofReport chi_square_homogeneity(std::string name, std::span<const index_t> a,
                                 std::span<const index_t> b);

/// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

/// One-sample KS test against N(0,1) using the asymptotic p-value with the
/// (sqrt(n) + 0.12 + 0.11/sqrt(n)) small-sample correction.
GofReport ks_standard_normal(std::string name, std::vector<double> z);

struct CltExperiment {
  GofReport report;
  std::vector<double> z;
  double mu = 0.0;
  double sigma2 = 0.0;
};

/// Standardizes reps replicates of N(n) as (N(n) - n/mu) / sqrt(n sigma^2 / mu^3)
/// and KS-tests them against N(0,1). Refuses laws without 0 < sigma^2 < inf.
/// mu_override replaces mu in the standardization (negative controls).
CltExperiment clt_experiment(const RadiusDistribution& dist, index_t n, std::size_t reps,
                             const RunOptions& opts, std::optional<double> mu_override = {});

}  // namespace rumor
