#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rumor/bounds.hpp"
#include "rumor/distribution.hpp"
#include "rumor/montecarlo.hpp"

namespace rumor {

/// One verdict line. Deterministic checks carry a NaN pvalue.
struct Check {
  std::string name;
  double statistic = 0.0;
  double pvalue = 0.0;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

struct SuiteConfig {
  explicit SuiteConfig(RadiusDistribution d) : dist(std::move(d)) {}

  RadiusDistribution dist;
  index_t n = 1000;
  std::size_t reps = 100'000;
  RunOptions opts;
  double tol = 1e-9;
  BoundVariant variant = BoundVariant::exponential;
  BoundParams bound_params;
};

/// Names accepted by run_suite.
const std::vector<std::string_view>& suite_names();

/// Runs lemma1 | lemma2 | crossmodel | geometric | clt | hchain | bounds.
/// Throws InvalidArgument for unknown names or unsuitable inputs.
SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg);

SuiteResult suite_lemma1(const SuiteConfig& cfg);
SuiteResult suite_lemma2(const SuiteConfig& cfg);
SuiteResult suite_crossmodel(const SuiteConfig& cfg);
SuiteResult suite_geometric(const SuiteConfig& cfg);
SuiteResult suite_clt(const SuiteConfig& cfg);
SuiteResult suite_hchain(const SuiteConfig& cfg);
SuiteResult suite_bounds(const SuiteConfig& cfg);

/// "PASS name: detail" / "FAIL name: detail", one line per check.
void print_verdicts(std::ostream& os, const SuiteResult& result);

/// CSV with columns name,statistic,pvalue,pass.
void write_verdict_csv(std::ostream& os, const SuiteResult& result);

/// Seed used for the single permitted re-run of a failed 3-stderr check.
std::uint64_t rerun_seed(std::uint64_t master_seed);

}  // namespace rumor
