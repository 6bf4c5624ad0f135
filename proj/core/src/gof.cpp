#include "rumor/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "rumor/error.hpp"
#include "rumor/reverse_firework.hpp"
#include "rumor/sampler.hpp"

namespace rumor {

namespace {

constexpr double kMinExpected = 5.0;

double chi_square_pvalue(double stat, std::size_t dof) {
  if (!std::isfinite(stat)) return 0.0;
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

GofReport finish(std::string name, double stat, std::size_t dof, std::size_t n) {
  GofReport r;
  r.name = std::move(name);
  r.statistic = stat;
  r.dof = dof;
  r.sample_size = n;
  r.pvalue = chi_square_pvalue(stat, dof);
  r.pass = r.pvalue > kSignificance;
  return r;
}

}  // namespace

GofReport chi_square_gof(std::string name, std::span<const std::uint64_t> observed,
                         std::span<const double> probs) {
  if (observed.size() != probs.size()) throw InvalidArgument("chi_square_gof: length mismatch");
  const double total_p = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total_p - 1.0) > 1e-9) {
    throw InvalidArgument("chi_square_gof: probabilities sum to " + std::to_string(total_p));
  }
  const std::uint64_t n = std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
  if (n == 0) throw InvalidArgument("chi_square_gof: no observations");

  std::vector<double> obs;
  std::vector<double> exp;
  double carry_o = 0.0;
  double carry_e = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) throw InvalidArgument("chi_square_gof: negative probability");
    if (probs[i] == 0.0) {
      if (observed[i] > 0) {
        return finish(std::move(name), std::numeric_limits<double>::infinity(), 1, n);
      }
      continue;
    }
    carry_o += static_cast<double>(observed[i]);
    carry_e += probs[i] * static_cast<double>(n);
    if (carry_e >= kMinExpected) {
      obs.push_back(carry_o);
      exp.push_back(carry_e);
      carry_o = carry_e = 0.0;
    }
  }
  if (carry_e > 0.0 || carry_o > 0.0) {
    if (obs.empty()) {
      obs.push_back(carry_o);
      exp.push_back(carry_e);
    } else {
      obs.back() += carry_o;
      exp.back() += carry_e;
    }
  }
  if (obs.size() < 2) {
    throw InvalidArgument("chi_square_gof: fewer than two buckets with expected count >= 5");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double d = obs[i] - exp[i];
    stat += d * d / exp[i];
  }
  return finish(std::move(name), stat, obs.size() - 1, n);
}

GofReport gof_geometric(std::span<const index_t> samples, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("gof_geometric: r must lie in (0,1)");
  if (samples.size() < 10'000) throw InvalidArgument("gof_geometric: need at least 10^4 samples");
  const double n = static_cast<double>(samples.size());
  // Categories 1..K individually, then N > K pooled.
  std::size_t K = 1;
  while (n * r * std::pow(1.0 - r, static_cast<double>(K)) >= kMinExpected) ++K;
  std::vector<std::uint64_t> observed(K + 2, 0);
  std::vector<double> probs(K + 2, 0.0);
  for (index_t s : samples) observed[std::min<index_t>(s, K + 1)]++;
  for (std::size_t k = 1; k <= K; ++k) {
    probs[k] = r * std::pow(1.0 - r, static_cast<double>(k - 1));
  }
  probs[K + 1] = std::pow(1.0 - r, static_cast<double>(K));
  return chi_square_gof("geometric(r=" + std::to_string(r) + ")", observed, probs);
}

GofReport chi_square_homogeneity(std::string name, std::span<const index_t> a,
                                 std::span<const index_t> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("chi_square_homogeneity: empty sample");
  std::map<index_t, std::pair<double, double>> counts;
  for (index_t v : a) counts[v].first += 1.0;
  for (index_t v : b) counts[v].second += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double fa = na / (na + nb);
  const double fb = nb / (na + nb);

  std::vector<std::pair<double, double>> buckets;
  std::pair<double, double> carry{0.0, 0.0};
  for (const auto& [value, c] : counts) {
    carry.first += c.first;
    carry.second += c.second;
    const double pooled = carry.first + carry.second;
    if (pooled * fa >= kMinExpected && pooled * fb >= kMinExpected) {
      buckets.push_back(carry);
      carry = {0.0, 0.0};
    }
  }
  if (carry.first + carry.second > 0.0) {
    if (buckets.empty()) {
      buckets.push_back(carry);
    } else {
      buckets.back().first += carry.first;
      buckets.back().second += carry.second;
    }
  }
  if (buckets.size() < 2) {
    throw InvalidArgument("chi_square_homogeneity: fewer than two buckets with expected count >= 5");
  }
  double stat = 0.0;
  for (const auto& [oa, ob] : buckets) {
    const double pooled = oa + ob;
    const double ea = pooled * fa;
    const double eb = pooled * fb;
    stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  return finish(std::move(name), stat, buckets.size() - 1, a.size() + b.size());
}

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  if (lambda < 1.0) {
    // Jacobi-theta form; the alternating series converges slowly here.
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double s = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double m = 2.0 * k - 1.0;
      s += std::exp(-m * m * c);
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * s, 0.0, 1.0);
  }
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    s += (k % 2 == 1) ? term : -term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * s, 0.0, 1.0);
}

GofReport ks_standard_normal(std::string name, std::vector<double> z) {
  if (z.empty()) throw InvalidArgument("ks_standard_normal: empty sample");
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = 0.5 * std::erfc(-z[i] / std::numbers::sqrt2);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  const double rn = std::sqrt(n);
  GofReport r;
  r.name = std::move(name);
  r.statistic = d;
  r.sample_size = z.size();
  r.pvalue = kolmogorov_survival((rn + 0.12 + 0.11 / rn) * d);
  r.pass = r.pvalue > kSignificance;
  return r;
}

CltExperiment clt_experiment(const RadiusDistribution& dist, index_t n, std::size_t reps,
                             const RunOptions& opts, std::optional<double> mu_override) {
  if (n < 10'000) throw InvalidArgument("clt_experiment: n must be >= 10^4");
  if (reps < 1'000) throw InvalidArgument("clt_experiment: reps must be >= 10^3");
  const LlnCltParams params = lln_clt_params(dist);
  if (!params.clt_variance) {
    throw InvalidArgument("clt_experiment: sigma^2 is infinite or undefined for " + dist.spec() +
                          "; only the law of large numbers applies");
  }
  CltExperiment out;
  out.mu = mu_override.value_or(params.mu);
  out.sigma2 = *params.sigma2;
  const double nd = static_cast<double>(n);
  const double center = nd / out.mu;
  const double scale = std::sqrt(nd * out.sigma2 / (out.mu * out.mu * out.mu));

  const RadiusSampler sampler(dist);
  out.z = run_trials(reps, opts, [&](std::size_t, RandomStream& s) {
    return (static_cast<double>(simulate_rfp_count(sampler, n, s)) - center) / scale;
  });
  out.report = ks_standard_normal("clt(" + dist.spec() + ")", out.z);
  return out;
}

}  // namespace rumor
