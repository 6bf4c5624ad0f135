#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/interval.hpp"
#include "rumor/montecarlo.hpp"
#include "rumor/sampler.hpp"

namespace rumor {

/// Spreader indicators zeta_0..zeta_n, with zeta_0 = 1.
struct ZetaPath {
  std::vector<std::uint8_t> bits;

  index_t n() const { return bits.size() - 1; }
};

/// zeta_i = 1 iff U_i >= alpha_g, where g counts the zeros since the last 1.
/// Equivalently R_i > g: some spreader lies in {i - R_i, ..., i - 1}.
ZetaPath simulate_rfp(const RadiusSampler& sampler, index_t n, RandomStream& stream);

/// N(n) = zeta_1 + ... + zeta_n (site 0 excluded).
index_t count_spreaders(const ZetaPath& path);

/// N(n) without storing the path; consumes the stream exactly as simulate_rfp.
index_t simulate_rfp_count(const RadiusSampler& sampler, index_t n, RandomStream& stream);

/// Length of the block 0^{k-1} 1 following a spreader, or nullopt when no
/// further spreader appears (the gap reached `cap`, or no 1 is possible).
std::optional<index_t> simulate_rfp_block(const RadiusSampler& sampler, index_t cap,
                                          RandomStream& stream);

enum class RfpRegime { survives, dies };

std::string_view to_string(RfpRegime r);

struct SpreaderLaw {
  RfpRegime regime = RfpRegime::survives;
  /// prod alpha_k, the success probability of the geometric law of N.
  double geom_param = 0.0;
  Interval bracket;

  /// E[N] = 1 / geom_param; +inf when the process survives.
  double mean() const;
};

/// Throws TailDataUnavailable without tail data, or when the enclosure of
/// prod alpha_k straddles 0.
SpreaderLaw rfp_spreader_law(const RadiusDistribution& dist);

struct RfpTotal {
  /// Total number of spreaders, site 0 included.
  index_t n_total = 0;
  bool censored = false;
};

/// Simulates N = |union B_i|. Stops once the chance of any further spreader,
/// bounded by sum_{k>=g} (1 - alpha_k), drops below eps; censored if the
/// run reaches `cap` sites first. Requires tail data.
RfpTotal simulate_rfp_total(const RadiusSampler& sampler, RandomStream& stream,
                            index_t cap = 100'000'000, double eps = 1e-6);

struct LlnCltParams {
  /// Limit of N(n)/n: 1/mu, or 0 when mu is infinite.
  double limit = 0.0;
  /// sigma^2 / mu^3 when 0 < sigma^2 < inf.
  std::optional<double> clt_variance;
  double mu = 0.0;
  std::optional<double> sigma2;
};

LlnCltParams lln_clt_params(const RadiusDistribution& dist, double tol = 1e-9);

}  // namespace rumor
