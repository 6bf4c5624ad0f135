#pragma once

#include <cstddef>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/montecarlo.hpp"

namespace rumor {

/// Radius returned when the cdf never exceeds u numerically.
inline constexpr index_t kInfiniteRadius = index_t{1} << 62;

/// Inverse-cdf radius: the unique k with alpha_{k-1} <= u < alpha_k
/// (alpha_{-1} = 0). Requires u in [0, 1).
index_t sample_radius(const RadiusDistribution& dist, double u);

/// Caches alpha_0..alpha_{T-1} so simulators avoid re-evaluating the cdf.
/// Immutable after construction; share freely across threads.
class RadiusSampler {
 public:
  explicit RadiusSampler(RadiusDistribution dist, std::size_t table_size = 4096);

  double alpha(index_t k) const {
    if (k < table_.size()) return table_[k];
    return saturated_ ? 1.0 : dist_.alpha(k);
  }

  index_t sample(double u) const;
  index_t operator()(RandomStream& stream) const { return sample(stream.uniform()); }

  const RadiusDistribution& distribution() const { return dist_; }

 private:
  RadiusDistribution dist_;
  std::vector<double> table_;
  bool saturated_ = false;
};

}  // namespace rumor
