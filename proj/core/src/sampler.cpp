#include "rumor/sampler.hpp"

#include <algorithm>

#include "rumor/error.hpp"

namespace rumor {

namespace {

// Smallest k > lo with alpha(k) > u, given alpha(lo) <= u.
template <class Alpha>
index_t search_above(const Alpha& alpha, index_t lo, double u) {
  index_t hi = std::max<index_t>(2 * lo, lo + 1);
  while (!(alpha(hi) > u)) {
    if (hi >= kInfiniteRadius) return kInfiniteRadius;
    lo = hi;
    hi = std::min(kInfiniteRadius, 2 * hi);
  }
  while (hi - lo > 1) {
    const index_t mid = lo + (hi - lo) / 2;
    if (alpha(mid) > u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

void check_uniform(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw InvalidArgument("sample_radius: u must lie in [0,1)");
}

}  // namespace

index_t sample_radius(const RadiusDistribution& dist, double u) {
  check_uniform(u);
  if (u < dist.alpha(0)) return 0;
  return search_above([&](index_t k) { return dist.alpha(k); }, 0, u);
}

RadiusSampler::RadiusSampler(RadiusDistribution dist, std::size_t table_size)
    : dist_(std::move(dist)) {
  table_.reserve(std::max<std::size_t>(table_size, 1));
  for (std::size_t k = 0; k < std::max<std::size_t>(table_size, 1); ++k) {
    const double a = dist_.alpha(k);
    table_.push_back(a);
    if (a == 1.0) {
      saturated_ = true;
      break;
    }
  }
}

index_t RadiusSampler::sample(double u) const {
  check_uniform(u);
  if (saturated_ || u < table_.back()) {
    return static_cast<index_t>(std::upper_bound(table_.begin(), table_.end(), u) - table_.begin());
  }
  return search_above([this](index_t k) { return alpha(k); }, table_.size() - 1, u);
}

}  // namespace rumor
