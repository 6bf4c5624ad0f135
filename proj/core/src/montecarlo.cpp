#include "rumor/montecarlo.hpp"

#include <cmath>

#include "rumor/error.hpp"

namespace rumor {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
  // Two rounds of mixing decorrelate neighbouring (seed, index) pairs.
  std::uint64_t state = master_seed;
  const std::uint64_t a = splitmix64(state);
  state = a ^ (trial_index * 0xd1b54a32d192ed03ULL);
  return RandomStream(splitmix64(state));
}

unsigned resolve_workers(unsigned requested, std::size_t reps) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (reps < 1024) w = 1;
  return w;
}

bool Estimate::within(double target, double n_stderr) const {
  return std::abs(p_hat - target) <= n_stderr * std_error;
}

void require_min_reps(std::size_t reps) {
  if (reps < 100) throw InvalidArgument("estimate: reps must be >= 100");
}

Estimate make_estimate(std::uint64_t successes, std::size_t reps) {
  if (reps == 0) throw InvalidArgument("estimate: reps must be > 0");
  Estimate e;
  e.reps = reps;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(reps);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(reps));
  e.ci95 = {e.p_hat - 1.96 * e.std_error, e.p_hat + 1.96 * e.std_error};
  return e;
}

}  // namespace rumor
