#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>
#include <type_traits>
#include <vector>

#include "rumor/interval.hpp"

namespace rumor {

/// xoshiro256++ generator. Satisfies UniformRandomBitGenerator, so it plugs
/// into <random> distributions as well.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Stream for one trial: a pure function of (master seed, trial index).
RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index);

struct RunOptions {
  std::uint64_t master_seed = 42;
  /// 0 selects std::thread::hardware_concurrency(). Results never depend on it.
  unsigned workers = 0;
};

unsigned resolve_workers(unsigned requested, std::size_t reps);

/// Runs fn(trial_index, stream) for every trial and returns the results in
/// trial order. Each trial owns its stream, so the output is independent of
/// the worker count and of scheduling.
template <class Fn>
auto run_trials(std::size_t reps, const RunOptions& opts, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::size_t, RandomStream&>;
  std::vector<Result> out(reps);
  const unsigned workers = resolve_workers(opts.workers, reps);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RandomStream stream = derive_stream(opts.master_seed, i);
      out[i] = fn(i, stream);
    }
  };
  if (workers <= 1) {
    work(0, reps);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (reps + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(reps, w * chunk);
    const std::size_t end = std::min(reps, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  return out;
}

/// Bernoulli estimate with its standard error and 95% interval.
struct Estimate {
  double p_hat = 0.0;
  double std_error = 0.0;
  std::size_t reps = 0;
  Interval ci95;

  bool within(double target, double n_stderr) const;
};

Estimate make_estimate(std::uint64_t successes, std::size_t reps);

/// Throws InvalidArgument when reps < 100.
void require_min_reps(std::size_t reps);

/// Estimates P(event) from reps trials of pred(trial_index, stream) -> bool.
template <class Pred>
Estimate estimate(std::size_t reps, const RunOptions& opts, Pred&& pred) {
  require_min_reps(reps);
  auto hits = run_trials(reps, opts, [&](std::size_t i, RandomStream& s) -> std::uint8_t {
    return pred(i, s) ? 1 : 0;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return make_estimate(total, reps);
}

}  // namespace rumor
