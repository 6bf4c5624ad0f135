#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/interval.hpp"
#include "rumor/rational.hpp"

namespace rumor {

/// Inter-arrival law q_1..q_K of the renewal process induced by a radius
/// law, q_k = (1 - alpha_{k-1}) prod_{i<k-1} alpha_i, plus the defect mass.
struct InterArrivalLaw {
  /// q[k] for k = 0..K; q[0] is always 0.
  std::vector<double> q;
  /// Enclosure of q_inf = prod_{i>=0} alpha_i. Without tail data this is the
  /// bracket [0, prod_{i<K} alpha_i].
  Interval q_inf;
  bool q_inf_certified = false;

  std::size_t horizon() const { return q.size() - 1; }
};

InterArrivalLaw inter_arrival(const RadiusDistribution& dist, std::size_t horizon);

/// u_0..u_n of the undelayed renewal process.
struct RenewalSequence {
  std::vector<double> u;

  std::size_t size() const { return u.size(); }
  double operator[](std::size_t n) const { return u[n]; }
};

/// u_0 = 1 and u_m = sum_{k=1}^m q_k u_{m-k}. Works for double and Rational.
/// The inner sum stops at the last nonzero q_k.
template <class T>
std::vector<T> convolve_renewal(std::span<const T> q, std::size_t n) {
  std::size_t last = 0;
  for (std::size_t k = 1; k < q.size() && k <= n; ++k) {
    if (q[k] != 0) last = k;
  }
  std::vector<T> u(n + 1, T(0));
  u[0] = T(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc(0);
    const std::size_t top = m < last ? m : last;
    for (std::size_t k = 1; k <= top; ++k) acc += q[k] * u[m - k];
    u[m] = acc;
  }
  return u;
}

/// Throws InvalidArgument when n exceeds law.horizon().
RenewalSequence renewal_sequence(const InterArrivalLaw& law, std::size_t n);

/// Convenience: inter_arrival(dist, n) followed by renewal_sequence.
RenewalSequence renewal_sequence(const RadiusDistribution& dist, std::size_t n);

/// Exact q_0..q_K (q_0 = 0) for a rational pmf.
std::vector<Rational> exact_inter_arrival(std::span<const Rational> pmf, std::size_t horizon);

/// Exact u_0..u_n for a rational pmf.
std::vector<Rational> exact_renewal_sequence(std::span<const Rational> pmf, std::size_t n);

enum class RecurrenceClass { transient, null_recurrent, positive_recurrent };

std::string_view to_string(RecurrenceClass c);

struct RenewalStats {
  /// Mean inter-arrival time; +inf when infinite.
  double mu = 0.0;
  double mu_error = 0.0;
  /// nullopt when undefined (mu = inf); +inf when the second moment diverges.
  std::optional<double> sigma2;
  double sigma2_error = 0.0;
  /// nullopt when the result is horizon-limited.
  std::optional<RecurrenceClass> recurrence_class;
  double survival_prob = 0.0;
  double survival_error = 0.0;
  /// false means no tail data: mu is a partial-sum lower bound only.
  bool certified = false;
  std::size_t terms = 0;
};

/// mu = 1 + sum_{j>=1} prod_{i<j} alpha_i and sigma^2 = E[T^2] - mu^2,
/// summed until the certified remainder is below tol. Without tail data the
/// sums stop at fallback_horizon and the result is flagged uncertified.
RenewalStats mu_sigma(const RadiusDistribution& dist, double tol,
                      std::size_t fallback_horizon = 1'000'000);

/// Throws TailDataUnavailable without tail data.
RecurrenceClass classify(const RadiusDistribution& dist);

struct CertifiedValue {
  double value = 0.0;
  double error = 0.0;
  bool certified = false;
};

/// Survival probability of the firework process, 1/mu. Exactly 0 when mu is
/// proven infinite.
CertifiedValue survival_probability(const RadiusDistribution& dist, double tol);

}  // namespace rumor
