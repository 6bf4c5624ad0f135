#include "rumor/renewal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rumor/error.hpp"

namespace rumor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxTerms = 100'000'000;

RenewalStats uncertified_stats(const RadiusDistribution& dist, std::size_t horizon) {
  RenewalStats st;
  double p = 1.0;
  double s = 1.0;
  double e2 = 1.0;
  for (std::size_t j = 1; j < horizon; ++j) {
    p *= dist.alpha(j - 1);
    s += p;
    e2 += (2.0 * static_cast<double>(j) + 1.0) * p;
    if (p == 0.0) break;
  }
  st.mu = s;
  st.mu_error = kInf;
  st.sigma2 = e2 - s * s;
  st.sigma2_error = kInf;
  st.survival_prob = 1.0 / s;
  st.survival_error = kInf;
  st.terms = horizon;
  return st;
}

}  // namespace

InterArrivalLaw inter_arrival(const RadiusDistribution& dist, std::size_t horizon) {
  if (horizon < 1) throw InvalidArgument("inter_arrival: horizon must be >= 1");
  InterArrivalLaw law;
  law.q.assign(horizon + 1, 0.0);
  double p = 1.0;
  const auto k_sup = dist.support_max();
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (k_sup && k - 1 >= *k_sup) break;
    law.q[k] = dist.defect(k - 1) * p;
    p *= dist.alpha(k - 1);
  }
  if (dist.has_tail_data()) {
    law.q_inf = dist.tail().product_limit;
    law.q_inf_certified = true;
  } else {
    law.q_inf = {0.0, p};
  }
  return law;
}

RenewalSequence renewal_sequence(const InterArrivalLaw& law, std::size_t n) {
  if (n > law.horizon()) {
    throw InvalidArgument("renewal_sequence: n = " + std::to_string(n) +
                          " exceeds the inter-arrival horizon " + std::to_string(law.horizon()));
  }
  return {convolve_renewal<double>(law.q, n)};
}

RenewalSequence renewal_sequence(const RadiusDistribution& dist, std::size_t n) {
  return renewal_sequence(inter_arrival(dist, std::max<std::size_t>(n, 1)), n);
}

std::vector<Rational> exact_inter_arrival(std::span<const Rational> pmf, std::size_t horizon) {
  std::vector<Rational> q(horizon + 1, Rational(0));
  Rational cdf = 0;
  Rational running = 1;
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (k - 1 < pmf.size()) cdf += pmf[k - 1];
    const Rational alpha = k - 1 < pmf.size() ? cdf : Rational(1);
    q[k] = (1 - alpha) * running;
    running *= alpha;
  }
  return q;
}

std::vector<Rational> exact_renewal_sequence(std::span<const Rational> pmf, std::size_t n) {
  const auto q = exact_inter_arrival(pmf, std::max<std::size_t>(n, 1));
  return convolve_renewal<Rational>(q, n);
}

std::string_view to_string(RecurrenceClass c) {
  switch (c) {
    case RecurrenceClass::transient:
      return "transient";
    case RecurrenceClass::null_recurrent:
      return "null_recurrent";
    case RecurrenceClass::positive_recurrent:
      return "positive_recurrent";
  }
  return "unknown";
}

RenewalStats mu_sigma(const RadiusDistribution& dist, double tol, std::size_t fallback_horizon) {
  if (!(tol > 0.0)) throw InvalidArgument("mu_sigma: tol must be > 0");
  if (!dist.has_tail_data()) return uncertified_stats(dist, fallback_horizon);

  const TailData& tail = dist.tail();
  RenewalStats st;
  st.certified = true;
  if (tail.product_limit.lo > 0.0) {
    // T = inf with positive probability.
    st.mu = kInf;
    st.recurrence_class = RecurrenceClass::transient;
    return st;
  }
  if (tail.product_limit.hi > 0.0) {
    throw TailDataUnavailable("cannot decide whether prod alpha_i vanishes for " + dist.spec());
  }

  // Invariant at the top of the loop: p = P_J, s = sum_{j<J} P_j,
  // w = sum_{j<J} (2j+1) P_j.
  double p = dist.alpha(0);
  double s = 1.0;
  double w = 1.0;
  bool second_moment_diverges = false;
  Interval rem{};
  Interval wrem{};
  std::size_t J = 1;
  bool converged = false;
  for (; J < kMaxTerms; ++J) {
    rem = tail.remainder(J, p);
    if (rem.is_infinite()) {
      st.mu = kInf;
      st.recurrence_class = RecurrenceClass::null_recurrent;
      st.terms = J;
      return st;
    }
    const double mu_est = s + rem.mid();
    const double mu_err = rem.radius() + static_cast<double>(J) * kEps * mu_est;
    bool mu_ok = mu_err <= 0.25 * tol / mu_est;
    bool w_ok = true;
    if (!second_moment_diverges) {
      wrem = tail.weighted_remainder(J, p);
      if (wrem.is_infinite()) {
        second_moment_diverges = true;
      } else {
        const double e2 = w + wrem.mid();
        w_ok = wrem.radius() + static_cast<double>(J) * kEps * e2 <= 0.25 * tol;
      }
    }
    if (mu_ok && w_ok) {
      converged = true;
      break;
    }
    s += p;
    w += (2.0 * static_cast<double>(J) + 1.0) * p;
    p *= dist.alpha(J);
  }

  st.terms = J;
  st.certified = converged;
  st.recurrence_class = RecurrenceClass::positive_recurrent;
  st.mu = s + rem.mid();
  st.mu_error = rem.radius() + static_cast<double>(J) * kEps * st.mu;
  st.survival_prob = 1.0 / st.mu;
  st.survival_error = st.mu_error / (st.mu * (st.mu - st.mu_error));
  if (second_moment_diverges) {
    st.sigma2 = kInf;
  } else {
    const double e2 = w + wrem.mid();
    const double e2_err = wrem.radius() + static_cast<double>(J) * kEps * e2;
    st.sigma2 = e2 - st.mu * st.mu;
    st.sigma2_error = e2_err + 2.0 * st.mu * st.mu_error + st.mu_error * st.mu_error;
  }
  return st;
}

RecurrenceClass classify(const RadiusDistribution& dist) {
  const TailData& tail = dist.tail();
  if (tail.product_limit.lo > 0.0) return RecurrenceClass::transient;
  if (tail.product_limit.hi > 0.0) {
    throw TailDataUnavailable("cannot decide whether prod alpha_i vanishes for " + dist.spec());
  }
  return tail.remainder(1, dist.alpha(0)).is_infinite() ? RecurrenceClass::null_recurrent
                                                          : RecurrenceClass::positive_recurrent;
}

CertifiedValue survival_probability(const RadiusDistribution& dist, double tol) {
  const RenewalStats st = mu_sigma(dist, tol);
  if (std::isinf(st.mu)) return {0.0, 0.0, st.certified};
  return {st.survival_prob, st.survival_error, st.certified};
}

}  // namespace rumor
