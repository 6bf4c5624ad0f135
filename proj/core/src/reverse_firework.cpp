#include "rumor/reverse_firework.hpp"

#include <cmath>
#include <limits>

#include "rumor/error.hpp"
#include "rumor/renewal.hpp"

namespace rumor {

ZetaPath simulate_rfp(const RadiusSampler& sampler, index_t n, RandomStream& stream) {
  if (n < 1) throw InvalidArgument("simulate_rfp: n must be >= 1");
  ZetaPath path;
  path.bits.assign(n + 1, 0);
  path.bits[0] = 1;
  index_t gap = 0;
  for (index_t i = 1; i <= n; ++i) {
    if (stream.uniform() >= sampler.alpha(gap)) {
      path.bits[i] = 1;
      gap = 0;
    } else {
      ++gap;
    }
  }
  return path;
}

index_t count_spreaders(const ZetaPath& path) {
  index_t total = 0;
  for (std::size_t i = 1; i < path.bits.size(); ++i) total += path.bits[i];
  return total;
}

index_t simulate_rfp_count(const RadiusSampler& sampler, index_t n, RandomStream& stream) {
  if (n < 1) throw InvalidArgument("simulate_rfp_count: n must be >= 1");
  index_t total = 0;
  index_t gap = 0;
  for (index_t i = 1; i <= n; ++i) {
    if (stream.uniform() >= sampler.alpha(gap)) {
      ++total;
      gap = 0;
    } else {
      ++gap;
    }
  }
  return total;
}

std::optional<index_t> simulate_rfp_block(const RadiusSampler& sampler, index_t cap,
                                          RandomStream& stream) {
  const auto k_sup = sampler.distribution().support_max();
  for (index_t gap = 0; gap < cap; ++gap) {
    if (k_sup && gap >= *k_sup) return std::nullopt;
    if (stream.uniform() >= sampler.alpha(gap)) return gap + 1;
  }
  return std::nullopt;
}

std::string_view to_string(RfpRegime r) {
  return r == RfpRegime::survives ? "survives" : "dies";
}

double SpreaderLaw::mean() const {
  return regime == RfpRegime::survives ? std::numeric_limits<double>::infinity()
                                       : 1.0 / geom_param;
}

SpreaderLaw rfp_spreader_law(const RadiusDistribution& dist) {
  const Interval limit = dist.tail().product_limit;
  SpreaderLaw law;
  law.bracket = limit;
  if (limit.hi == 0.0) {
    law.regime = RfpRegime::survives;
    return law;
  }
  if (!(limit.lo > 0.0)) {
    throw TailDataUnavailable("cannot decide whether prod alpha_k vanishes for " + dist.spec());
  }
  law.regime = RfpRegime::dies;
  law.geom_param = limit.mid();
  return law;
}

RfpTotal simulate_rfp_total(const RadiusSampler& sampler, RandomStream& stream, index_t cap,
                            double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("simulate_rfp_total: eps must be > 0");
  const TailData& tail = sampler.distribution().tail();
  RfpTotal out;
  out.n_total = 1;
  index_t gap = 0;
  // The stopping bound is re-evaluated each time the gap doubles.
  index_t next_check = 0;
  for (index_t i = 1; i <= cap; ++i) {
    if (gap >= next_check) {
      if (tail.defect_tail(gap) < eps) return out;
      next_check = gap == 0 ? 1 : 2 * gap;
    }
    if (stream.uniform() >= sampler.alpha(gap)) {
      ++out.n_total;
      gap = 0;
      next_check = 0;
    } else {
      ++gap;
    }
  }
  out.censored = true;
  return out;
}

LlnCltParams lln_clt_params(const RadiusDistribution& dist, double tol) {
  const RenewalStats st = mu_sigma(dist, tol);
  LlnCltParams p;
  p.mu = st.mu;
  if (std::isinf(st.mu)) return p;
  p.limit = 1.0 / st.mu;
  p.sigma2 = st.sigma2;
  if (st.sigma2 && std::isfinite(*st.sigma2) && *st.sigma2 > 0.0) {
    p.clt_variance = *st.sigma2 / (st.mu * st.mu * st.mu);
  }
  return p;
}

}  // namespace rumor
