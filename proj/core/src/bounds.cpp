#include "rumor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rumor/error.hpp"

namespace rumor {

std::string_view to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::exponential:
      return "exp";
    case BoundVariant::polylog:
      return "polylog";
    case BoundVariant::harmonic:
      return "harmonic";
    case BoundVariant::regvar:
      return "regvar";
  }
  return "exp";
}

std::optional<BoundVariant> parse_bound_variant(std::string_view name) {
  if (name == "exp") return BoundVariant::exponential;
  if (name == "polylog") return BoundVariant::polylog;
  if (name == "harmonic") return BoundVariant::harmonic;
  if (name == "regvar") return BoundVariant::regvar;
  return std::nullopt;
}

void validate_bound_params(BoundVariant v, const BoundParams& p) {
  switch (v) {
    case BoundVariant::exponential:
      if (!(p.r > 0.0 && p.r < 1.0)) throw InvalidArgument("exp bound: r must lie in (0,1)");
      if (!(p.c_r > 0.0 && p.c_r < std::log(1.0 / p.r))) {
        throw InvalidArgument("exp bound: C_r must lie in (0, log(1/r))");
      }
      return;
    case BoundVariant::polylog:
      if (!(p.alpha > 1.0)) throw InvalidArgument("polylog bound: alpha must be > 1");
      if (!std::isfinite(p.beta)) throw InvalidArgument("polylog bound: beta must be finite");
      return;
    case BoundVariant::harmonic:
      if (!(p.r > 0.0 && p.r < 1.0)) throw InvalidArgument("harmonic bound: r must lie in (0,1)");
      return;
    case BoundVariant::regvar:
      if (!(p.alpha > 0.5 && p.alpha < 1.0)) {
        throw InvalidArgument("regvar bound: alpha must lie in (1/2,1)");
      }
      return;
  }
}

std::size_t bound_min_index(BoundVariant v) {
  switch (v) {
    case BoundVariant::exponential:
      return 0;
    case BoundVariant::regvar:
      return 1;
    case BoundVariant::polylog:
    case BoundVariant::harmonic:
      return 2;
  }
  return 0;
}

double tail_bound(BoundVariant v, const BoundParams& p, std::size_t k) {
  validate_bound_params(v, p);
  if (k < bound_min_index(v)) {
    throw InvalidArgument(std::string(to_string(v)) + " bound: k must be >= " +
                          std::to_string(bound_min_index(v)));
  }
  const double x = static_cast<double>(k);
  switch (v) {
    case BoundVariant::exponential:
      return std::exp(x * (p.c_r + std::log(p.r))) / p.c_r;
    case BoundVariant::polylog:
      return std::pow(std::log(x), p.beta) * std::pow(x, -p.alpha);
    case BoundVariant::harmonic: {
      const double expo = 2.0 - (1.0 + p.r) * (1.0 + p.r);
      return std::pow(std::log(x), 3.0 + p.r) * std::pow(x, -expo);
    }
    case BoundVariant::regvar:
      return std::pow(x, -(1.0 - p.alpha));
  }
  return 0.0;
}

std::vector<double> tail_bound_sequence(BoundVariant v, const BoundParams& p, std::size_t n) {
  validate_bound_params(v, p);
  std::vector<double> out(n + 1, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t k = bound_min_index(v); k <= n; ++k) out[k] = tail_bound(v, p, k);
  return out;
}

bool harmonic_verdict_applies(double r) { return r < std::sqrt(2.0) - 1.0; }

BoundReport verify_bound(std::span<const double> u, std::span<const double> bound,
                         std::size_t k_min) {
  if (u.size() != bound.size()) throw InvalidArgument("verify_bound: length mismatch");
  if (k_min < 1) throw InvalidArgument("verify_bound: k_min must be >= 1");
  if (u.size() <= k_min) throw InvalidArgument("verify_bound: no indices at or above k_min");

  BoundReport rep;
  rep.dominated = true;
  const std::size_t last = u.size() - 1;
  const std::size_t decade = std::max(k_min, last / 10);
  rep.tail_nonincreasing = true;
  double prev = std::numeric_limits<double>::quiet_NaN();
  bool finite = true;
  for (std::size_t k = k_min; k <= last; ++k) {
    const double ratio = u[k] / bound[k];
    if (!std::isfinite(ratio)) finite = false;
    if (k == k_min || ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.arg_max = k;
    }
    if (!(u[k] <= bound[k])) rep.dominated = false;
    if (k > decade && !(ratio <= prev * (1.0 + 1e-12))) rep.tail_nonincreasing = false;
    prev = ratio;
  }
  rep.constant_estimate = u[last] / bound[last];
  if (!finite) rep.max_ratio = std::numeric_limits<double>::infinity();
  rep.pass = finite && rep.tail_nonincreasing;
  return rep;
}

}  // namespace rumor
