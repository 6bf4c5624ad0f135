#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rumor/distribution.hpp"

namespace rumor {

/// Shapes of the explicit tail bounds on P(M >= k) = u_k.
enum class BoundVariant {
  exponential,  // (1/C_r) (e^{C_r} r)^k, for 1 - alpha_k <= C_r r^k
  polylog,      // (log k)^beta k^-alpha, alpha > 1 (constant unspecified)
  harmonic,     // (ln k)^{3+r} / k^{2-(1+r)^2}, 1 - alpha_k = r/k
  regvar,       // k^-(1-alpha), alpha in (1/2, 1)
};

std::string_view to_string(BoundVariant v);
std::optional<BoundVariant> parse_bound_variant(std::string_view name);

struct BoundParams {
  double r = 0.5;
  double c_r = 0.5;
  double alpha = 2.0;
  double beta = 0.0;
};

/// Throws InvalidArgument when params fall outside the variant's range.
void validate_bound_params(BoundVariant v, const BoundParams& p);

/// Smallest k at which the variant is defined (2 for the log variants).
std::size_t bound_min_index(BoundVariant v);

/// The bound evaluated at k, with unit constant for the variants whose
/// constant is unspecified.
double tail_bound(BoundVariant v, const BoundParams& p, std::size_t k);

/// bound_0..bound_n; entries below bound_min_index are NaN.
std::vector<double> tail_bound_sequence(BoundVariant v, const BoundParams& p, std::size_t n);

/// The harmonic shape only decays for r < sqrt(2) - 1; above that a verdict
/// is meaningless and only the shape is reported.
bool harmonic_verdict_applies(double r);

struct BoundReport {
  double max_ratio = 0.0;
  std::size_t arg_max = 0;
  /// u_k / bound_k is nonincreasing over the last decade [K/10, K].
  bool tail_nonincreasing = false;
  /// u_k <= bound_k for every checked k (meaningful for explicit constants).
  bool dominated = false;
  /// Ratio at the last index: an estimate of the unspecified constant.
  double constant_estimate = 0.0;
  /// Finite maximum ratio and a nonincreasing last decade.
  bool pass = false;
};

BoundReport verify_bound(std::span<const double> u, std::span<const double> bound,
                         std::size_t k_min);

}  // namespace rumor
