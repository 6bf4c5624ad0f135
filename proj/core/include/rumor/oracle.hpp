#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rumor/distribution.hpp"
#include "rumor/rational.hpp"

namespace rumor {

/// Result of an exhaustive enumeration: exact when the pmf is rational.
struct ExactProbability {
  std::optional<Rational> exact;
  double value = 0.0;

  /// "num/den" when exact, otherwise the shortest round-trip decimal.
  std::string to_string() const;
};

/// Enumeration refuses more than this many radius configurations.
inline constexpr std::uint64_t kMaxConfigurations = 100'000'000;

/// P(M > n) by summing over every (R_0, ..., R_n), with M given by the
/// min-formula. Finite support only; n <= 12.
ExactProbability enumerate_fp_tail(const RadiusDistribution& dist, index_t n);

/// P(zeta_1..zeta_k = 0^{k-1} 1 | zeta_0 = 1) over every (R_1, ..., R_k).
ExactProbability enumerate_rfp_block(const RadiusDistribution& dist, index_t k);

enum class Model { fp, rfp };

/// P(site n is ever informed), running the stage recursion (A_n for the
/// firework, B_n for the reverse firework) on every radius configuration.
ExactProbability enumerate_site_informed(const RadiusDistribution& dist, index_t n, Model model);

struct DefinitionCheck {
  std::uint64_t configurations = 0;
  std::uint64_t mismatches = 0;
};

/// Compares, configuration by configuration over (R_0, ..., R_n), the event
/// {M > n} from the min-formula with {site n+1 informed} from the A_n
/// recursion.
DefinitionCheck check_fp_definitions(const RadiusDistribution& dist, index_t n);

}  // namespace rumor
