#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/montecarlo.hpp"
#include "rumor/sampler.hpp"

namespace rumor {

/// P(M > n) = u_{n+1}, where M is the rightmost informed site.
double fp_tail(const RadiusDistribution& dist, index_t n);

/// P(M > n) for n = 0..n_max.
std::vector<double> fp_tail_table(const RadiusDistribution& dist, index_t n_max);

enum class FpStatus { died, alive_at_horizon };

struct FpOutcome {
  FpStatus status = FpStatus::died;
  /// Rightmost informed site; meaningful only when status == died.
  index_t m = 0;
  index_t horizon = 0;

  bool died() const { return status == FpStatus::died; }
  /// Whether site n is informed (n < horizon for censored outcomes).
  bool reaches(index_t n) const { return !died() || n <= m; }
};

/// M for a given radius sequence R_0, R_1, ...: the first i with
/// max_{j<=i} (j + R_j) = i, or nullopt if the sequence runs out first.
std::optional<index_t> fp_range(std::span<const index_t> radii);

/// Frontier simulation: radii are drawn lazily in site order and
/// M = min{i : max_{j<=i} (j + R_j) <= i}. O(M) time and O(1) memory.
FpOutcome simulate_fp(const RadiusSampler& sampler, index_t horizon, RandomStream& stream);

/// Literal stage recursion A_0 = {0}, A_n = covered(A_{n-1}) minus the
/// informed set. Draws radii in the same site order as simulate_fp, so the
/// two agree pathwise on a shared stream.
FpOutcome simulate_fp_stages(const RadiusSampler& sampler, index_t horizon, RandomStream& stream);

/// The reversed construction: with U_0, U_{-1}, ... drawn in that order,
/// returns -Mbar where Mbar = max{i <= 0 : U_j < alpha_{j-i}, j = i..0}.
FpOutcome simulate_fp_reversed(const RadiusSampler& sampler, index_t horizon,
                               RandomStream& stream);

/// Uniforms U_t for t in [first, last], shared by coupled chains.
struct UniformTable {
  std::int64_t first = 0;
  std::vector<double> values;

  std::int64_t last() const { return first + static_cast<std::int64_t>(values.size()) - 1; }
  double at(std::int64_t t) const { return values.at(static_cast<std::size_t>(t - first)); }
};

UniformTable make_uniform_table(std::int64_t first, std::int64_t last, RandomStream& stream);

/// Path H_m..H_n of the chain started at 0 at time m.
struct HPath {
  std::int64_t start = 0;
  std::vector<index_t> values;

  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()) - 1; }
  index_t at(std::int64_t t) const { return values.at(static_cast<std::size_t>(t - start)); }
};

/// H_m = 0 and H_t = (H_{t-1} + 1) 1{U_t < alpha_{H_{t-1}}} for t in (m, n].
/// The table must cover (m, n].
HPath simulate_h_chain(const RadiusSampler& sampler, std::int64_t m, std::int64_t n,
                       const UniformTable& table);

/// Same, drawing U_{m+1}..U_n from a private stream.
HPath simulate_h_chain(const RadiusSampler& sampler, std::int64_t m, std::int64_t n,
                       RandomStream& stream);

struct CouplingViolation {
  enum class Kind { monotonicity, coalescence };
  Kind kind;
  std::int64_t m;  // earlier start
  std::int64_t k;  // later start
  std::int64_t t;  // time of the violation
};

struct CouplingReport {
  bool pass = true;
  std::optional<CouplingViolation> first_violation;
  std::uint64_t comparisons = 0;
};

/// Checks, for every pair of paths with starts m < k, that
/// H^(m)_t >= H^(k)_t for t >= k, and that H^(m)_n = 0 forces
/// H^(m)_t = H^(k)_t for all t >= n >= k.
CouplingReport check_monotone_coalescence(std::span<const HPath> paths);

}  // namespace rumor
