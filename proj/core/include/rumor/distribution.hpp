#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rumor/interval.hpp"
#include "rumor/rational.hpp"

namespace rumor {

using index_t = std::uint64_t;

enum class DistKind { finite_pmf, family, transformed };

enum class FamilyId {
  frac,        // alpha_k = (k+1)/(k+1+c)
  powratio,    // alpha_k = ((k+1)/(k+2))^a
  geomdefect,  // 1 - alpha_k = C r^k
  harmonic,    // 1 - alpha_k = r/k for k >= 1, alpha_0 free
  polydefect,  // 1 - alpha_k = C (k+1)^-a, a > 1
};

/// Analytic tail information for the running products
/// P_j = prod_{i<j} alpha_i. Every rule is a certified enclosure.
struct TailData {
  /// Enclosure of prod_{i>=0} alpha_i.
  Interval product_limit;
  /// Enclosure of sum_{j>=J} P_j given J >= 1 and the running product P_J.
  /// Interval::infinite() when the series diverges.
  std::function<Interval(index_t, double)> remainder;
  /// Same for sum_{j>=J} (2j+1) P_j (the second-moment series).
  std::function<Interval(index_t, double)> weighted_remainder;
  /// Upper bound on sum_{k>=J} (1 - alpha_k); +inf when not summable.
  std::function<double(index_t)> defect_tail;
};

/// Law of a count X on {1, 2, ...}, used through its generating function.
class CountLaw {
 public:
  static CountLaw one();
  /// P(X = l) = p (1-p)^(l-1), l >= 1.
  static CountLaw geometric(double p);
  /// pmf listed from l = 0; the mass at 0 must vanish.
  static CountLaw from_pmf(std::vector<double> pmf);

  double pgf(double s) const;
  /// 1 - g(1 - d), evaluated without cancellation for small d.
  double pgf_defect(double d) const;
  double mean() const;
  std::string spec() const;

 private:
  enum class Kind { one, geometric, table };
  Kind kind_ = Kind::one;
  double p_ = 1.0;
  std::vector<double> pmf_;
};

/// Nonincreasing believing probabilities p_k for the susceptibility variant.
class SusceptibilitySeq {
 public:
  static SusceptibilitySeq constant(double p);
  /// p_k = 1/(k+1).
  static SusceptibilitySeq reciprocal();
  /// Explicit p_0, p_1, ...; the last value extends to infinity.
  static SusceptibilitySeq from_values(std::vector<double> values);

  double at(index_t k) const;
  std::string spec() const;

 private:
  enum class Kind { constant, reciprocal, table };
  Kind kind_ = Kind::constant;
  double p_ = 1.0;
  std::vector<double> values_;
};

namespace detail {
struct DistModel;
}

/// Law of the transmission radius R on {0, 1, 2, ...}, represented by its
/// cdf alpha_k = P(R <= k). Immutable and cheap to copy.
class RadiusDistribution {
 public:
  /// Finite pmf lambda_0..lambda_K in double precision.
  static RadiusDistribution finite(std::vector<double> pmf);
  /// Finite pmf given exactly; enables rational arithmetic in the oracle.
  static RadiusDistribution finite(std::vector<Rational> pmf);
  static RadiusDistribution frac(double c);
  static RadiusDistribution powratio(double a);
  static RadiusDistribution geomdefect(double c, double r);
  static RadiusDistribution harmonic(double r, std::optional<double> alpha0 = {});
  static RadiusDistribution polydefect(double c, double a);

  double alpha(index_t k) const;
  /// 1 - alpha_k, computed directly where the family allows it.
  double defect(index_t k) const;
  double pmf(index_t k) const;
  /// prod_{i<j} alpha_i, closed form when the family has one.
  double running_product(index_t j) const;

  DistKind kind() const;
  /// Smallest K with alpha_K = 1, when the support is finite.
  std::optional<index_t> support_max() const;
  bool has_tail_data() const;
  /// Throws TailDataUnavailable when has_tail_data() is false.
  const TailData& tail() const;
  /// Exact pmf for finite distributions given as decimals or fractions.
  const std::optional<std::vector<Rational>>& exact_pmf() const;
  /// Canonical mini-grammar form; parse_distribution(spec()) round-trips.
  std::string spec() const;

  explicit RadiusDistribution(std::shared_ptr<const detail::DistModel> model);

 private:
  std::shared_ptr<const detail::DistModel> model_;
};

/// Builds a parametric family by name ("finite" is rejected here; use
/// RadiusDistribution::finite). Throws InvalidArgument on bad parameters.
RadiusDistribution make_family(std::string_view family_id,
                               const std::map<std::string, double>& params);

/// Sparse sites: alpha_k = 1 - eps (1 - base.alpha_k), eps in (0, 1].
RadiusDistribution transform_sparse(const RadiusDistribution& base, double eps);

/// Random group sizes: alpha_k = g(base.alpha_k) with g the pgf of X >= 1.
RadiusDistribution transform_pgf(const RadiusDistribution& base, CountLaw count_law);

/// Susceptibility: alpha_k = 1 - p_k (1 - base.alpha_k), p nonincreasing.
RadiusDistribution transform_susceptible(const RadiusDistribution& base,
                                         SusceptibilitySeq p_seq);

/// Upper bound on sum_{j>=J} prod_{i<j} alpha_i; +inf when it diverges.
double tail_remainder_bound(const RadiusDistribution& dist, index_t J);

/// Parses the distribution mini-grammar, e.g. "finite:0.5,0.3,0.2",
/// "frac:c=2", "sparse(eps=0.5;pgf(geom1:p=0.5;powratio:a=4))".
RadiusDistribution parse_distribution(std::string_view text);

/// Enclosure of sum_{m>=x} m^-s for s > 1, x >= 1 (Euler-Maclaurin bounds).
Interval zeta_tail(double s, double x);

}  // namespace rumor
