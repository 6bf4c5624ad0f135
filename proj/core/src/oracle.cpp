#include "rumor/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dist_model.hpp"
#include "rumor/error.hpp"

namespace rumor {

namespace {

constexpr index_t kMaxHorizon = 12;

std::size_t support_size(const RadiusDistribution& dist, const char* who) {
  const auto k_sup = dist.support_max();
  if (!k_sup) {
    throw InvalidArgument(std::string(who) + ": enumeration needs a finite-support distribution");
  }
  return static_cast<std::size_t>(*k_sup) + 1;
}

void guard(std::size_t s, index_t len, const char* who) {
  std::uint64_t count = 1;
  for (index_t i = 0; i < len; ++i) {
    count *= s;
    if (count > kMaxConfigurations) {
      throw EnumerationTooLarge(std::string(who) + ": " + std::to_string(s) + "^" +
                                std::to_string(len) + " configurations exceed the limit of " +
                                std::to_string(kMaxConfigurations));
    }
  }
}

void check_horizon(index_t n, const char* who) {
  if (n > kMaxHorizon) {
    throw InvalidArgument(std::string(who) + ": n must be <= " + std::to_string(kMaxHorizon));
  }
}

/// Calls leaf(radii, weight) for every configuration of `len` radii with
/// positive probability.
template <class T, class Leaf>
void for_each_config(const std::vector<T>& pmf, std::size_t len, Leaf&& leaf) {
  std::vector<index_t> cfg(len);
  std::vector<T> w(len + 1, T(0));
  w[0] = T(1);
  if (len == 0) {
    leaf(cfg, w[0]);
    return;
  }
  auto rec = [&](auto& self, std::size_t d) -> void {
    for (std::size_t r = 0; r < pmf.size(); ++r) {
      if (pmf[r] == 0) continue;
      cfg[d] = r;
      w[d + 1] = w[d] * pmf[r];
      if (d + 1 == len) {
        leaf(cfg, w[len]);
      } else {
        self(self, d + 1);
      }
    }
  };
  rec(rec, 0);
}

/// Runs A_0 = {0}, A_k = {i not yet informed : i in [j, j + R_j], j in A_{k-1}}
/// with radii[j] for j < radii.size(), and reports whether `target` is reached.
bool fp_stage_reaches(const std::vector<index_t>& radii, index_t target) {
  std::vector<char> informed(target + 1, 0);
  informed[0] = 1;
  std::vector<index_t> stage{0};
  std::vector<index_t> next;
  while (!stage.empty()) {
    next.clear();
    for (index_t j : stage) {
      if (j >= radii.size()) continue;
      const index_t top = std::min(target, j + radii[j]);
      for (index_t i = j + 1; i <= top; ++i) {
        if (!informed[i]) {
          informed[i] = 1;
          next.push_back(i);
        }
      }
    }
    stage.swap(next);
  }
  return informed[target] != 0;
}

/// B_0 = {0}, B_k = {i not yet informed : i - R_i <= j < i for some j in
/// B_{k-1}}; radii[i - 1] holds R_i for i = 1..target.
bool rfp_stage_reaches(const std::vector<index_t>& radii, index_t target) {
  std::vector<char> informed(target + 1, 0);
  informed[0] = 1;
  std::vector<index_t> stage{0};
  std::vector<index_t> next;
  while (!stage.empty()) {
    next.clear();
    for (index_t i = 1; i <= target; ++i) {
      if (informed[i]) continue;
      const index_t reach = radii[i - 1] >= i ? 0 : i - radii[i - 1];
      for (index_t j : stage) {
        if (reach <= j && j < i) {
          informed[i] = 1;
          next.push_back(i);
          break;
        }
      }
    }
    stage.swap(next);
  }
  return informed[target] != 0;
}

/// Min-formula: M > n iff max_{j<=i} (j + R_j) > i for every i <= n.
bool fp_min_formula_exceeds(const std::vector<index_t>& radii, index_t n) {
  index_t frontier = 0;
  for (index_t i = 0; i <= n; ++i) {
    frontier = std::max(frontier, i + radii[i]);
    if (frontier == i) return false;
  }
  return true;
}

template <class T>
T fp_tail_sum(const std::vector<T>& pmf, index_t n) {
  T total(0);
  auto rec = [&](auto& self, index_t i, index_t frontier, const T& w) -> void {
    for (std::size_t r = 0; r < pmf.size(); ++r) {
      if (pmf[r] == 0) continue;
      const index_t f = std::max(frontier, i + r);
      if (f == i) continue;
      const T wr = w * pmf[r];
      if (i == n) {
        total += wr;
      } else {
        self(self, i + 1, f, wr);
      }
    }
  };
  rec(rec, 0, 0, T(1));
  return total;
}

template <class T>
T rfp_block_sum(const std::vector<T>& pmf, index_t k) {
  T total(0);
  for_each_config(pmf, k, [&](const std::vector<index_t>& radii, const T& w) {
    index_t gap = 0;
    for (index_t i = 1; i <= k; ++i) {
      const bool one = radii[i - 1] > gap;
      if (one != (i == k)) return;
      gap = one ? 0 : gap + 1;
    }
    total += w;
  });
  return total;
}

template <class T>
T site_informed_sum(const std::vector<T>& pmf, index_t n, Model model) {
  T total(0);
  // FP needs R_0..R_{n-1}; RFP needs R_1..R_n.
  for_each_config(pmf, n, [&](const std::vector<index_t>& radii, const T& w) {
    const bool hit = model == Model::fp ? fp_stage_reaches(radii, n) : rfp_stage_reaches(radii, n);
    if (hit) total += w;
  });
  return total;
}

std::vector<double> double_pmf(const RadiusDistribution& dist, std::size_t s) {
  std::vector<double> pmf(s);
  for (std::size_t k = 0; k < s; ++k) pmf[k] = dist.pmf(k);
  return pmf;
}

template <class Fn>
ExactProbability dispatch(const RadiusDistribution& dist, std::size_t s, Fn&& fn) {
  ExactProbability out;
  if (const auto& exact = dist.exact_pmf()) {
    Rational v = fn(*exact);
    out.value = to_double(v);
    out.exact = std::move(v);
  } else {
    out.value = fn(double_pmf(dist, s));
  }
  return out;
}

}  // namespace

std::string ExactProbability::to_string() const {
  if (exact) return rumor::to_string(*exact);
  return detail::format_number(value);
}

ExactProbability enumerate_fp_tail(const RadiusDistribution& dist, index_t n) {
  const char* who = "enumerate_fp_tail";
  check_horizon(n, who);
  const std::size_t s = support_size(dist, who);
  guard(s, n + 1, who);
  return dispatch(dist, s, [n](const auto& pmf) { return fp_tail_sum(pmf, n); });
}

ExactProbability enumerate_rfp_block(const RadiusDistribution& dist, index_t k) {
  const char* who = "enumerate_rfp_block";
  if (k < 1) throw InvalidArgument("enumerate_rfp_block: k must be >= 1");
  check_horizon(k, who);
  const std::size_t s = support_size(dist, who);
  guard(s, k, who);
  return dispatch(dist, s, [k](const auto& pmf) { return rfp_block_sum(pmf, k); });
}

ExactProbability enumerate_site_informed(const RadiusDistribution& dist, index_t n, Model model) {
  const char* who = "enumerate_site_informed";
  check_horizon(n, who);
  const std::size_t s = support_size(dist, who);
  guard(s, n, who);
  return dispatch(dist, s,
                  [n, model](const auto& pmf) { return site_informed_sum(pmf, n, model); });
}

DefinitionCheck check_fp_definitions(const RadiusDistribution& dist, index_t n) {
  const char* who = "check_fp_definitions";
  check_horizon(n, who);
  const std::size_t s = support_size(dist, who);
  guard(s, n + 1, who);
  DefinitionCheck out;
  for_each_config(double_pmf(dist, s), n + 1, [&](const std::vector<index_t>& radii, double) {
    ++out.configurations;
    if (fp_min_formula_exceeds(radii, n) != fp_stage_reaches(radii, n + 1)) ++out.mismatches;
  });
  return out;
}

}  // namespace rumor
