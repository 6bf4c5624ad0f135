#include "rumor/firework.hpp"

#include <algorithm>
#include <numeric>

#include "rumor/error.hpp"
#include "rumor/renewal.hpp"

namespace rumor {

double fp_tail(const RadiusDistribution& dist, index_t n) {
  return renewal_sequence(dist, n + 1)[n + 1];
}

std::vector<double> fp_tail_table(const RadiusDistribution& dist, index_t n_max) {
  const RenewalSequence seq = renewal_sequence(dist, n_max + 1);
  return {seq.u.begin() + 1, seq.u.end()};
}

std::optional<index_t> fp_range(std::span<const index_t> radii) {
  index_t frontier = 0;
  for (index_t i = 0; i < radii.size(); ++i) {
    frontier = std::max(frontier, i + radii[i]);
    if (frontier == i) return i;
  }
  return std::nullopt;
}

FpOutcome simulate_fp(const RadiusSampler& sampler, index_t horizon, RandomStream& stream) {
  if (horizon < 1) throw InvalidArgument("simulate_fp: horizon must be >= 1");
  index_t frontier = 0;
  for (index_t i = 0; i < horizon; ++i) {
    frontier = std::max(frontier, i + sampler(stream));
    if (frontier == i) return {FpStatus::died, i, horizon};
  }
  return {FpStatus::alive_at_horizon, 0, horizon};
}

FpOutcome simulate_fp_stages(const RadiusSampler& sampler, index_t horizon, RandomStream& stream) {
  if (horizon < 1) throw InvalidArgument("simulate_fp_stages: horizon must be >= 1");
  std::vector<index_t> radii;
  auto radius = [&](index_t site) {
    while (radii.size() <= site) radii.push_back(sampler(stream));
    return radii[site];
  };
  std::vector<char> informed(1, 1);
  std::vector<index_t> stage{0};
  std::vector<index_t> next;
  while (!stage.empty()) {
    next.clear();
    for (index_t j : stage) {
      const index_t r = radius(j);
      if (r >= horizon - j) return {FpStatus::alive_at_horizon, 0, horizon};
      if (informed.size() <= j + r) informed.resize(j + r + 1, 0);
      for (index_t i = j; i <= j + r; ++i) {
        if (!informed[i]) {
          informed[i] = 1;
          next.push_back(i);
        }
      }
    }
    std::sort(next.begin(), next.end());
    stage.swap(next);
  }
  index_t m = 0;
  for (index_t i = 0; i < informed.size(); ++i) {
    if (informed[i]) m = i;
  }
  return {FpStatus::died, m, horizon};
}

FpOutcome simulate_fp_reversed(const RadiusSampler& sampler, index_t horizon,
                               RandomStream& stream) {
  if (horizon < 1) throw InvalidArgument("simulate_fp_reversed: horizon must be >= 1");
  // back[e] holds U_{-e}.
  std::vector<double> back;
  for (index_t d = 0; d < horizon; ++d) {
    back.push_back(stream.uniform());
    bool ok = true;
    for (index_t e = 0; e <= d && ok; ++e) ok = back[e] < sampler.alpha(d - e);
    if (ok) return {FpStatus::died, d, horizon};
  }
  return {FpStatus::alive_at_horizon, 0, horizon};
}

UniformTable make_uniform_table(std::int64_t first, std::int64_t last, RandomStream& stream) {
  if (last < first) throw InvalidArgument("make_uniform_table: last < first");
  UniformTable table;
  table.first = first;
  table.values.resize(static_cast<std::size_t>(last - first + 1));
  for (double& u : table.values) u = stream.uniform();
  return table;
}

HPath simulate_h_chain(const RadiusSampler& sampler, std::int64_t m, std::int64_t n,
                       const UniformTable& table) {
  if (n < m) throw InvalidArgument("simulate_h_chain: need m <= n");
  if (n > m && (table.first > m + 1 || table.last() < n)) {
    throw InvalidArgument("simulate_h_chain: uniform table does not cover (m, n]");
  }
  HPath path;
  path.start = m;
  path.values.reserve(static_cast<std::size_t>(n - m + 1));
  index_t h = 0;
  path.values.push_back(h);
  for (std::int64_t t = m + 1; t <= n; ++t) {
    h = table.at(t) < sampler.alpha(h) ? h + 1 : 0;
    path.values.push_back(h);
  }
  return path;
}

HPath simulate_h_chain(const RadiusSampler& sampler, std::int64_t m, std::int64_t n,
                       RandomStream& stream) {
  if (n == m) return HPath{m, {0}};
  return simulate_h_chain(sampler, m, n, make_uniform_table(m + 1, n, stream));
}

CouplingReport check_monotone_coalescence(std::span<const HPath> paths) {
  CouplingReport rep;
  std::vector<std::size_t> order(paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return paths[a].start < paths[b].start; });

  auto record = [&](CouplingViolation::Kind kind, std::int64_t m, std::int64_t k, std::int64_t t) {
    if (rep.pass) rep.first_violation = CouplingViolation{kind, m, k, t};
    rep.pass = false;
  };

  for (std::size_t x = 0; x < order.size(); ++x) {
    const HPath& early = paths[order[x]];
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const HPath& late = paths[order[y]];
      const std::int64_t stop = std::min(early.end(), late.end());
      bool coalesced = false;
      for (std::int64_t t = late.start; t <= stop; ++t) {
        const index_t a = early.at(t);
        const index_t b = late.at(t);
        ++rep.comparisons;
        if (a < b) record(CouplingViolation::Kind::monotonicity, early.start, late.start, t);
        if (a == 0) coalesced = true;
        if (coalesced && a != b) record(CouplingViolation::Kind::coalescence, early.start, late.start, t);
      }
    }
  }
  return rep;
}

}  // namespace rumor
