#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rumor/distribution.hpp"

namespace rumor::detail {

struct DistModel {
  virtual ~DistModel() = default;

  virtual double alpha(index_t k) const = 0;
  virtual double defect(index_t k) const = 0;
  virtual double pmf(index_t k) const {
    return k == 0 ? alpha(0) : defect(k - 1) - defect(k);
  }
  virtual std::optional<double> closed_product(index_t) const { return std::nullopt; }
  virtual std::optional<index_t> support_max() const { return std::nullopt; }
  virtual DistKind kind() const = 0;
  virtual std::string spec() const = 0;

  // Filled once by the factory, never mutated afterwards.
  std::optional<TailData> tail;
  std::optional<std::vector<Rational>> exact_pmf;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

}  // namespace rumor::detail
