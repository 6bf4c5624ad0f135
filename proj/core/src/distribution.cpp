#include "rumor/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "dist_model.hpp"
#include "rumor/error.hpp"

namespace rumor {

namespace detail {

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_number: to_chars failed");
  }
  return std::string(buf, end);
}

}  // namespace detail

namespace {

using detail::DistModel;
using detail::format_number;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

Interval widen(Interval v, double rel) {
  return {v.lo * (1.0 - rel), v.hi * (1.0 + rel)};
}

// Encloses prod_{i>=0} alpha_i given an enclosure of the defect tail sums
// D(J) = sum_{k>=J} (1 - alpha_k). Uses
//   -sum x_k / (1 - x_J) <= log prod_{k>=J} (1 - x_k) <= -sum x_k
// which holds because the defects are nonincreasing.
Interval product_limit_from_defects(const DistModel& m,
                                    const std::function<Interval(index_t)>& dsum) {
  constexpr index_t kCap = index_t{1} << 22;
  double p = 1.0;
  index_t k = 0;
  Interval best{0.0, 1.0};
  for (index_t J = 1; J <= kCap; J *= 2) {
    for (; k < J; ++k) p *= m.alpha(k);
    const Interval d = dsum(J);
    const double slack = 2.0 * static_cast<double>(J) * kEps;
    if (d.hi == 0.0) return widen(Interval::point(p), slack);
    const double xj = m.defect(J);
    if (!(d.hi < 1.0) || !(xj < 1.0)) continue;
    Interval enc{p * std::exp(-d.hi / (1.0 - xj)), p * std::exp(-d.lo)};
    best = widen(enc, slack);
    if (best.hi - best.lo <= 1e-15) break;
  }
  return best;
}

TailData transient_tail(Interval limit, std::function<double(index_t)> defect_tail) {
  TailData t;
  t.product_limit = limit;
  t.remainder = [](index_t, double) { return Interval::infinite(); };
  t.weighted_remainder = [](index_t, double) { return Interval::infinite(); };
  t.defect_tail = std::move(defect_tail);
  return t;
}

// ---------------------------------------------------------------- finite

class FiniteModel final : public DistModel {
 public:
  explicit FiniteModel(std::vector<double> pmf) : pmf_(std::move(pmf)) {
    require(!pmf_.empty(), "finite: empty pmf");
    for (double v : pmf_) {
      require(std::isfinite(v) && v >= 0.0, "finite: pmf entries must be >= 0");
    }
    while (pmf_.size() > 1 && pmf_.back() == 0.0) pmf_.pop_back();
    const double total = std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-12,
            "finite: pmf sums to " + format_number(total) + ", expected 1");
    require(pmf_[0] > 0.0 && pmf_[0] < 1.0, "finite: lambda_0 must lie in (0,1)");
    cdf_.resize(pmf_.size());
    std::partial_sum(pmf_.begin(), pmf_.end(), cdf_.begin());
    cdf_.back() = 1.0;
    for (std::size_t k = 0; k + 1 < cdf_.size(); ++k) cdf_[k] = std::min(cdf_[k], 1.0);
  }

  double alpha(index_t k) const override {
    return k < cdf_.size() ? cdf_[k] : 1.0;
  }
  double defect(index_t k) const override {
    if (k >= cdf_.size() - 1) return 0.0;
    // Sum of the remaining masses avoids 1 - cdf cancellation.
    return std::accumulate(pmf_.begin() + static_cast<std::ptrdiff_t>(k) + 1, pmf_.end(), 0.0);
  }
  double pmf(index_t k) const override { return k < pmf_.size() ? pmf_[k] : 0.0; }
  std::optional<index_t> support_max() const override { return pmf_.size() - 1; }
  DistKind kind() const override { return DistKind::finite_pmf; }

  std::string spec() const override {
    std::string s = "finite:";
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      if (k) s += ',';
      std::string dec = format_number(pmf_[k]);
      if (exact_pmf) {
        const Rational& q = (*exact_pmf)[k];
        auto back = parse_rational(dec);
        s += (back && *back == q) ? dec : to_string(q);
      } else {
        s += dec;
      }
    }
    return s;
  }

  void build_tail() {
    double p = 1.0;
    for (double a : cdf_) p *= a;
    const auto k_sup = static_cast<index_t>(cdf_.size() - 1);
    tail = transient_tail(widen(Interval::point(p), 2.0 * static_cast<double>(cdf_.size()) * kEps),
                          [this, k_sup](index_t J) {
                            double s = 0.0;
                            for (index_t k = J; k < k_sup; ++k) s += defect(k);
                            return s;
                          });
  }

 private:
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

// ---------------------------------------------------------------- families

class FracModel final : public DistModel {
 public:
  explicit FracModel(double c) : c_(c) {
    require(std::isfinite(c) && c > 0.0, "frac: c must be > 0");
    TailData t;
    t.product_limit = Interval::point(0.0);
    t.remainder = [c](index_t J, double pj) {
      if (c <= 1.0) return Interval::infinite();
      // Telescoping: sum_{j>=J} P_j = P_J (J + c) / (c - 1).
      return Interval::point(pj * (static_cast<double>(J) + c) / (c - 1.0));
    };
    t.weighted_remainder = [c](index_t J, double pj) {
      if (c <= 2.0) return Interval::infinite();
      const double x = static_cast<double>(J);
      const double s0 = pj * (x + c) / (c - 1.0);
      const double s1 = pj * (x + c) * (x / (c - 2.0) + 1.0 / ((c - 1.0) * (c - 2.0)));
      return Interval::point(2.0 * s1 + s0);
    };
    t.defect_tail = [](index_t) { return kInf; };
    tail = std::move(t);
  }

  double alpha(index_t k) const override {
    const double x = static_cast<double>(k) + 1.0;
    return x / (x + c_);
  }
  double defect(index_t k) const override {
    return c_ / (static_cast<double>(k) + 1.0 + c_);
  }
  double pmf(index_t k) const override {
    if (k == 0) return alpha(0);
    const double x = static_cast<double>(k);
    return c_ / ((x + c_) * (x + 1.0 + c_));
  }
  std::optional<double> closed_product(index_t j) const override {
    // prod_{i<j} (i+1)/(i+1+c) = c B(j+1, c).
    return c_ * boost::math::beta(static_cast<double>(j) + 1.0, c_);
  }
  DistKind kind() const override { return DistKind::family; }
  std::string spec() const override { return "frac:c=" + format_number(c_); }

 private:
  double c_;
};

class PowRatioModel final : public DistModel {
 public:
  explicit PowRatioModel(double a) : a_(a) {
    require(std::isfinite(a) && a > 0.0, "powratio: a must be > 0");
    TailData t;
    t.product_limit = Interval::point(0.0);
    // P_j = (j+1)^-a, so the tails are Hurwitz-zeta tails starting at J+1.
    t.remainder = [a](index_t J, double) {
      if (a <= 1.0) return Interval::infinite();
      return zeta_tail(a, static_cast<double>(J) + 1.0);
    };
    t.weighted_remainder = [a](index_t J, double) {
      if (a <= 2.0) return Interval::infinite();
      // (2j+1)(j+1)^-a = 2 m^(1-a) - m^-a with m = j+1.
      const double x = static_cast<double>(J) + 1.0;
      const Interval s1 = zeta_tail(a - 1.0, x);
      const Interval s0 = zeta_tail(a, x);
      return Interval{2.0 * s1.lo - s0.hi, 2.0 * s1.hi - s0.lo};
    };
    t.defect_tail = [](index_t) { return kInf; };
    tail = std::move(t);
  }

  double alpha(index_t k) const override {
    const double x = static_cast<double>(k);
    return std::pow((x + 1.0) / (x + 2.0), a_);
  }
  double defect(index_t k) const override {
    return -std::expm1(a_ * std::log1p(-1.0 / (static_cast<double>(k) + 2.0)));
  }
  std::optional<double> closed_product(index_t j) const override {
    return std::pow(static_cast<double>(j) + 1.0, -a_);
  }
  DistKind kind() const override { return DistKind::family; }
  std::string spec() const override { return "powratio:a=" + format_number(a_); }

 private:
  double a_;
};

class GeomDefectModel final : public DistModel {
 public:
  GeomDefectModel(double c, double r) : c_(c), r_(r) {
    require(std::isfinite(c) && c > 0.0 && c < 1.0, "geomdefect: C must lie in (0,1)");
    require(std::isfinite(r) && r > 0.0 && r < 1.0, "geomdefect: r must lie in (0,1)");
    auto dsum = [c, r](index_t J) {
      return c * std::pow(r, static_cast<double>(J)) / (1.0 - r);
    };
    const Interval limit = product_limit_from_defects(
        *this, [dsum](index_t J) { return Interval::point(dsum(J)); });
    tail = transient_tail(limit, dsum);
  }

  double alpha(index_t k) const override { return 1.0 - defect(k); }
  double defect(index_t k) const override {
    return c_ * std::pow(r_, static_cast<double>(k));
  }
  DistKind kind() const override { return DistKind::family; }
  std::string spec() const override {
    return "geomdefect:C=" + format_number(c_) + ",r=" + format_number(r_);
  }

 private:
  double c_;
  double r_;
};

class HarmonicModel final : public DistModel {
 public:
  HarmonicModel(double r, double alpha0) : r_(r), alpha0_(alpha0) {
    require(std::isfinite(r) && r > 0.0 && r < 1.0, "harmonic: r must lie in (0,1)");
    require(std::isfinite(alpha0) && alpha0 > 0.0 && alpha0 <= 1.0 - r,
            "harmonic: alpha0 must lie in (0, 1-r]");
    TailData t;
    t.product_limit = Interval::point(0.0);
    t.remainder = [](index_t, double) { return Interval::infinite(); };
    t.weighted_remainder = [](index_t, double) { return Interval::infinite(); };
    t.defect_tail = [](index_t) { return kInf; };
    tail = std::move(t);
  }

  double alpha(index_t k) const override { return k == 0 ? alpha0_ : 1.0 - defect(k); }
  double defect(index_t k) const override {
    return k == 0 ? 1.0 - alpha0_ : r_ / static_cast<double>(k);
  }
  DistKind kind() const override { return DistKind::family; }
  std::string spec() const override {
    return "harmonic:r=" + format_number(r_) + ",alpha0=" + format_number(alpha0_);
  }

 private:
  double r_;
  double alpha0_;
};

class PolyDefectModel final : public DistModel {
 public:
  PolyDefectModel(double c, double a) : c_(c), a_(a) {
    require(std::isfinite(c) && c > 0.0 && c < 1.0, "polydefect: C must lie in (0,1)");
    require(std::isfinite(a) && a > 1.0, "polydefect: a must be > 1");
    auto dsum = [c, a](index_t J) {
      return c * zeta_tail(a, static_cast<double>(J) + 1.0);
    };
    const Interval limit = product_limit_from_defects(*this, dsum);
    tail = transient_tail(limit, [dsum](index_t J) { return dsum(J).hi; });
  }

  double alpha(index_t k) const override { return 1.0 - defect(k); }
  double defect(index_t k) const override {
    return c_ * std::pow(static_cast<double>(k) + 1.0, -a_);
  }
  DistKind kind() const override { return DistKind::family; }
  std::string spec() const override {
    return "polydefect:C=" + format_number(c_) + ",a=" + format_number(a_);
  }

 private:
  double c_;
  double a_;
};

// ---------------------------------------------------------------- transforms

class TransformModel : public DistModel {
 public:
  explicit TransformModel(RadiusDistribution base) : base_(std::move(base)) {}

  std::optional<index_t> support_max() const override { return base_.support_max(); }
  DistKind kind() const override { return DistKind::transformed; }

  // Propagates tail data when the base defects are summable; the caller
  // supplies how the defect-tail bound of the base maps through.
  void build_tail(const std::function<double(index_t, double)>& map_defect_tail) {
    if (!base_.has_tail_data()) return;
    const TailData& bt = base_.tail();
    if (!std::isfinite(bt.defect_tail(1))) return;
    auto base_dt = bt.defect_tail;
    auto dt = [base_dt, map_defect_tail](index_t J) { return map_defect_tail(J, base_dt(J)); };
    const Interval limit = product_limit_from_defects(
        *this, [dt](index_t J) { return Interval{0.0, dt(J)}; });
    if (!(limit.lo > 0.0)) return;
    tail = transient_tail(limit, dt);
  }

 protected:
  RadiusDistribution base_;
};

class SparseModel final : public TransformModel {
 public:
  SparseModel(RadiusDistribution base, double eps) : TransformModel(std::move(base)), eps_(eps) {
    require(std::isfinite(eps) && eps > 0.0 && eps <= 1.0, "sparse: eps must lie in (0,1]");
  }
  double alpha(index_t k) const override { return 1.0 - eps_ * (1.0 - base_.alpha(k)); }
  double defect(index_t k) const override { return eps_ * base_.defect(k); }
  std::string spec() const override {
    return "sparse(eps=" + format_number(eps_) + ";" + base_.spec() + ")";
  }
  double eps() const { return eps_; }

 private:
  double eps_;
};

class PgfModel final : public TransformModel {
 public:
  PgfModel(RadiusDistribution base, CountLaw law)
      : TransformModel(std::move(base)), law_(std::move(law)) {}
  double alpha(index_t k) const override {
    const double a = base_.alpha(k);
    return a == 1.0 ? 1.0 : law_.pgf(a);
  }
  double defect(index_t k) const override { return law_.pgf_defect(base_.defect(k)); }
  std::string spec() const override {
    return "pgf(" + law_.spec() + ";" + base_.spec() + ")";
  }
  const CountLaw& law() const { return law_; }

 private:
  CountLaw law_;
};

class SusceptibleModel final : public TransformModel {
 public:
  SusceptibleModel(RadiusDistribution base, SusceptibilitySeq p)
      : TransformModel(std::move(base)), p_(std::move(p)) {}
  double alpha(index_t k) const override { return 1.0 - p_.at(k) * (1.0 - base_.alpha(k)); }
  double defect(index_t k) const override { return p_.at(k) * base_.defect(k); }
  std::string spec() const override {
    return "suscept(" + p_.spec() + ";" + base_.spec() + ")";
  }
  const SusceptibilitySeq& seq() const { return p_; }

 private:
  SusceptibilitySeq p_;
};

RadiusDistribution finish(std::shared_ptr<DistModel> model) {
  const double a0 = model->alpha(0);
  require(a0 > 0.0 && a0 < 1.0,
          "alpha_0 = " + format_number(a0) + " lies outside (0,1)");
  return RadiusDistribution(std::move(model));
}

}  // namespace

// ---------------------------------------------------------------- CountLaw

CountLaw CountLaw::one() { return CountLaw{}; }

CountLaw CountLaw::geometric(double p) {
  require(std::isfinite(p) && p > 0.0 && p <= 1.0, "geom1: p must lie in (0,1]");
  CountLaw law;
  law.kind_ = Kind::geometric;
  law.p_ = p;
  return law;
}

CountLaw CountLaw::from_pmf(std::vector<double> pmf) {
  require(pmf.size() >= 2, "counts: need masses for l = 0 and at least l = 1");
  require(pmf[0] == 0.0, "counts: mass at 0 is not allowed (X counts individuals, X >= 1)");
  double total = 0.0;
  for (double v : pmf) {
    require(std::isfinite(v) && v >= 0.0, "counts: masses must be >= 0");
    total += v;
  }
  require(std::abs(total - 1.0) <= 1e-12, "counts: masses must sum to 1");
  CountLaw law;
  law.kind_ = Kind::table;
  law.pmf_ = std::move(pmf);
  return law;
}

double CountLaw::pgf(double s) const {
  switch (kind_) {
    case Kind::one:
      return s;
    case Kind::geometric:
      return p_ * s / (1.0 - (1.0 - p_) * s);
    case Kind::table: {
      double acc = 0.0;
      for (std::size_t l = pmf_.size(); l-- > 0;) acc = acc * s + pmf_[l];
      return acc;
    }
  }
  return s;
}

double CountLaw::pgf_defect(double d) const {
  switch (kind_) {
    case Kind::one:
      return d;
    case Kind::geometric:
      return d / (p_ + (1.0 - p_) * d);
    case Kind::table: {
      double acc = 0.0;
      const double lg = std::log1p(-d);
      for (std::size_t l = 1; l < pmf_.size(); ++l) {
        acc += pmf_[l] * (d >= 1.0 ? 1.0 : -std::expm1(static_cast<double>(l) * lg));
      }
      return acc;
    }
  }
  return d;
}

double CountLaw::mean() const {
  switch (kind_) {
    case Kind::one:
      return 1.0;
    case Kind::geometric:
      return 1.0 / p_;
    case Kind::table: {
      double m = 0.0;
      for (std::size_t l = 0; l < pmf_.size(); ++l) m += static_cast<double>(l) * pmf_[l];
      return m;
    }
  }
  return 1.0;
}

std::string CountLaw::spec() const {
  switch (kind_) {
    case Kind::one:
      return "one";
    case Kind::geometric:
      return "geom1:p=" + format_number(p_);
    case Kind::table: {
      std::string s = "counts:";
      for (std::size_t l = 0; l < pmf_.size(); ++l) {
        if (l) s += ',';
        s += format_number(pmf_[l]);
      }
      return s;
    }
  }
  return "one";
}

// ---------------------------------------------------------------- SusceptibilitySeq

SusceptibilitySeq SusceptibilitySeq::constant(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "const: p must lie in [0,1]");
  SusceptibilitySeq s;
  s.kind_ = Kind::constant;
  s.p_ = p;
  return s;
}

SusceptibilitySeq SusceptibilitySeq::reciprocal() {
  SusceptibilitySeq s;
  s.kind_ = Kind::reciprocal;
  return s;
}

SusceptibilitySeq SusceptibilitySeq::from_values(std::vector<double> values) {
  require(!values.empty(), "list: need at least one value");
  for (std::size_t k = 0; k < values.size(); ++k) {
    require(std::isfinite(values[k]) && values[k] >= 0.0 && values[k] <= 1.0,
            "list: p_k must lie in [0,1]");
    require(k == 0 || values[k] <= values[k - 1], "list: p_k must be nonincreasing");
  }
  SusceptibilitySeq s;
  s.kind_ = Kind::table;
  s.values_ = std::move(values);
  return s;
}

double SusceptibilitySeq::at(index_t k) const {
  switch (kind_) {
    case Kind::constant:
      return p_;
    case Kind::reciprocal:
      return 1.0 / (static_cast<double>(k) + 1.0);
    case Kind::table:
      return k < values_.size() ? values_[k] : values_.back();
  }
  return p_;
}

std::string SusceptibilitySeq::spec() const {
  switch (kind_) {
    case Kind::constant:
      return "const:" + format_number(p_);
    case Kind::reciprocal:
      return "recip";
    case Kind::table: {
      std::string s = "list:";
      for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) s += ',';
        s += format_number(values_[k]);
      }
      return s;
    }
  }
  return "const:1";
}

// ---------------------------------------------------------------- RadiusDistribution

RadiusDistribution::RadiusDistribution(std::shared_ptr<const detail::DistModel> model)
    : model_(std::move(model)) {}

RadiusDistribution RadiusDistribution::finite(std::vector<double> pmf) {
  auto m = std::make_shared<FiniteModel>(std::move(pmf));
  m->build_tail();
  return finish(std::move(m));
}

RadiusDistribution RadiusDistribution::finite(std::vector<Rational> pmf) {
  std::vector<double> approx;
  approx.reserve(pmf.size());
  Rational total = 0;
  for (const Rational& q : pmf) {
    require(q >= 0, "finite: pmf entries must be >= 0");
    total += q;
    approx.push_back(to_double(q));
  }
  auto m = std::make_shared<FiniteModel>(std::move(approx));
  if (total == 1) {
    while (pmf.size() > 1 && pmf.back() == 0) pmf.pop_back();
    m->exact_pmf = std::move(pmf);
  }
  m->build_tail();
  return finish(std::move(m));
}

RadiusDistribution RadiusDistribution::frac(double c) {
  return finish(std::make_shared<FracModel>(c));
}

RadiusDistribution RadiusDistribution::powratio(double a) {
  return finish(std::make_shared<PowRatioModel>(a));
}

RadiusDistribution RadiusDistribution::geomdefect(double c, double r) {
  return finish(std::make_shared<GeomDefectModel>(c, r));
}

RadiusDistribution RadiusDistribution::harmonic(double r, std::optional<double> alpha0) {
  return finish(std::make_shared<HarmonicModel>(r, alpha0.value_or(1.0 - r)));
}

RadiusDistribution RadiusDistribution::polydefect(double c, double a) {
  return finish(std::make_shared<PolyDefectModel>(c, a));
}

double RadiusDistribution::alpha(index_t k) const { return model_->alpha(k); }
double RadiusDistribution::defect(index_t k) const { return model_->defect(k); }
double RadiusDistribution::pmf(index_t k) const { return model_->pmf(k); }

double RadiusDistribution::running_product(index_t j) const {
  if (auto closed = model_->closed_product(j)) return *closed;
  if (auto k_sup = model_->support_max()) j = std::min(j, *k_sup);
  double p = 1.0;
  for (index_t i = 0; i < j; ++i) p *= model_->alpha(i);
  return p;
}

DistKind RadiusDistribution::kind() const { return model_->kind(); }
std::optional<index_t> RadiusDistribution::support_max() const { return model_->support_max(); }
bool RadiusDistribution::has_tail_data() const { return model_->tail.has_value(); }

const TailData& RadiusDistribution::tail() const {
  if (!model_->tail) {
    throw TailDataUnavailable("no analytic tail data for " + spec());
  }
  return *model_->tail;
}

const std::optional<std::vector<Rational>>& RadiusDistribution::exact_pmf() const {
  return model_->exact_pmf;
}

std::string RadiusDistribution::spec() const { return model_->spec(); }

// ---------------------------------------------------------------- free functions

RadiusDistribution make_family(std::string_view family_id,
                               const std::map<std::string, double>& params) {
  auto take = [&](const char* key) -> double {
    auto it = params.find(key);
    require(it != params.end(),
            std::string(family_id) + ": missing parameter '" + key + "'");
    return it->second;
  };
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      bool known = false;
      for (const char* allowed : keys) known = known || k == allowed;
      require(known, std::string(family_id) + ": unknown parameter '" + k + "'");
    }
  };
  if (family_id == "frac") {
    only({"c"});
    return RadiusDistribution::frac(take("c"));
  }
  if (family_id == "powratio") {
    only({"a"});
    return RadiusDistribution::powratio(take("a"));
  }
  if (family_id == "geomdefect") {
    only({"C", "r"});
    return RadiusDistribution::geomdefect(take("C"), take("r"));
  }
  if (family_id == "harmonic") {
    only({"r", "alpha0"});
    std::optional<double> a0;
    if (auto it = params.find("alpha0"); it != params.end()) a0 = it->second;
    return RadiusDistribution::harmonic(take("r"), a0);
  }
  if (family_id == "polydefect") {
    only({"C", "a"});
    return RadiusDistribution::polydefect(take("C"), take("a"));
  }
  throw InvalidArgument("unknown family '" + std::string(family_id) + "'");
}

RadiusDistribution transform_sparse(const RadiusDistribution& base, double eps) {
  auto m = std::make_shared<SparseModel>(base, eps);
  m->build_tail([eps](index_t, double d) { return eps * d; });
  return finish(std::move(m));
}

RadiusDistribution transform_pgf(const RadiusDistribution& base, CountLaw count_law) {
  const double mean = count_law.mean();
  auto m = std::make_shared<PgfModel>(base, std::move(count_law));
  // 1 - g(s) <= E[X] (1 - s) by convexity of g.
  if (std::isfinite(mean)) m->build_tail([mean](index_t, double d) { return mean * d; });
  return finish(std::move(m));
}

RadiusDistribution transform_susceptible(const RadiusDistribution& base,
                                         SusceptibilitySeq p_seq) {
  auto m = std::make_shared<SusceptibleModel>(base, p_seq);
  m->build_tail([p_seq](index_t J, double d) { return p_seq.at(J) * d; });
  return finish(std::move(m));
}

double tail_remainder_bound(const RadiusDistribution& dist, index_t J) {
  if (J < 1) throw InvalidArgument("tail_remainder_bound: J must be >= 1");
  const TailData& t = dist.tail();
  return t.remainder(J, dist.running_product(J)).hi;
}

Interval zeta_tail(double s, double x) {
  if (!(s > 1.0) || !(x >= 1.0)) throw InvalidArgument("zeta_tail: need s > 1, x >= 1");
  const double fx = std::pow(x, -s);
  const double integral = x * fx / (s - 1.0);
  const double base = integral + 0.5 * fx;
  const double corr = s * fx / x / 12.0;
  // Four ulps of slack on each side absorb the rounding of the closed forms.
  return {base * (1.0 - 4.0 * kEps), (base + corr) * (1.0 + 4.0 * kEps)};
}

}  // namespace rumor
