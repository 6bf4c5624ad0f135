#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "rumor/bounds.hpp"
#include "rumor/csv.hpp"
#include "rumor/distribution.hpp"
#include "rumor/error.hpp"
#include "rumor/firework.hpp"
#include "rumor/montecarlo.hpp"
#include "rumor/renewal.hpp"
#include "rumor/reverse_firework.hpp"
#include "rumor/sampler.hpp"
#include "rumor/suites.hpp"

namespace rumor::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string dist;
  index_t n = 1000;
  std::size_t reps = 100'000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string out;
  std::string log;
  std::string suite;
  unsigned workers = 0;
  std::string variant = "exp";
  BoundParams bound;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

RunOptions run_options(const RunConfig& cfg) { return {cfg.seed, cfg.workers}; }

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*f) throw InvalidArgument("cannot open '" + path + "' for writing");
  return f;
}

// Sites reported in the human-readable simulation summaries.
std::vector<index_t> summary_sites(index_t n) {
  std::vector<index_t> ks{0, 1, 2, 3, 5};
  for (index_t p = 10; p < n; p *= 10) ks.push_back(p);
  ks.push_back(n);
  std::erase_if(ks, [n](index_t k) { return k > n; });
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const RadiusDistribution dist = parse_distribution(cfg.dist);
  const InterArrivalLaw law = inter_arrival(dist, cfg.n);
  const RenewalSequence u = renewal_sequence(law, cfg.n);

  out << "dist         " << dist.spec() << '\n';
  out << "q_k          ";
  for (index_t k = 1; k <= std::min<index_t>(cfg.n, 8); ++k) out << (k > 1 ? " " : "") << fmt(law.q[k]);
  out << '\n';
  out << "q_inf        [" << fmt(law.q_inf.lo) << ", " << fmt(law.q_inf.hi) << "]"
      << (law.q_inf_certified ? "" : " (horizon bracket)") << '\n';
  out << "u_" << cfg.n << std::string(cfg.n < 10 ? 10 : cfg.n < 100 ? 9 : cfg.n < 1000 ? 8 : 7, ' ')
      << fmt(u[cfg.n]) << '\n';

  const RenewalStats st = mu_sigma(dist, cfg.tol);
  const std::string status = st.certified ? "certified" : "uncertified";
  out << "mu           " << fmt(st.mu);
  if (std::isfinite(st.mu)) out << " +- " << fmt(st.mu_error);
  out << '\n';
  out << "sigma2       " << (st.sigma2 ? fmt(*st.sigma2) : std::string("undefined"));
  if (st.sigma2 && std::isfinite(*st.sigma2)) out << " +- " << fmt(st.sigma2_error);
  out << '\n';
  out << "class        "
      << (st.recurrence_class ? std::string(to_string(*st.recurrence_class))
                              : std::string("unknown (no tail data)"))
      << '\n';
  const double surv = std::isinf(st.mu) ? 0.0 : st.survival_prob;
  out << "P(survival)  " << fmt(surv);
  if (std::isfinite(st.mu)) out << " +- " << fmt(st.survival_error);
  out << " (" << status << ")\n";

  if (auto f = open_output(cfg.out)) {
    CsvWriter w(*f, {"n", "q_n", "u_n", "mu_inv", "abs_gap"});
    for (index_t k = 0; k <= cfg.n; ++k) {
      w.cell(std::uint64_t{k}).cell(law.q[k]).cell(u[k]).cell(surv).cell(std::abs(u[k] - surv));
      w.end_row();
    }
  }
  return kExitOk;
}

int cmd_fp_sim(const RunConfig& cfg, std::ostream& out) {
  require_min_reps(cfg.reps);
  const RadiusDistribution dist = parse_distribution(cfg.dist);
  const RadiusSampler sampler(dist);
  const index_t horizon = cfg.n + 1;
  const auto outcomes = run_trials(cfg.reps, run_options(cfg), [&](std::size_t, RandomStream& s) {
    return simulate_fp(sampler, horizon, s);
  });
  // exceed[k] = #{trials with M > k}.
  std::vector<std::uint64_t> died_at(horizon, 0);
  std::uint64_t alive = 0;
  for (const FpOutcome& o : outcomes) {
    if (o.died()) {
      died_at[o.m]++;
    } else {
      ++alive;
    }
  }
  std::vector<std::uint64_t> exceed(horizon, 0);
  std::uint64_t running = alive;
  for (index_t k = horizon; k-- > 0;) {
    exceed[k] = running;
    running += died_at[k];
  }
  const std::vector<double> exact = fp_tail_table(dist, cfg.n);

  out << "dist " << dist.spec() << ", reps " << cfg.reps << ", seed " << cfg.seed << '\n';
  out << "k P(M>k) p_hat stderr ci95\n";
  for (index_t k : summary_sites(cfg.n)) {
    const Estimate e = make_estimate(exceed[k], cfg.reps);
    out << k << ' ' << fmt(exact[k]) << ' ' << fmt(e.p_hat) << ' ' << fmt(e.std_error) << " ["
        << fmt(e.ci95.lo) << ", " << fmt(e.ci95.hi) << "]\n";
  }
  const Estimate a = make_estimate(alive, cfg.reps);
  out << "alive at horizon " << horizon << ": " << fmt(a.p_hat) << " +- " << fmt(a.std_error)
      << " (upward-biased estimate of P(survival) by u_" << horizon + 1 << " - 1/mu)\n";

  if (auto f = open_output(cfg.out)) {
    CsvWriter w(*f, {"n", "P_exact", "P_hat", "stderr"});
    for (index_t k = 0; k <= cfg.n; ++k) {
      const Estimate e = make_estimate(exceed[k], cfg.reps);
      w.cell(std::uint64_t{k}).cell(exact[k]).cell(e.p_hat).cell(e.std_error);
      w.end_row();
    }
  }
  if (auto f = open_output(cfg.log)) {
    CsvWriter w(*f, {"trial", "seed_index", "status", "M"});
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const FpOutcome& o = outcomes[i];
      w.cell(std::uint64_t{i}).cell(std::uint64_t{i}).cell(o.died() ? "died" : "alive_at_horizon");
      if (o.died()) {
        w.cell(std::uint64_t{o.m});
      } else {
        w.cell(std::string_view{});
      }
      w.end_row();
    }
  }
  return kExitOk;
}

int cmd_rfp_sim(const RunConfig& cfg, std::ostream& out) {
  require_min_reps(cfg.reps);
  const RadiusDistribution dist = parse_distribution(cfg.dist);
  const RadiusSampler sampler(dist);
  struct Summary {
    index_t count = 0;
    bool last = false;
  };
  const auto runs = run_trials(cfg.reps, run_options(cfg), [&](std::size_t, RandomStream& s) {
    const ZetaPath path = simulate_rfp(sampler, cfg.n, s);
    return Summary{count_spreaders(path), path.bits[cfg.n] == 1};
  });
  const double nd = static_cast<double>(cfg.n);
  double sum = 0.0;
  double sumsq = 0.0;
  std::uint64_t last_hits = 0;
  for (const Summary& r : runs) {
    const double ratio = static_cast<double>(r.count) / nd;
    sum += ratio;
    sumsq += ratio * ratio;
    last_hits += r.last;
  }
  const double reps = static_cast<double>(cfg.reps);
  const double mean = sum / reps;
  const double var = std::max(0.0, sumsq / reps - mean * mean);

  out << "dist " << dist.spec() << ", n " << cfg.n << ", reps " << cfg.reps << ", seed "
      << cfg.seed << '\n';
  out << "N(n)/n mean " << fmt(mean) << " stderr " << fmt(std::sqrt(var / (reps - 1.0)))
      << '\n';
  if (dist.has_tail_data()) {
    try {
      const LlnCltParams p = lln_clt_params(dist, cfg.tol);
      out << "LLN limit 1/mu " << fmt(p.limit) << '\n';
      out << "CLT variance sigma2/mu^3 "
          << (p.clt_variance ? fmt(*p.clt_variance) : std::string("undefined")) << '\n';
      const SpreaderLaw law = rfp_spreader_law(dist);
      out << "regime " << to_string(law.regime);
      if (law.regime == RfpRegime::dies) {
        out << ", N ~ Geom(" << fmt(law.geom_param) << "), E[N] " << fmt(law.mean());
      }
      out << '\n';
    } catch (const TailDataUnavailable& e) {
      out << "limit parameters unavailable: " << e.what() << '\n';
    }
  } else {
    out << "limit parameters unavailable: no tail data\n";
  }
  const Estimate z = make_estimate(last_hits, cfg.reps);
  const double un = renewal_sequence(dist, cfg.n)[cfg.n];
  out << "P(zeta_n=1) " << fmt(z.p_hat) << " +- " << fmt(z.std_error) << ", u_n " << fmt(un)
      << '\n';

  if (auto f = open_output(cfg.out)) {
    CsvWriter w(*f, {"n", "N_n", "ratio"});
    for (const Summary& r : runs) {
      w.cell(std::uint64_t{cfg.n}).cell(std::uint64_t{r.count}).cell(static_cast<double>(r.count) / nd);
      w.end_row();
    }
  }
  return kExitOk;
}

SuiteConfig suite_config(const RunConfig& cfg) {
  SuiteConfig sc{parse_distribution(cfg.dist)};
  sc.n = cfg.n;
  sc.reps = cfg.reps;
  sc.opts = run_options(cfg);
  sc.tol = cfg.tol;
  const auto v = parse_bound_variant(cfg.variant);
  if (!v) throw InvalidArgument("unknown bound variant '" + cfg.variant + "'");
  sc.variant = *v;
  sc.bound_params = cfg.bound;
  return sc;
}

int report(const SuiteResult& res, const RunConfig& cfg, std::ostream& out) {
  print_verdicts(out, res);
  out << (res.pass() ? "PASS " : "FAIL ") << "suite " << res.suite << '\n';
  if (auto f = open_output(cfg.out)) write_verdict_csv(*f, res);
  return res.pass() ? kExitOk : kExitFail;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.suite.empty()) throw InvalidArgument("verify needs --suite");
  return report(run_suite(cfg.suite, suite_config(cfg)), cfg, out);
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  SuiteConfig sc = suite_config(cfg);
  validate_bound_params(sc.variant, sc.bound_params);
  const RenewalSequence u = renewal_sequence(sc.dist, cfg.n);
  const std::vector<double> bound = tail_bound_sequence(sc.variant, sc.bound_params, cfg.n);
  const SuiteResult res = suite_bounds(sc);
  print_verdicts(out, res);
  if (auto f = open_output(cfg.out)) {
    CsvWriter w(*f, {"k", "u_k", "bound_k", "ratio"});
    for (index_t k = bound_min_index(sc.variant); k <= cfg.n; ++k) {
      w.cell(std::uint64_t{k}).cell(u[k]).cell(bound[k]).cell(u[k] / bound[k]);
      w.end_row();
    }
  }
  return res.pass() ? kExitOk : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Firework and reverse firework processes via discrete renewal theory", "rumor"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags");

  RunConfig cfg;
  app.add_option("--dist", cfg.dist, "distribution spec, e.g. finite:0.5,0.3,0.2 or frac:c=2")
      ->required();
  app.add_option("--n", cfg.n, "horizon")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--reps", cfg.reps, "Monte Carlo replicates")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance for mu and sigma^2")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "CSV output path");
  app.add_option("--log", cfg.log, "per-trial CSV log (fp-sim)");
  app.add_option("--suite", cfg.suite, "verification suite")
      ->check(CLI::IsMember({"lemma1", "lemma2", "crossmodel", "geometric", "clt", "hchain",
                             "bounds"}));
  app.add_option("--workers", cfg.workers, "worker threads (0 = hardware); never changes results")
      ->capture_default_str();
  app.add_option("--variant", cfg.variant, "bound shape: exp | polylog | harmonic | regvar")
      ->capture_default_str()
      ->check(CLI::IsMember({"exp", "polylog", "harmonic", "regvar"}));
  app.add_option("--r", cfg.bound.r, "bound parameter r")->capture_default_str();
  app.add_option("--cr", cfg.bound.c_r, "bound parameter C_r")->capture_default_str();
  app.add_option("--alpha", cfg.bound.alpha, "bound exponent alpha")->capture_default_str();
  app.add_option("--beta", cfg.bound.beta, "bound log exponent beta")->capture_default_str();

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"exact", "q_k, u_n, mu, sigma^2, recurrence class and survival probability", cmd_exact},
      {"fp-sim", "simulate the firework process and estimate P(M > k)", cmd_fp_sim},
      {"rfp-sim", "simulate the reverse firework process and estimate N(n)/n", cmd_rfp_sim},
      {"verify", "run a verification suite", cmd_verify},
      {"bounds", "sweep u_k against an explicit tail bound", cmd_bounds},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].fn(cfg, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TailDataUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rumor::cli
