#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tollgrid/delay.hpp"
#include "tollgrid/eq_solver.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/so_solver.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

struct UndiffOptions {
  double tol = 1e-6;       // inner equilibrium tolerance (normalized gap)
  int budget = 2000;       // inner equilibrium solves (one per evaluated toll vector)
  std::uint64_t seed = 0;
  double tau_max = 0.0;    // box upper bound; 0 derives 10x the largest marginal toll
  int inner_restarts = 16;
  int inner_max_iters = 2000;
  int outer_starts = 4;    // three structured starts plus seeded random ones
};

/// One evaluated toll vector and the equilibria found under it.
struct UndiffTraceEntry {
  std::vector<double> tau;                        // per-link common toll
  std::vector<double> equilibrium_social_delays;  // converged restarts only
  PathFlow best_flow;                             // flow attaining the entry minimum
  double best_social_delay = std::numeric_limits<double>::infinity();
};

struct UndiffSearchResult {
  PriceVector best_tau;
  double best_social_delay = std::numeric_limits<double>::infinity();
  PathFlow best_flow;
  int evaluations = 0;        // solver calls actually spent (cache hits are free)
  bool budget_exhausted = false;
  int widenings = 0;          // box enlargements taken after boundary hits
  double tau_max_used = 0.0;
  int best_trace = -1;        // trace index of the winning toll vector
  std::vector<UndiffTraceEntry> trace;
};

/// Best common-toll vector by nested search: outer derivative-free compass
/// search over the toll box, inner multi-start equilibrium solves.  The
/// value of a toll vector is the smallest social delay among the equilibria
/// found under it; the reported optimum is the smallest value seen.
inline UndiffSearchResult solve_undiff_mpec(const Network& net, const PathSet& paths,
                                            const UndiffOptions& opts = {}) {
  const std::size_t L = net.num_links();

  // Differentiated reference solution sizes the box and seeds the search.
  SoOptions so_opts;
  so_opts.seed = opts.seed;
  const SoSolution so = solve_social_optimum(net, paths, so_opts);
  const PriceVector tau_marg = marginal_prices(net, paths, so.flow);
  double marg_peak = 0.0;
  for (std::size_t l = 0; l < L; ++l)
    marg_peak = std::max(marg_peak, std::max(tau_marg.h[l], tau_marg.a[l]));

  UndiffSearchResult res;
  res.tau_max_used = opts.tau_max > 0.0 ? opts.tau_max : std::max(1.0, 10.0 * marg_peak);
  res.best_tau = PriceVector::zeros(L);
  res.best_flow = PathFlow::zeros(paths.num_paths());

  EqOptions inner;
  inner.tol = opts.tol;
  inner.restarts = opts.inner_restarts;
  inner.max_iters = opts.inner_max_iters;
  inner.seed = opts.seed;

  std::map<std::string, double> cache;
  const auto key_of = [](const std::vector<double>& t) {
    std::string k;
    for (double v : t) {
      k += detail::fmt_double(v);
      k += ',';
    }
    return k;
  };

  // Returns {value, true} or {inf, false} once the budget is spent.
  const auto evaluate = [&](const std::vector<double>& t) -> std::pair<double, bool> {
    const std::string key = key_of(t);
    if (const auto it = cache.find(key); it != cache.end()) return {it->second, true};
    if (res.evaluations >= opts.budget) {
      res.budget_exhausted = true;
      return {std::numeric_limits<double>::infinity(), false};
    }
    ++res.evaluations;
    const auto eqs = solve_equilibrium(net, paths, PriceVector::undifferentiated(t), inner);
    UndiffTraceEntry entry;
    entry.tau = t;
    for (const auto& eq : eqs) {
      if (!eq.converged) continue;
      entry.equilibrium_social_delays.push_back(eq.social_delay);
      if (eq.social_delay < entry.best_social_delay) {
        entry.best_social_delay = eq.social_delay;
        entry.best_flow = eq.flow;
      }
    }
    if (entry.best_social_delay < res.best_social_delay) {
      res.best_social_delay = entry.best_social_delay;
      res.best_tau = PriceVector::undifferentiated(t);
      res.best_flow = entry.best_flow;
      res.best_trace = static_cast<int>(res.trace.size());
    }
    cache[key] = entry.best_social_delay;
    res.trace.push_back(std::move(entry));
    return {cache[key], true};
  };

  const auto clamp_box = [&](std::vector<double> t) {
    for (double& v : t) v = std::clamp(v, 0.0, res.tau_max_used);
    return t;
  };

  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(L, 0.0));
  starts.push_back(clamp_box(tau_marg.h));
  {
    std::vector<double> avg(L);
    for (std::size_t l = 0; l < L; ++l) avg[l] = 0.5 * (tau_marg.h[l] + tau_marg.a[l]);
    starts.push_back(clamp_box(std::move(avg)));
  }
  {
    std::mt19937_64 rng(detail::restart_seed(opts.seed, 7777));
    for (int k = 3; k < opts.outer_starts; ++k) {
      std::vector<double> r(L);
      for (double& v : r) v = detail::uniform01(rng) * res.tau_max_used;
      starts.push_back(std::move(r));
    }
  }

  const auto run_compass = [&](std::vector<double> cur) {
    cur = clamp_box(std::move(cur));
    auto [fcur, ok] = evaluate(cur);
    if (!ok) return;
    double step = res.tau_max_used / 8.0;
    while (step > res.tau_max_used * 1e-6 && !res.budget_exhausted) {
      double best_val = fcur;
      std::vector<double> best_cand;
      for (std::size_t l = 0; l < L && !res.budget_exhausted; ++l) {
        for (const double sgn : {1.0, -1.0}) {
          std::vector<double> cand = cur;
          cand[l] = std::clamp(cand[l] + sgn * step, 0.0, res.tau_max_used);
          if (cand[l] == cur[l]) continue;
          auto [v, ok2] = evaluate(cand);
          if (!ok2) return;
          if (v < best_val - 1e-12) {
            best_val = v;
            best_cand = std::move(cand);
          }
        }
      }
      if (!best_cand.empty()) {
        cur = std::move(best_cand);
        fcur = best_val;
      } else {
        step *= 0.5;
      }
    }
  };

  int widenings = 0;
  for (;;) {
    for (const auto& s : starts) {
      run_compass(s);
      if (res.budget_exhausted) break;
    }
    if (res.budget_exhausted) break;
    bool on_boundary = false;
    for (std::size_t l = 0; l < L; ++l) {
      if (res.best_tau.h.size() == L &&
          res.best_tau.h[l] >= res.tau_max_used * (1.0 - 1e-9) && res.best_tau.h[l] > 0.0)
        on_boundary = true;
    }
    if (!on_boundary || widenings >= 3) break;
    res.tau_max_used *= 2.0;
    ++widenings;
    starts.assign(1, res.best_tau.h);  // re-polish the incumbent in the wider box
  }
  res.widenings = widenings;
  return res;
}

struct RegimeRow {
  std::string name;
  int num_converged = 0;
  double min_social = std::numeric_limits<double>::quiet_NaN();
  double max_social = std::numeric_limits<double>::quiet_NaN();
  double gap_min = std::numeric_limits<double>::quiet_NaN();  // min_social - optimum
  double gap_max = std::numeric_limits<double>::quiet_NaN();
};

struct CompareOptions {
  PipelineOptions pipeline;
  UndiffOptions undiff;
};

/// Side-by-side social delays of the three toll regimes, against the
/// computed optimum.
struct ComparisonReport {
  double j_star = std::numeric_limits<double>::quiet_NaN();
  RegimeRow no_pricing;
  RegimeRow undifferentiated;
  RegimeRow differentiated;
  PipelineResult pipeline;
  UndiffSearchResult undiff;
};

namespace detail {

inline RegimeRow regime_row_from(std::string name, const std::vector<double>& delays,
                                 double j_star) {
  RegimeRow row;
  row.name = std::move(name);
  row.num_converged = static_cast<int>(delays.size());
  if (!delays.empty()) {
    row.min_social = *std::min_element(delays.begin(), delays.end());
    row.max_social = *std::max_element(delays.begin(), delays.end());
    row.gap_min = row.min_social - j_star;
    row.gap_max = row.max_social - j_star;
  }
  return row;
}

}  // namespace detail

inline ComparisonReport compare_pricing_regimes(const Network& net, const PathSet& paths,
                                                const CompareOptions& opts = {}) {
  ComparisonReport rep;
  rep.pipeline = price_pipeline(net, paths, opts.pipeline);
  rep.j_star = rep.pipeline.so.objective;

  std::vector<double> free_delays;
  for (const auto& eq :
       solve_equilibrium(net, paths, PriceVector::zeros(net.num_links()), opts.pipeline.eq)) {
    if (eq.converged) free_delays.push_back(eq.social_delay);
  }
  rep.no_pricing = detail::regime_row_from("no pricing", free_delays, rep.j_star);

  std::vector<double> diff_delays;
  for (const auto& eq : rep.pipeline.equilibria)
    if (eq.converged) diff_delays.push_back(eq.social_delay);
  rep.differentiated = detail::regime_row_from("differentiated", diff_delays, rep.j_star);

  rep.undiff = solve_undiff_mpec(net, paths, opts.undiff);
  std::vector<double> undiff_delays;
  if (rep.undiff.best_trace >= 0)
    undiff_delays = rep.undiff.trace[rep.undiff.best_trace].equilibrium_social_delays;
  rep.undifferentiated = detail::regime_row_from("undifferentiated", undiff_delays, rep.j_star);
  return rep;
}

}  // namespace tollgrid
