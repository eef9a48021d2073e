#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tollgrid/delay.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/parallel.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/projection.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

struct SoOptions {
  double tol = 1e-7;      // projected-gradient residual, relative to gradient norm
  int max_iters = 50000;  // per restart
  int restarts = 8;
  std::uint64_t seed = 0;
};

struct SoSolution {
  PathFlow flow;
  double objective = 0.0;      // social delay of `flow`
  double kkt_residual = 0.0;   // max equal-cost / complementarity violation
  int restarts_used = 0;
  int best_restart = 0;
  bool converged = false;      // best restart met the residual tolerance
};

namespace detail {

/// Gradient of the social delay in path-flow coordinates.  Per link the
/// marginal contribution is e_l + f_l * de_l/df^class; path entries sum it.
inline void social_delay_gradient(const Network& net, const PathSet& paths, const LinkFlow& lf,
                                  std::vector<double>& gh, std::vector<double>& ga) {
  std::vector<double> dh(net.num_links()), da(net.num_links());
  for (std::size_t l = 0; l < net.num_links(); ++l) {
    const auto& link = net.links()[l];
    const double e = link_delay(link, lf.h[l], lf.a[l]);
    const auto [geh, gea] = link_delay_grad(link, lf.h[l], lf.a[l]);
    const double total = lf.total(static_cast<int>(l));
    dh[l] = e + total * geh;
    da[l] = e + total * gea;
  }
  gh.assign(paths.num_paths(), 0.0);
  ga.assign(paths.num_paths(), 0.0);
  for (std::size_t p = 0; p < paths.num_paths(); ++p) {
    for (int li : paths.path(static_cast<int>(p)).links) {
      gh[p] += dh[li];
      ga[p] += da[li];
    }
  }
}

struct SoRestartOutcome {
  PathFlow flow;
  double objective = 0.0;
  bool converged = false;
};

inline SoRestartOutcome so_run_restart(const Network& net, const PathSet& paths,
                                       const SoOptions& opts, int restart) {
  PathFlow x = start_flow(net, paths, opts.seed, restart);
  project_feasible(net, paths, x);
  double obj = social_delay(net, aggregate(net, paths, x));

  std::vector<double> gh, ga;
  bool converged = false;
  double step = 1.0;
  for (int it = 0; it < opts.max_iters; ++it) {
    const LinkFlow lf = aggregate(net, paths, x);
    social_delay_gradient(net, paths, lf, gh, ga);

    double gnorm2 = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) gnorm2 += gh[p] * gh[p] + ga[p] * ga[p];

    // Residual of the unit-step projected-gradient fixed point.
    PathFlow probe = x;
    for (std::size_t p = 0; p < x.size(); ++p) {
      probe.h[p] -= gh[p];
      probe.a[p] -= ga[p];
    }
    project_feasible(net, paths, probe);
    double res2 = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      const double dh = probe.h[p] - x.h[p];
      const double da = probe.a[p] - x.a[p];
      res2 += dh * dh + da * da;
    }
    if (std::sqrt(res2) <= opts.tol * std::max(1.0, std::sqrt(gnorm2))) {
      converged = true;
      break;
    }

    // Backtracking line search on the projected step.
    step = std::min(step * 4.0, 1e8);
    bool moved = false;
    while (step >= 1e-14) {
      PathFlow cand = x;
      for (std::size_t p = 0; p < x.size(); ++p) {
        cand.h[p] -= step * gh[p];
        cand.a[p] -= step * ga[p];
      }
      project_feasible(net, paths, cand);
      double dist2 = 0.0;
      for (std::size_t p = 0; p < x.size(); ++p) {
        const double dh = cand.h[p] - x.h[p];
        const double da = cand.a[p] - x.a[p];
        dist2 += dh * dh + da * da;
      }
      if (dist2 == 0.0) break;  // projected step is a fixed point at this scale
      const double cand_obj = social_delay(net, aggregate(net, paths, cand));
      if (cand_obj <= obj - 1e-4 / step * dist2) {
        x = std::move(cand);
        obj = cand_obj;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // no descent step left at line-search resolution
  }
  return SoRestartOutcome{std::move(x), obj, converged};
}

/// Max violation of equal-cost on used paths / no-better-unused, per group.
inline double stationarity_violation(const Network& net, const PathSet& paths,
                                     const PathFlow& f, const std::vector<double>& qh,
                                     const std::vector<double>& qa, double flow_thresh) {
  double worst = 0.0;
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    for (int cls = 0; cls < 2; ++cls) {
      const auto& flow = cls == 0 ? f.h : f.a;
      const auto& cost = cls == 0 ? qh : qa;
      double used_min = std::numeric_limits<double>::infinity();
      double used_max = -used_min;
      for (int p : paths.for_od(static_cast<int>(w))) {
        if (flow[p] > flow_thresh) {
          used_min = std::min(used_min, cost[p]);
          used_max = std::max(used_max, cost[p]);
        }
      }
      if (used_max < used_min) continue;  // nothing used (zero demand)
      worst = std::max(worst, used_max - used_min);
      for (int p : paths.for_od(static_cast<int>(w))) {
        if (flow[p] <= flow_thresh) worst = std::max(worst, used_min - cost[p]);
      }
    }
  }
  return worst;
}

}  // namespace detail

/// Minimizes social delay over feasible flows by multi-start projected
/// gradient descent.  The objective is nonconvex whenever m != M somewhere,
/// so restarts matter; the best restart wins, ties to the lowest index.
inline SoSolution solve_social_optimum(const Network& net, const PathSet& paths,
                                       const SoOptions& opts = {}) {
  if (opts.restarts < 1) throw Error("solve_social_optimum requires restarts >= 1");
  std::vector<detail::SoRestartOutcome> runs(opts.restarts);
  parallel_for_index(opts.restarts,
                     [&](int k) { runs[k] = detail::so_run_restart(net, paths, opts, k); });

  int best = 0;
  for (int k = 1; k < opts.restarts; ++k) {
    if (runs[k].objective < runs[best].objective) best = k;
  }
  SoSolution sol;
  sol.flow = std::move(runs[best].flow);
  sol.objective = runs[best].objective;
  sol.restarts_used = opts.restarts;
  sol.best_restart = best;
  sol.converged = runs[best].converged;

  const LinkFlow lf = aggregate(net, paths, sol.flow);
  std::vector<double> gh, ga;
  detail::social_delay_gradient(net, paths, lf, gh, ga);
  sol.kkt_residual = detail::stationarity_violation(net, paths, sol.flow, gh, ga, 1e-6);
  return sol;
}

/// First-order optimality report for a candidate optimum under given prices:
/// used paths (flow > tol) of each pair/class must share one cost, unused
/// paths must not undercut it.
struct KktReport {
  double max_violation = 0.0;
  bool pass = false;
};

inline KktReport verify_so_kkt(const Network& net, const PathSet& paths, const PathFlow& flow,
                               const PriceVector& tau, double tol) {
  const PathCosts pc = path_costs(net, paths, aggregate(net, paths, flow), tau);
  KktReport rep;
  rep.max_violation = detail::stationarity_violation(net, paths, flow, pc.h, pc.a, tol);
  rep.pass = rep.max_violation <= tol;
  return rep;
}

}  // namespace tollgrid
