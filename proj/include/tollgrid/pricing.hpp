#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "tollgrid/delay.hpp"
#include "tollgrid/eq_solver.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/so_solver.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Externality tolls at a reference flow: each class pays the delay increase
/// its marginal vehicle imposes on the link's whole flow,
/// tau_l = (f_l^h + f_l^a) * d e_l / d f^class.  Nonnegative by construction.
inline PriceVector marginal_prices(const Network& net, const PathSet& paths,
                                   const PathFlow& fstar) {
  if (!is_feasible(net, paths, fstar).feasible)
    throw Error("marginal prices of an infeasible flow");
  const LinkFlow lf = aggregate(net, paths, fstar);
  PriceVector tau = PriceVector::zeros(net.num_links());
  for (std::size_t l = 0; l < net.num_links(); ++l) {
    const auto [gh, ga] = link_delay_grad(net.links()[l], lf.h[l], lf.a[l]);
    const double total = lf.total(static_cast<int>(l));
    tau.h[l] = total * gh;
    tau.a[l] = total * ga;
  }
  return tau;
}

/// Structure check for tolls on capacity-homogeneous networks: the
/// autonomous toll must be mu times the human toll on every link.
struct PriceStructureReport {
  bool applicable = false;   // network is capacity-homogeneous
  double mu = 0.0;
  double max_rel_deviation = 0.0;
  int worst_link = -1;
  bool pass = false;
};

inline PriceStructureReport check_price_structure(const Network& net, const PriceVector& tau,
                                                  double tol = 1e-10) {
  validate_prices(net, tau);
  PriceStructureReport rep;
  rep.applicable = net.is_homogeneous();
  if (!rep.applicable) return rep;
  rep.mu = net.mean_mu();
  for (std::size_t l = 0; l < net.num_links(); ++l) {
    const double dev =
        std::abs(tau.a[l] - rep.mu * tau.h[l]) / std::max(tau.h[l], 1e-12);
    if (dev > rep.max_rel_deviation) {
      rep.max_rel_deviation = dev;
      rep.worst_link = static_cast<int>(l);
    }
  }
  rep.pass = rep.max_rel_deviation <= tol;
  return rep;
}

struct PipelineOptions {
  SoOptions so;
  EqOptions eq;
  double within_rel_tol = 5e-3;  // per-equilibrium social-delay deviation from the optimum
};

/// End-to-end run: social optimum, externality tolls at it, then the
/// equilibria those tolls induce.
struct PipelineResult {
  SoSolution so;
  PriceVector tau;
  std::vector<EquilibriumResult> equilibria;  // one per restart
  std::vector<int> distinct;                  // representatives among converged
  double witness_gap = 0.0;  // normalized gap of the optimum itself under tau
  int num_converged = 0;
  double min_social = std::numeric_limits<double>::quiet_NaN();
  double max_social = std::numeric_limits<double>::quiet_NaN();
  double social_spread_rel = std::numeric_limits<double>::quiet_NaN();
  bool all_within_tol = false;  // every converged equilibrium near the optimum
};

inline PipelineResult price_pipeline(const Network& net, const PathSet& paths,
                                     const PipelineOptions& opts = {}) {
  PipelineResult out;
  out.so = solve_social_optimum(net, paths, opts.so);
  out.tau = marginal_prices(net, paths, out.so.flow);
  out.equilibria = solve_equilibrium(net, paths, out.tau, opts.eq);
  out.distinct = distinct_equilibria(net, paths, out.equilibria);
  out.witness_gap = normalized_wardrop_gap(net, paths, out.so.flow, out.tau);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& eq : out.equilibria) {
    if (!eq.converged) continue;
    ++out.num_converged;
    lo = std::min(lo, eq.social_delay);
    hi = std::max(hi, eq.social_delay);
  }
  if (out.num_converged > 0) {
    out.min_social = lo;
    out.max_social = hi;
    out.social_spread_rel = (hi - lo) / std::max(out.so.objective, 1e-300);
    out.all_within_tol =
        std::max(std::abs(hi - out.so.objective), std::abs(lo - out.so.objective)) <=
        opts.within_rel_tol * std::max(out.so.objective, 1e-300);
  }
  return out;
}

}  // namespace tollgrid
