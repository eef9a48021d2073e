#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tollgrid/delay.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/parallel.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/projection.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

struct EqOptions {
  double tol = 1e-6;     // normalized gap at which a flow counts as equilibrium
  int max_iters = 5000;  // per restart
  int restarts = 16;
  std::uint64_t seed = 0;
};

struct EquilibriumResult {
  PathFlow flow;
  double gap = 0.0;             // raw gap at `flow`
  double normalized_gap = 0.0;  // gap / total equilibrium cost
  std::vector<OdCost> od_costs;
  double social_delay = 0.0;
  double total_cost = 0.0;
  bool converged = false;
  int restart = 0;
  std::uint64_t price_hash = 0;  // identifies the tolls this result was solved under
};

/// Stable fingerprint of a price vector, stored on results so that later
/// stages can detect mixing of flows solved under different tolls.
inline std::uint64_t price_hash(const PriceVector& tau) {
  std::string s;
  for (double v : tau.h) {
    s += detail::fmt_double(v);
    s += ',';
  }
  s += ';';
  for (double v : tau.a) {
    s += detail::fmt_double(v);
    s += ',';
  }
  return detail::fnv1a(s);
}

namespace detail {

/// One full evaluation of a candidate flow: link flows, path costs, per-pair
/// minimum costs, raw and normalized gap, social delay, total cost.
struct GapEval {
  LinkFlow lf;
  PathCosts pc;
  std::vector<OdCost> mins;
  double raw = 0.0;
  double normalizer = 0.0;
  double normalized = 0.0;
  double social = 0.0;
  double total = 0.0;
};

inline GapEval gap_eval(const Network& net, const PathSet& paths, const PathFlow& f,
                        const PriceVector& tau) {
  GapEval ev;
  ev.lf = aggregate(net, paths, f);
  ev.pc = path_costs(net, paths, ev.lf, tau);
  ev.mins.resize(net.num_ods());
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    double mh = std::numeric_limits<double>::infinity();
    double ma = mh;
    for (int p : paths.for_od(static_cast<int>(w))) {
      mh = std::min(mh, ev.pc.h[p]);
      ma = std::min(ma, ev.pc.a[p]);
    }
    ev.mins[w] = OdCost{mh, ma};
    for (int p : paths.for_od(static_cast<int>(w)))
      ev.raw += f.h[p] * (ev.pc.h[p] - mh) + f.a[p] * (ev.pc.a[p] - ma);
    ev.normalizer +=
        net.od_pairs()[w].demand_h * mh + net.od_pairs()[w].demand_a * ma;
  }
  ev.normalized = ev.raw / std::max(ev.normalizer, 1e-300);
  ev.social = social_delay(net, ev.lf);
  for (std::size_t p = 0; p < paths.num_paths(); ++p)
    ev.total += f.h[p] * ev.pc.h[p] + f.a[p] * ev.pc.a[p];
  return ev;
}

/// All-or-nothing target: each pair/class loads its demand on the current
/// cheapest path (lowest index on ties).
inline PathFlow aon_target(const Network& net, const PathSet& paths, const GapEval& ev) {
  PathFlow y = PathFlow::zeros(paths.num_paths());
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    int ph = -1, pa = -1;
    for (int p : paths.for_od(static_cast<int>(w))) {
      if (ph < 0 || ev.pc.h[p] < ev.pc.h[ph]) ph = p;
      if (pa < 0 || ev.pc.a[p] < ev.pc.a[pa]) pa = p;
    }
    y.h[ph] = net.od_pairs()[w].demand_h;
    y.a[pa] = net.od_pairs()[w].demand_a;
  }
  return y;
}

inline double path_cost_at(const Network& net, const PathSet& paths, const LinkFlow& lf,
                           const PriceVector& tau, int p, int cls) {
  double c = 0.0;
  for (int li : paths.path(p).links) {
    c += link_delay(net.links()[li], lf.h[li], lf.a[li]);
    c += cls == 0 ? tau.h[li] : tau.a[li];
  }
  return c;
}

inline void shift_path_flow(const PathSet& paths, LinkFlow& lf, int p, int cls, double delta) {
  auto& v = cls == 0 ? lf.h : lf.a;
  for (int li : paths.path(p).links) v[li] = std::max(0.0, v[li] + delta);
}

/// Moves flow of one pair/class from its costliest used path toward its
/// cheapest path until the two costs meet (bisection on the amount).
/// Resolves states where gradient-style steps stall, e.g. on connected sets
/// of equilibria.  Returns true when flow was moved.
inline bool equilibrate_group(const Network& net, const PathSet& paths, const PriceVector& tau,
                              PathFlow& x, LinkFlow& lf, int w, int cls) {
  const auto& idx = paths.for_od(w);
  auto& flow = cls == 0 ? x.h : x.a;
  int pmax = -1, pmin = -1;
  double cmax = 0.0, cmin = 0.0;
  for (int p : idx) {
    const double c = path_cost_at(net, paths, lf, tau, p, cls);
    if (flow[p] > 1e-12 && (pmax < 0 || c > cmax)) {
      pmax = p;
      cmax = c;
    }
    if (pmin < 0 || c < cmin) {
      pmin = p;
      cmin = c;
    }
  }
  if (pmax < 0 || pmax == pmin) return false;
  if (cmax - cmin <= 1e-14 * std::max(1.0, std::abs(cmin))) return false;

  const double hi = flow[pmax];
  auto diff_at = [&](double delta) {
    LinkFlow tmp = lf;
    shift_path_flow(paths, tmp, pmax, cls, -delta);
    shift_path_flow(paths, tmp, pmin, cls, delta);
    return path_cost_at(net, paths, tmp, tau, pmin, cls) -
           path_cost_at(net, paths, tmp, tau, pmax, cls);
  };
  double delta = hi;
  if (diff_at(hi) > 0.0) {
    double lo = 0.0, up = hi;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + up);
      if (diff_at(mid) <= 0.0)
        lo = mid;
      else
        up = mid;
    }
    delta = lo;
  }
  if (delta <= 0.0) return false;
  shift_path_flow(paths, lf, pmax, cls, -delta);
  shift_path_flow(paths, lf, pmin, cls, delta);
  flow[pmax] = std::max(0.0, flow[pmax] - delta);
  flow[pmin] += delta;
  return true;
}

inline EquilibriumResult eq_run_restart(const Network& net, const PathSet& paths,
                                        const PriceVector& tau, const EqOptions& opts,
                                        int restart, std::uint64_t hash) {
  PathFlow x = start_flow(net, paths, opts.seed, restart);
  GapEval ev = gap_eval(net, paths, x, tau);
  PathFlow best = x;
  double best_ngap = ev.normalized;
  int msa_k = 0;
  int stalled = 0;

  for (int it = 0; it < opts.max_iters && ev.normalized > opts.tol; ++it) {
    if (stalled > 150) break;  // no progress for many iterations; give up early
    const PathFlow y = aon_target(net, paths, ev);

    // Step toward the all-or-nothing target while the raw gap drops.
    bool moved = false;
    for (double t = 1.0; t >= 1e-12; t *= 0.5) {
      PathFlow xc = x;
      for (std::size_t p = 0; p < x.size(); ++p) {
        xc.h[p] += t * (y.h[p] - x.h[p]);
        xc.a[p] += t * (y.a[p] - x.a[p]);
      }
      GapEval evc = gap_eval(net, paths, xc, tau);
      if (evc.raw <= ev.raw * (1.0 - 1e-4)) {
        x = std::move(xc);
        ev = std::move(evc);
        moved = true;
        break;
      }
    }

    // Pairwise cost equilibration when the target direction stalls.
    if (!moved) {
      PathFlow x2 = x;
      LinkFlow lf2 = ev.lf;
      for (std::size_t w = 0; w < net.num_ods(); ++w) {
        equilibrate_group(net, paths, tau, x2, lf2, static_cast<int>(w), 0);
        equilibrate_group(net, paths, tau, x2, lf2, static_cast<int>(w), 1);
      }
      GapEval ev2 = gap_eval(net, paths, x2, tau);
      if (ev2.raw < ev.raw * (1.0 - 1e-12)) {
        x = std::move(x2);
        ev = std::move(ev2);
        moved = true;
      }
    }

    // Averaging fallback keeps the iteration moving through flat spots.
    if (!moved) {
      const double t = 1.0 / static_cast<double>(msa_k + 2);
      ++msa_k;
      for (std::size_t p = 0; p < x.size(); ++p) {
        x.h[p] += t * (y.h[p] - x.h[p]);
        x.a[p] += t * (y.a[p] - x.a[p]);
      }
      ev = gap_eval(net, paths, x, tau);
    }

    if (ev.normalized < best_ngap * (1.0 - 1e-12)) {
      best_ngap = ev.normalized;
      best = x;
      stalled = 0;
    } else {
      ++stalled;
    }
  }
  if (ev.normalized < best_ngap) {
    best_ngap = ev.normalized;
    best = x;
  }

  const GapEval evb = gap_eval(net, paths, best, tau);
  EquilibriumResult res;
  res.flow = std::move(best);
  res.gap = evb.raw;
  res.normalized_gap = evb.normalized;
  res.od_costs = evb.mins;
  res.social_delay = evb.social;
  res.total_cost = evb.total;
  res.converged = evb.normalized <= opts.tol;
  res.restart = restart;
  res.price_hash = hash;
  return res;
}

}  // namespace detail

/// Total violation of the equilibrium conditions: flow-weighted excess of
/// each path's cost over its pair's cheapest cost, summed over both classes.
/// Zero exactly at a Wardrop equilibrium.
inline double wardrop_gap(const Network& net, const PathSet& paths, const PathFlow& f,
                          const PriceVector& tau) {
  validate_prices(net, tau);
  if (!is_feasible(net, paths, f).feasible)
    throw Error("wardrop gap of infeasible flow");
  return detail::gap_eval(net, paths, f, tau).raw;
}

/// Gap divided by the total cost of routing all demand at the cheapest
/// per-pair costs; scale-free equilibrium quality measure.
inline double normalized_wardrop_gap(const Network& net, const PathSet& paths,
                                     const PathFlow& f, const PriceVector& tau) {
  validate_prices(net, tau);
  if (!is_feasible(net, paths, f).feasible)
    throw Error("wardrop gap of infeasible flow");
  return detail::gap_eval(net, paths, f, tau).normalized;
}

/// Multi-start equilibrium search under fixed tolls.  Returns one result per
/// restart, in restart order; non-converged restarts are kept and flagged.
inline std::vector<EquilibriumResult> solve_equilibrium(const Network& net,
                                                        const PathSet& paths,
                                                        const PriceVector& tau,
                                                        const EqOptions& opts = {}) {
  validate_prices(net, tau);
  if (opts.restarts < 1) throw Error("solve_equilibrium requires restarts >= 1");
  const std::uint64_t hash = price_hash(tau);
  std::vector<EquilibriumResult> out(opts.restarts);
  parallel_for_index(opts.restarts, [&](int k) {
    out[k] = detail::eq_run_restart(net, paths, tau, opts, k, hash);
  });
  return out;
}

/// Indices of pairwise-distinct converged equilibria (first of each cluster,
/// in restart order).  Distance is Euclidean on the class-resolved link
/// flows, since path-flow decompositions of one equilibrium are not unique.
inline std::vector<int> distinct_equilibria(const Network& net, const PathSet& paths,
                                            const std::vector<EquilibriumResult>& results,
                                            double dist_tol = 1e-5) {
  std::vector<int> reps;
  std::vector<LinkFlow> rep_flows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].converged) continue;
    LinkFlow lf = aggregate(net, paths, results[i].flow);
    bool is_new = true;
    for (const auto& seen : rep_flows) {
      double d2 = 0.0;
      for (std::size_t l = 0; l < lf.size(); ++l) {
        const double dh = lf.h[l] - seen.h[l];
        const double da = lf.a[l] - seen.a[l];
        d2 += dh * dh + da * da;
      }
      if (std::sqrt(d2) < dist_tol) {
        is_new = false;
        break;
      }
    }
    if (is_new) {
      reps.push_back(static_cast<int>(i));
      rep_flows.push_back(std::move(lf));
    }
  }
  return reps;
}

}  // namespace tollgrid
