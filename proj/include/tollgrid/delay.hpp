#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Per-link, per-class tolls. Nonnegative and finite.
struct PriceVector {
  std::vector<double> h;
  std::vector<double> a;

  static PriceVector zeros(std::size_t num_links) {
    return PriceVector{std::vector<double>(num_links, 0.0),
                       std::vector<double>(num_links, 0.0)};
  }
  /// Same toll for both classes on every link.
  static PriceVector undifferentiated(std::vector<double> tau) {
    PriceVector pv;
    pv.h = tau;
    pv.a = std::move(tau);
    return pv;
  }
  std::size_t size() const { return h.size(); }
};

inline void validate_prices(const Network& net, const PriceVector& tau) {
  if (tau.h.size() != net.num_links() || tau.a.size() != net.num_links())
    throw Error("price vector dimension does not match network links");
  for (std::size_t l = 0; l < tau.size(); ++l) {
    if (!std::isfinite(tau.h[l]) || !std::isfinite(tau.a[l]) || tau.h[l] < 0.0 || tau.a[l] < 0.0)
      throw Error("link " + net.links()[l].id + ": prices must be finite and >= 0");
  }
}

/// Travel delay a + gamma * (fh/m + fa/M)^beta of one link.
inline double link_delay(const Link& link, double fh, double fa) {
  if (fh < 0.0 || fa < 0.0) throw Error("link " + link.id + ": negative flow in delay evaluation");
  const double x = fh / link.m + fa / link.M;
  return link.a + link.gamma * detail::pow_int(x, link.beta);
}

/// Partial derivatives of link_delay with respect to (fh, fa).
///
/// The autonomous component is computed as mu * (human component), which the
/// algebra gives exactly; downstream identities rely on that factorization.
inline std::pair<double, double> link_delay_grad(const Link& link, double fh, double fa) {
  if (fh < 0.0 || fa < 0.0)
    throw Error("link " + link.id + ": negative flow in delay gradient");
  const double x = fh / link.m + fa / link.M;
  const double gh =
      link.gamma * static_cast<double>(link.beta) / link.m * detail::pow_int(x, link.beta - 1);
  return {gh, link.mu() * gh};
}

/// Per-path delays e_p = sum of link delays along p, at the given link flows.
inline std::vector<double> path_delays(const Network& net, const PathSet& paths,
                                       const LinkFlow& lf) {
  std::vector<double> e(net.num_links());
  for (std::size_t l = 0; l < net.num_links(); ++l)
    e[l] = link_delay(net.links()[l], lf.h[l], lf.a[l]);
  std::vector<double> ep(paths.num_paths(), 0.0);
  for (std::size_t p = 0; p < paths.num_paths(); ++p)
    for (int li : paths.path(static_cast<int>(p)).links) ep[p] += e[li];
  return ep;
}

/// Per-path class costs c_p = e_p + sum of the class's link tolls along p.
struct PathCosts {
  std::vector<double> h;
  std::vector<double> a;
};

inline PathCosts path_costs(const Network& net, const PathSet& paths, const LinkFlow& lf,
                            const PriceVector& tau) {
  std::vector<double> ep = path_delays(net, paths, lf);
  PathCosts pc{ep, std::move(ep)};
  for (std::size_t p = 0; p < paths.num_paths(); ++p) {
    double th = 0.0, ta = 0.0;
    for (int li : paths.path(static_cast<int>(p)).links) {
      th += tau.h[li];
      ta += tau.a[li];
    }
    pc.h[p] += th;
    pc.a[p] += ta;
  }
  return pc;
}

/// Social delay J = sum over links of (total flow) * (link delay).
inline double social_delay(const Network& net, const LinkFlow& lf) {
  double j = 0.0;
  for (std::size_t l = 0; l < net.num_links(); ++l)
    j += lf.total(static_cast<int>(l)) * link_delay(net.links()[l], lf.h[l], lf.a[l]);
  return j;
}

inline double social_delay(const Network& net, const PathSet& paths, const PathFlow& f,
                           bool strict = false) {
  if (strict) {
    const auto rep = is_feasible(net, paths, f);
    if (!rep.feasible) throw Error("social delay of infeasible flow (strict mode)");
  }
  return social_delay(net, aggregate(net, paths, f));
}

/// Total cost C = sum over paths of f_p^class * c_p^class, both classes.
inline double total_cost(const Network& net, const PathSet& paths, const PathFlow& f,
                         const PriceVector& tau) {
  validate_prices(net, tau);
  const LinkFlow lf = aggregate(net, paths, f);
  const PathCosts pc = path_costs(net, paths, lf, tau);
  double c = 0.0;
  for (std::size_t p = 0; p < paths.num_paths(); ++p) c += f.h[p] * pc.h[p] + f.a[p] * pc.a[p];
  return c;
}

/// Minimum path cost per O/D pair and class.
struct OdCost {
  double h = 0.0;
  double a = 0.0;
};

inline std::vector<OdCost> od_travel_costs(const Network& net, const PathSet& paths,
                                           const PathFlow& f, const PriceVector& tau) {
  const LinkFlow lf = aggregate(net, paths, f);
  const PathCosts pc = path_costs(net, paths, lf, tau);
  std::vector<OdCost> out(net.num_ods());
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    double mh = std::numeric_limits<double>::infinity();
    double ma = mh;
    for (int p : paths.for_od(static_cast<int>(w))) {
      mh = std::min(mh, pc.h[p]);
      ma = std::min(ma, pc.a[p]);
    }
    out[w] = OdCost{mh, ma};
  }
  return out;
}

/// Full cost picture of one flow under one price vector.
struct CostBreakdown {
  std::vector<double> link_delays;  // e_l
  std::vector<double> path_delay;   // e_p
  std::vector<double> path_cost_h;  // e_p + per-path human tolls
  std::vector<double> path_cost_a;
  double social_delay = 0.0;
  double total_cost = 0.0;
};

inline CostBreakdown cost_breakdown(const Network& net, const PathSet& paths, const PathFlow& f,
                                    const PriceVector& tau) {
  validate_prices(net, tau);
  const LinkFlow lf = aggregate(net, paths, f);
  CostBreakdown cb;
  cb.link_delays.resize(net.num_links());
  for (std::size_t l = 0; l < net.num_links(); ++l)
    cb.link_delays[l] = link_delay(net.links()[l], lf.h[l], lf.a[l]);
  cb.path_delay = path_delays(net, paths, lf);
  PathCosts pc = path_costs(net, paths, lf, tau);
  cb.path_cost_h = std::move(pc.h);
  cb.path_cost_a = std::move(pc.a);
  cb.social_delay = social_delay(net, lf);
  cb.total_cost = 0.0;
  for (std::size_t p = 0; p < paths.num_paths(); ++p)
    cb.total_cost += f.h[p] * cb.path_cost_h[p] + f.a[p] * cb.path_cost_a[p];
  return cb;
}

}  // namespace tollgrid
