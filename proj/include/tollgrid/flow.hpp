#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Per-path flows of the two vehicle classes, indexed like PathSet::paths().
struct PathFlow {
  std::vector<double> h;
  std::vector<double> a;

  static PathFlow zeros(std::size_t num_paths) {
    return PathFlow{std::vector<double>(num_paths, 0.0), std::vector<double>(num_paths, 0.0)};
  }
  std::size_t size() const { return h.size(); }
};

/// Per-link class flows induced by a PathFlow.
struct LinkFlow {
  std::vector<double> h;
  std::vector<double> a;

  double total(int link) const { return h[link] + a[link]; }
  std::size_t size() const { return h.size(); }
};

/// Sums path flows onto links: f_l = sum of f_p over paths containing l.
inline LinkFlow aggregate(const Network& net, const PathSet& paths, const PathFlow& f) {
  if (f.h.size() != paths.num_paths() || f.a.size() != paths.num_paths())
    throw Error("path flow dimension does not match path set");
  LinkFlow lf{std::vector<double>(net.num_links(), 0.0),
              std::vector<double>(net.num_links(), 0.0)};
  for (std::size_t p = 0; p < paths.num_paths(); ++p) {
    for (int li : paths.path(static_cast<int>(p)).links) {
      lf.h[li] += f.h[p];
      lf.a[li] += f.a[p];
    }
  }
  return lf;
}

/// Demand-balance and nonnegativity diagnostics for a candidate flow.
struct FeasibilityReport {
  bool feasible = false;
  double worst_demand_residual = 0.0;  // max over pairs/classes of |sum - demand|
  double most_negative = 0.0;          // min path-flow entry (0 if all nonnegative)
  std::vector<double> residual_h;      // signed, per O/D pair: sum - demand
  std::vector<double> residual_a;
};

/// Checks that per-pair class flows sum to the demands within eps and that no
/// entry is below -eps.
inline FeasibilityReport is_feasible(const Network& net, const PathSet& paths,
                                     const PathFlow& f, double eps = 1e-8) {
  if (f.h.size() != paths.num_paths() || f.a.size() != paths.num_paths())
    throw Error("path flow dimension does not match path set");
  FeasibilityReport rep;
  rep.residual_h.resize(net.num_ods(), 0.0);
  rep.residual_a.resize(net.num_ods(), 0.0);
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    double sh = 0.0, sa = 0.0;
    for (int p : paths.for_od(static_cast<int>(w))) {
      sh += f.h[p];
      sa += f.a[p];
    }
    rep.residual_h[w] = sh - net.od_pairs()[w].demand_h;
    rep.residual_a[w] = sa - net.od_pairs()[w].demand_a;
    rep.worst_demand_residual = std::max(
        rep.worst_demand_residual, std::max(std::abs(rep.residual_h[w]), std::abs(rep.residual_a[w])));
  }
  for (std::size_t p = 0; p < f.size(); ++p)
    rep.most_negative = std::min(rep.most_negative, std::min(f.h[p], f.a[p]));
  rep.feasible = rep.worst_demand_residual <= eps && rep.most_negative >= -eps;
  return rep;
}

namespace detail {

/// Feasible restart point shared by the solvers: uniform split for restart 0,
/// seeded Dirichlet(1) splits otherwise.  Pair and class order is fixed, so
/// the random stream (and hence the point) is reproducible.
inline PathFlow start_flow(const Network& net, const PathSet& paths, std::uint64_t seed,
                           int restart) {
  PathFlow f = PathFlow::zeros(paths.num_paths());
  if (restart == 0) {
    for (std::size_t w = 0; w < net.num_ods(); ++w) {
      const auto& idx = paths.for_od(static_cast<int>(w));
      const double nh = net.od_pairs()[w].demand_h / static_cast<double>(idx.size());
      const double na = net.od_pairs()[w].demand_a / static_cast<double>(idx.size());
      for (int p : idx) {
        f.h[p] = nh;
        f.a[p] = na;
      }
    }
    return f;
  }
  std::mt19937_64 rng(restart_seed(seed, restart));
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    const auto& idx = paths.for_od(static_cast<int>(w));
    const auto sh = random_split(rng, net.od_pairs()[w].demand_h, idx.size());
    const auto sa = random_split(rng, net.od_pairs()[w].demand_a, idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      f.h[idx[i]] = sh[i];
      f.a[idx[i]] = sa[i];
    }
  }
  return f;
}

}  // namespace detail

}  // namespace tollgrid
