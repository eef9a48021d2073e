#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Euclidean projection onto the scaled simplex { x >= 0, sum x = s },
/// applied to the entries of `v` selected by `idx`, in place.
/// Sort-based threshold algorithm, O(n log n).
inline void project_simplex_at(std::vector<double>& v, const std::vector<int>& idx, double s) {
  const std::size_t n = idx.size();
  if (n == 0) {
    if (s > 0.0) throw Error("cannot project positive demand onto empty path list");
    return;
  }
  if (s <= 0.0) {
    for (int i : idx) v[i] = 0.0;
    return;
  }
  std::vector<double> u;
  u.reserve(n);
  for (int i : idx) u.push_back(v[i]);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    cum += u[j];
    const double t = (cum - s) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  for (int i : idx) v[i] = std::max(v[i] - theta, 0.0);
}

/// Projects a path flow onto the feasible set: per O/D pair and class, the
/// nearest point with nonnegative entries summing to the demand.
inline void project_feasible(const Network& net, const PathSet& paths, PathFlow& f) {
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    const auto& idx = paths.for_od(static_cast<int>(w));
    project_simplex_at(f.h, idx, net.od_pairs()[w].demand_h);
    project_simplex_at(f.a, idx, net.od_pairs()[w].demand_a);
  }
}

}  // namespace tollgrid
