#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tollgrid/network.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Simple directed path, stored as link indices into Network::links().
/// Each path belongs to exactly one O/D pair (`od` indexes od_pairs()).
struct Path {
  int od = -1;
  std::vector<int> links;
};

/// All simple paths per O/D pair, in a fixed enumeration order.
///
/// Paths are stored flat; `for_od(w)` gives the indices belonging to pair w.
/// The flat index is the canonical path identifier used by PathFlow.
class PathSet {
 public:
  PathSet(std::vector<Path> paths, std::size_t num_ods) : paths_(std::move(paths)) {
    by_od_.resize(num_ods);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const int w = paths_[i].od;
      if (w < 0 || static_cast<std::size_t>(w) >= num_ods)
        throw Error("path references unknown od pair index");
      by_od_[w].push_back(static_cast<int>(i));
    }
  }

  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int p) const { return paths_[p]; }
  std::size_t num_paths() const { return paths_.size(); }
  std::size_t num_ods() const { return by_od_.size(); }

  /// Flat path indices of one O/D pair, in enumeration order.
  const std::vector<int>& for_od(int od) const { return by_od_[od]; }

 private:
  std::vector<Path> paths_;
  std::vector<std::vector<int>> by_od_;
};

namespace detail {

inline void dfs_paths(const Network& net, int node, int dest, int od,
                      std::vector<char>& visited, std::vector<int>& stack,
                      std::vector<Path>& out, std::size_t cap) {
  if (node == dest) {
    if (out.size() >= cap)
      throw Error("od pair " + net.od_pairs()[od].id + ": more than " +
                  std::to_string(cap) + " simple paths; network too dense for path enumeration");
    out.push_back(Path{od, stack});
    return;
  }
  visited[node] = 1;
  for (int li : net.out_links(node)) {
    const int next = net.node_index(net.links()[li].head);
    if (visited[next]) continue;
    stack.push_back(li);
    dfs_paths(net, next, dest, od, visited, stack, out, cap);
    stack.pop_back();
  }
  visited[node] = 0;
}

}  // namespace detail

/// Enumerates every simple path of every O/D pair.
///
/// Depth-first over out-links in declaration order, so the per-pair list is
/// sorted lexicographically by link-index sequence and identical across runs.
/// Throws once any single pair exceeds `max_paths_per_od`.
inline PathSet enumerate_paths(const Network& net, std::size_t max_paths_per_od = 10000) {
  std::vector<Path> all;
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    const auto& od = net.od_pairs()[w];
    std::vector<char> visited(net.nodes().size(), 0);
    std::vector<int> stack;
    std::vector<Path> mine;
    detail::dfs_paths(net, net.node_index(od.origin), net.node_index(od.destination),
                      static_cast<int>(w), visited, stack, mine, max_paths_per_od);
    if (mine.empty()) throw Error("od pair " + od.id + ": no path found");
    all.insert(all.end(), mine.begin(), mine.end());
  }
  return PathSet(std::move(all), net.num_ods());
}

}  // namespace tollgrid
