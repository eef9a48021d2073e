#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "tollgrid/util.hpp"

namespace tollgrid {

/// Directed link with the two-capacity congestion model.
///
/// Delay per unit flow is  a + gamma * (fh/m + fa/M)^beta,  where fh and fa
/// are the human-driven and autonomous flows on the link.  m is the capacity
/// with human-driven vehicles only, M the capacity with autonomous vehicles
/// only; autonomous vehicles keep shorter headways, so M >= m.
struct Link {
  std::string id;
  std::string tail;
  std::string head;
  double a = 0.0;      // free-flow delay, > 0
  double gamma = 0.0;  // congestion coefficient, > 0
  int beta = 1;        // congestion exponent, positive integer
  double m = 0.0;      // all-human capacity, > 0
  double M = 0.0;      // all-autonomous capacity, >= m

  /// Capacity asymmetry m/M, in (0, 1].
  double mu() const { return m / M; }
};

/// Origin/destination pair with fixed class demands.
struct OdPair {
  std::string id;
  std::string origin;
  std::string destination;
  double demand_h = 0.0;
  double demand_a = 0.0;
};

/// Validated road network: nodes, links, O/D demands.
///
/// Construction checks every structural invariant (unique ids, declared
/// endpoints, positive parameters, m <= M, reachable destinations) and
/// throws Error naming the offending field otherwise.  Instances are
/// immutable afterwards.
class Network {
 public:
  Network(std::vector<std::string> nodes, std::vector<Link> links,
          std::vector<OdPair> od_pairs)
      : nodes_(std::move(nodes)), links_(std::move(links)), od_pairs_(std::move(od_pairs)) {
    validate();
    index();
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<OdPair>& od_pairs() const { return od_pairs_; }

  std::size_t num_links() const { return links_.size(); }
  std::size_t num_ods() const { return od_pairs_.size(); }

  int node_index(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) throw Error("unknown node id: " + id);
    return it->second;
  }

  /// Links leaving a node, as indices into links() in declaration order.
  const std::vector<int>& out_links(int node) const { return out_links_[node]; }

  /// Mean capacity asymmetry over links.
  double mean_mu() const {
    double s = 0.0;
    for (const auto& l : links_) s += l.mu();
    return s / static_cast<double>(links_.size());
  }

  /// True when every link has the same mu up to `rel_tol` relative spread.
  bool is_homogeneous(double rel_tol = 1e-12) const {
    const double mean = mean_mu();
    for (const auto& l : links_) {
      if (std::abs(l.mu() - mean) > rel_tol * std::max(1.0, std::abs(mean))) return false;
    }
    return true;
  }

 private:
  void validate() {
    if (nodes_.empty()) throw Error("network has no nodes");
    if (links_.empty()) throw Error("network has no links");
    {
      std::set<std::string> seen;
      for (const auto& n : nodes_) {
        if (!seen.insert(n).second) throw Error("duplicate node id: " + n);
      }
    }
    std::set<std::string> node_set(nodes_.begin(), nodes_.end());
    std::set<std::string> link_ids;
    for (const auto& l : links_) {
      if (l.id.empty()) throw Error("link with empty id");
      if (!link_ids.insert(l.id).second) throw Error("duplicate link id: " + l.id);
      if (!node_set.count(l.tail))
        throw Error("link " + l.id + ": tail is not a declared node: " + l.tail);
      if (!node_set.count(l.head))
        throw Error("link " + l.id + ": head is not a declared node: " + l.head);
      if (!(l.a > 0.0) || !std::isfinite(l.a))
        throw Error("link " + l.id + ": field a must be finite and > 0");
      if (!(l.gamma > 0.0) || !std::isfinite(l.gamma))
        throw Error("link " + l.id + ": field gamma must be finite and > 0");
      if (l.beta < 1) throw Error("link " + l.id + ": field beta must be a positive integer");
      if (!(l.m > 0.0) || !std::isfinite(l.m))
        throw Error("link " + l.id + ": field m must be finite and > 0");
      if (!std::isfinite(l.M) || !(l.M >= l.m))
        throw Error("link " + l.id + ": field M must satisfy M >= m");
    }
    std::set<std::string> od_ids;
    for (const auto& w : od_pairs_) {
      if (w.id.empty()) throw Error("od pair with empty id");
      if (!od_ids.insert(w.id).second) throw Error("duplicate od pair id: " + w.id);
      if (!node_set.count(w.origin))
        throw Error("od pair " + w.id + ": origin is not a declared node: " + w.origin);
      if (!node_set.count(w.destination))
        throw Error("od pair " + w.id + ": destination is not a declared node: " + w.destination);
      if (w.origin == w.destination)
        throw Error("od pair " + w.id + ": origin equals destination");
      if (!(w.demand_h >= 0.0) || !std::isfinite(w.demand_h))
        throw Error("od pair " + w.id + ": field demand_h must be finite and >= 0");
      if (!(w.demand_a >= 0.0) || !std::isfinite(w.demand_a))
        throw Error("od pair " + w.id + ": field demand_a must be finite and >= 0");
    }
  }

  void index() {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      node_index_[nodes_[i]] = static_cast<int>(i);
    out_links_.assign(nodes_.size(), {});
    for (std::size_t li = 0; li < links_.size(); ++li)
      out_links_[node_index_[links_[li].tail]].push_back(static_cast<int>(li));
    // every destination reachable from its origin
    for (const auto& w : od_pairs_) {
      if (!reachable(node_index(w.origin), node_index(w.destination)))
        throw Error("od pair " + w.id + ": destination " + w.destination +
                    " unreachable from origin " + w.origin);
    }
  }

  bool reachable(int from, int to) const {
    if (from == to) return true;
    std::vector<char> seen(nodes_.size(), 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int li : out_links_[u]) {
        int v = node_index_.at(links_[li].head);
        if (v == to) return true;
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
    return false;
  }

  std::vector<std::string> nodes_;
  std::vector<Link> links_;
  std::vector<OdPair> od_pairs_;
  std::map<std::string, int> node_index_;
  std::vector<std::vector<int>> out_links_;
};

}  // namespace tollgrid
