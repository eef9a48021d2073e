#include <catch2/catch_amalgamated.hpp>

#include "tollgrid/eq_solver.hpp"
#include "tollgrid/fixtures.hpp"
#include "tollgrid/network_io.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/so_solver.hpp"

using namespace tollgrid;

namespace {

EqOptions quick_opts(int restarts = 4, std::uint64_t seed = 0) {
  EqOptions o;
  o.restarts = restarts;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("dominated link carries no equilibrium flow") {
  // Link 1 always costs ~2, link 2 costs ~flow: with unit demand every agent
  // prefers link 2 even at full load.
  const Network net = fixtures::pigou2_network();
  const PathSet paths = enumerate_paths(net);
  const PriceVector tau = PriceVector::zeros(net.num_links());
  const auto eqs = solve_equilibrium(net, paths, tau, quick_opts());
  for (const auto& eq : eqs) {
    REQUIRE(eq.converged);
    const LinkFlow lf = aggregate(net, paths, eq.flow);
    CHECK(lf.total(0) < 1e-6);
    CHECK(lf.total(1) == Catch::Approx(1.0).margin(1e-6));
    CHECK(eq.social_delay == Catch::Approx(1.0).margin(1e-5));
  }
}

TEST_CASE("identical parallel links split total demand evenly") {
  // Delay depends on total flow only (m = M), so equal split is the unique
  // equilibrium in totals; the class composition may vary.
  const Network net = parse_network(
      "nodes:\nu\nv\nlinks:\n"
      "1 u v a=1 gamma=1 beta=2 m=1 M=1\n"
      "2 u v a=1 gamma=1 beta=2 m=1 M=1\n"
      "od_pairs:\nuv u v demand_h=3 demand_a=1\n");
  const PathSet paths = enumerate_paths(net);
  const auto eqs =
      solve_equilibrium(net, paths, PriceVector::zeros(net.num_links()), quick_opts(4, 2));
  for (const auto& eq : eqs) {
    REQUIRE(eq.converged);
    const LinkFlow lf = aggregate(net, paths, eq.flow);
    CHECK(lf.total(0) == Catch::Approx(2.0).margin(1e-4));
    CHECK(lf.total(1) == Catch::Approx(2.0).margin(1e-4));
  }
}

TEST_CASE("equilibrium equalizes used-path costs across classes") {
  const Network net = parse_network(
      "nodes:\nu\nv\nlinks:\n"
      "1 u v a=1 gamma=1 beta=1 m=1 M=2\n"
      "2 u v a=1.2 gamma=2 beta=1 m=0.5 M=1\n"
      "od_pairs:\nuv u v demand_h=2 demand_a=2\n");
  const PathSet paths = enumerate_paths(net);
  const PriceVector tau = PriceVector::zeros(net.num_links());
  const auto eqs = solve_equilibrium(net, paths, tau, quick_opts(4, 3));
  for (const auto& eq : eqs) {
    REQUIRE(eq.converged);
    const LinkFlow lf = aggregate(net, paths, eq.flow);
    const PathCosts pc = path_costs(net, paths, lf, tau);
    for (std::size_t p = 0; p < paths.num_paths(); ++p) {
      if (eq.flow.h[p] > 1e-6) CHECK(pc.h[p] <= eq.od_costs[0].h + 1e-5);
      if (eq.flow.a[p] > 1e-6) CHECK(pc.a[p] <= eq.od_costs[0].a + 1e-5);
    }
  }
}

TEST_CASE("gap is zero at equilibrium and positive away from it") {
  const Network net = fixtures::pigou2_network();
  const PathSet paths = enumerate_paths(net);
  const PriceVector tau = PriceVector::zeros(net.num_links());

  PathFlow at_eq = PathFlow::zeros(paths.num_paths());
  at_eq.h = {0.0, 1.0};
  CHECK(normalized_wardrop_gap(net, paths, at_eq, tau) < 1e-9);

  PathFlow off_eq = PathFlow::zeros(paths.num_paths());
  off_eq.h = {0.5, 0.5};
  CHECK(normalized_wardrop_gap(net, paths, off_eq, tau) > 1e-2);

  PathFlow infeasible = PathFlow::zeros(paths.num_paths());
  infeasible.h = {0.2, 0.2};
  CHECK_THROWS_AS(normalized_wardrop_gap(net, paths, infeasible, tau), Error);
}

TEST_CASE("externality tolls collapse the equilibrium social delay") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  const SoSolution so = solve_social_optimum(net, paths, {});
  const PriceVector tau = marginal_prices(net, paths, so.flow);
  const auto eqs = solve_equilibrium(net, paths, tau, quick_opts(8, 0));
  int converged = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& eq : eqs) {
    if (!eq.converged) continue;
    ++converged;
    lo = std::min(lo, eq.social_delay);
    hi = std::max(hi, eq.social_delay);
    CHECK(eq.normalized_gap <= 1e-6);
  }
  REQUIRE(converged == 8);
  CHECK(hi - lo <= 1e-3 * so.objective);
  CHECK(std::abs(lo - so.objective) <= 5e-3 * so.objective);
}

TEST_CASE("results are deterministic and stamped with the toll hash") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PriceVector tau = PriceVector::zeros(net.num_links());
  tau.h = {1.0, 0.5, 0.25, 0.0};
  tau.a = {0.5, 0.25, 0.125, 0.0};
  const auto a = solve_equilibrium(net, paths, tau, quick_opts(4, 77));
  const auto b = solve_equilibrium(net, paths, tau, quick_opts(4, 77));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].price_hash == price_hash(tau));
    CHECK(a[i].social_delay == b[i].social_delay);
    for (std::size_t p = 0; p < paths.num_paths(); ++p) {
      CHECK(a[i].flow.h[p] == b[i].flow.h[p]);
      CHECK(a[i].flow.a[p] == b[i].flow.a[p]);
    }
  }
  PriceVector other = tau;
  other.h[0] += 1e-9;
  CHECK(price_hash(other) != price_hash(tau));
}

TEST_CASE("distinct representatives cluster near-identical equilibria") {
  const Network net = fixtures::pigou2_network();
  const PathSet paths = enumerate_paths(net);
  const auto eqs =
      solve_equilibrium(net, paths, PriceVector::zeros(net.num_links()), quick_opts(6, 1));
  const auto reps = distinct_equilibria(net, paths, eqs);
  CHECK(reps.size() == 1);
}

TEST_CASE("reported statistics are consistent with the stored flow") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  const PriceVector tau = PriceVector::zeros(net.num_links());
  const auto eqs = solve_equilibrium(net, paths, tau, quick_opts(4, 9));
  for (const auto& eq : eqs) {
    CHECK(eq.social_delay == Catch::Approx(social_delay(net, paths, eq.flow)).epsilon(1e-12));
    CHECK(eq.normalized_gap ==
          Catch::Approx(normalized_wardrop_gap(net, paths, eq.flow, tau)).margin(1e-12));
  }
}
