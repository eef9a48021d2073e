#include <catch2/catch_amalgamated.hpp>

#include "tollgrid/fixtures.hpp"
#include "tollgrid/network_io.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"

using namespace tollgrid;

TEST_CASE("tolls are only defined at feasible flows") {
  const Network net = fixtures::single_link_network();
  const PathSet paths = enumerate_paths(net);
  const PathFlow f = PathFlow::zeros(paths.num_paths());
  CHECK_THROWS_AS(marginal_prices(net, paths, f), Error);
}

TEST_CASE("linear delays give closed-form externality tolls") {
  const Network net = fixtures::single_link_network();
  const PathSet paths = enumerate_paths(net);
  PathFlow f = PathFlow::zeros(paths.num_paths());
  f.h = {1.0};
  f.a = {1.0};
  const PriceVector tau = marginal_prices(net, paths, f);
  // beta = 1: d e/d f_h = gamma/m, d e/d f_a = gamma/M, total = 2.
  const Link& l = net.links()[0];
  CHECK(tau.h[0] == Catch::Approx(2.0 * l.gamma / l.m).epsilon(1e-15));
  CHECK(tau.a[0] == Catch::Approx(2.0 * l.gamma / l.M).epsilon(1e-15));
}

TEST_CASE("toll ratio equals capacity asymmetry on a uniform network") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PathFlow f = PathFlow::zeros(paths.num_paths());
  f.h = {7.5, 0.0, 0.6, 0.6};
  f.a = {2.0, 2.5, 2.4, 2.4};
  const PriceVector tau = marginal_prices(net, paths, f);
  const PriceStructureReport rep = check_price_structure(net, tau);
  REQUIRE(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.max_rel_deviation <= 1e-10);
  CHECK(rep.mu == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("structure check fails for distorted tolls") {
  const Network net = fixtures::example1_network();
  PriceVector tau = PriceVector::zeros(net.num_links());
  tau.h = {3.0, 3.0, 3.0, 3.0};
  tau.a = {1.0, 1.0, 1.0, 1.1};
  const PriceStructureReport rep = check_price_structure(net, tau);
  REQUIRE(rep.applicable);
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst_link == 3);
}

TEST_CASE("structure check does not apply to mixed capacities") {
  const Network net = parse_network(
      "nodes:\nu\nv\nlinks:\n"
      "1 u v a=1 gamma=1 beta=1 m=1 M=2\n"
      "2 u v a=1 gamma=1 beta=1 m=1 M=3\n"
      "od_pairs:\nuv u v demand_h=1 demand_a=1\n");
  const PriceVector tau = PriceVector::zeros(net.num_links());
  CHECK_FALSE(check_price_structure(net, tau).applicable);
}

TEST_CASE("pipeline certifies the optimal flow as an induced equilibrium") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PipelineOptions opt;
  opt.eq.restarts = 8;
  const PipelineResult pr = price_pipeline(net, paths, opt);
  CHECK(pr.so.converged);
  CHECK(pr.witness_gap <= 1e-5);
  CHECK(pr.num_converged == 8);
  CHECK(pr.all_within_tol);
  CHECK(pr.social_spread_rel <= 1e-3);
  CHECK(pr.max_social - pr.min_social >= 0.0);
  CHECK(pr.min_social >= pr.so.objective - 1e-6);
}
