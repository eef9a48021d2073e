#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tollgrid/auxiliary.hpp"
#include "tollgrid/fixtures.hpp"
#include "tollgrid/network_io.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/so_solver.hpp"

using namespace tollgrid;

namespace {

PathFlow random_feasible(const Network& net, const PathSet& paths, std::mt19937_64& rng) {
  PathFlow f = PathFlow::zeros(paths.num_paths());
  for (std::size_t w = 0; w < net.num_ods(); ++w) {
    const auto& group = paths.for_od(static_cast<int>(w));
    const auto split_h =
        tollgrid::detail::random_split(rng, net.od_pairs()[w].demand_h, group.size());
    const auto split_a =
        tollgrid::detail::random_split(rng, net.od_pairs()[w].demand_a, group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      f.h[group[i]] = split_h[i];
      f.a[group[i]] = split_a[i];
    }
  }
  return f;
}

}  // namespace

TEST_CASE("transformed game rescales autonomous demand by the asymmetry") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  const SoSolution so = solve_social_optimum(net, paths, {});
  const PriceVector tau = marginal_prices(net, paths, so.flow);
  const AuxiliaryGame aux = build_auxiliary(net, tau);

  CHECK(aux.mu == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(aux.net.od_pairs()[0].demand_h == 7.5);
  CHECK(aux.net.od_pairs()[0].demand_a == Catch::Approx(1.5).epsilon(1e-12));
  CHECK(aux.net.od_pairs()[1].demand_a == Catch::Approx(1.6).epsilon(1e-12));
  for (const Link& l : aux.net.links()) CHECK(l.M == l.m);
}

TEST_CASE("mapped flows see identical link delays") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  const PriceVector tau = PriceVector::zeros(net.num_links());
  const AuxiliaryGame aux = build_auxiliary(net, tau);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const PathFlow f = random_feasible(net, paths, rng);
    const PathFlow mapped = map_to_auxiliary(f, aux.mu);
    const LinkFlow lf = aggregate(net, paths, f);
    const LinkFlow lg = aggregate(aux.net, paths, mapped);
    for (std::size_t l = 0; l < net.num_links(); ++l) {
      const double e = link_delay(net.links()[l], lf.h[l], lf.a[l]);
      const double e_aux = link_delay(aux.net.links()[l], lg.h[l], lg.a[l]);
      CHECK(std::abs(e_aux - e) <= 1e-12 * (1.0 + std::abs(e)));
    }
  }
}

TEST_CASE("mapped flows stay feasible for the transformed demands") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  const AuxiliaryGame aux = build_auxiliary(net, PriceVector::zeros(net.num_links()));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PathFlow f = random_feasible(net, paths, rng);
    CHECK(is_feasible(aux.net, paths, map_to_auxiliary(f, aux.mu)).feasible);
  }
}

TEST_CASE("identity transform when capacities already coincide") {
  const Network net = fixtures::example1_mu1_network();
  const AuxiliaryGame aux = build_auxiliary(net, PriceVector::zeros(net.num_links()));
  CHECK(aux.mu == 1.0);
  for (std::size_t w = 0; w < net.num_ods(); ++w)
    CHECK(aux.net.od_pairs()[w].demand_a == net.od_pairs()[w].demand_a);
}

TEST_CASE("mixed capacities cannot be transformed") {
  const Network net = parse_network(
      "nodes:\nu\nv\nlinks:\n"
      "1 u v a=1 gamma=1 beta=1 m=1 M=2\n"
      "2 u v a=1 gamma=1 beta=1 m=1 M=4\n"
      "od_pairs:\nuv u v demand_h=1 demand_a=1\n");
  CHECK_THROWS_AS(build_auxiliary(net, PriceVector::zeros(net.num_links())), Error);
}

TEST_CASE("certificate passes on externality-priced equilibria") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PipelineOptions opt;
  opt.eq.restarts = 8;
  const PipelineResult pr = price_pipeline(net, paths, opt);
  const CertificateReport cert =
      certify_social_delay_uniqueness(net, paths, pr.tau, pr.equilibria, {});
  CHECK(cert.status == CertificateStatus::Pass);
  CHECK(cert.num_checked == 8);
  CHECK(cert.max_aux_gap <= 1e-5);
  CHECK(cert.max_decomposition_err <= 1e-9);
}

TEST_CASE("certificate rejects equilibria computed under other tolls") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PipelineOptions opt;
  opt.eq.restarts = 4;
  const PipelineResult pr = price_pipeline(net, paths, opt);
  PriceVector other = pr.tau;
  other.h[0] += 0.5;
  other.a[0] += 0.5 / 3.0;
  const CertificateReport cert =
      certify_social_delay_uniqueness(net, paths, other, pr.equilibria, {});
  CHECK(cert.status == CertificateStatus::Rejected);
}

TEST_CASE("certificate is inapplicable on mixed-capacity networks") {
  const Network net = parse_network(
      "nodes:\nu\nv\nlinks:\n"
      "1 u v a=1 gamma=1 beta=1 m=1 M=2\n"
      "2 u v a=1 gamma=1 beta=1 m=1 M=4\n"
      "od_pairs:\nuv u v demand_h=1 demand_a=1\n");
  const PathSet paths = enumerate_paths(net);
  const CertificateReport cert = certify_social_delay_uniqueness(
      net, paths, PriceVector::zeros(net.num_links()), {}, {});
  CHECK(cert.status == CertificateStatus::Inapplicable);
}
