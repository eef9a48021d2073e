#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tollgrid/delay.hpp"
#include "tollgrid/fixtures.hpp"
#include "tollgrid/paths.hpp"

using namespace tollgrid;

namespace {

Link make_link(double a, double gamma, int beta, double m, double M) {
  Link l;
  l.id = "x";
  l.tail = "u";
  l.head = "v";
  l.a = a;
  l.gamma = gamma;
  l.beta = beta;
  l.m = m;
  l.M = M;
  return l;
}

}  // namespace

TEST_CASE("link delay matches the closed form") {
  const Link l = make_link(2.0, 3.0, 2, 0.5, 2.0);
  // e = a + gamma * (fh/m + fa/M)^beta
  CHECK(link_delay(l, 1.0, 1.0) == Catch::Approx(2.0 + 3.0 * 2.5 * 2.5).epsilon(1e-15));
  CHECK(link_delay(l, 0.0, 0.0) == Catch::Approx(2.0));
  CHECK_THROWS_AS(link_delay(l, -0.1, 0.0), Error);
}

TEST_CASE("analytic gradients match central differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(0.5, 5.0);
  std::uniform_real_distribution<double> uf(0.0, 10.0);
  std::uniform_int_distribution<int> ub(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const double m = ua(rng);
    const Link l = make_link(ua(rng), ua(rng), ub(rng), m, m + ua(rng));
    const double fh = uf(rng), fa = uf(rng);
    const auto [gh, ga] = link_delay_grad(l, fh, fa);

    const double step = 1e-5 * (1.0 + fh + fa);
    const double fd_h = (link_delay(l, fh + step, fa) - link_delay(l, std::max(0.0, fh - step), fa)) /
                        (step + std::min(fh, step));
    const double fd_a = (link_delay(l, fh, fa + step) - link_delay(l, fh, std::max(0.0, fa - step))) /
                        (step + std::min(fa, step));
    CHECK(gh == Catch::Approx(fd_h).epsilon(1e-5).margin(1e-8));
    CHECK(ga == Catch::Approx(fd_a).epsilon(1e-5).margin(1e-8));
  }
}

TEST_CASE("gradient ratio equals the capacity asymmetry exactly") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.1, 8.0);
  std::uniform_int_distribution<int> ub(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const double m = u(rng);
    const Link l = make_link(u(rng), u(rng), ub(rng), m, m + u(rng));
    const auto [gh, ga] = link_delay_grad(l, u(rng), u(rng));
    // Bitwise identity, not approximate: ga is computed as mu * gh.
    CHECK(ga == l.mu() * gh);
  }
}

TEST_CASE("delay is monotone in either class flow") {
  const Link l = make_link(1.0, 2.0, 3, 0.7, 1.4);
  double prev = link_delay(l, 0.0, 1.0);
  for (double fh = 0.5; fh <= 5.0; fh += 0.5) {
    const double cur = link_delay(l, fh, 1.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("equal-occupancy flows see the same delay") {
  // Occupancy fh/m + fa/M is what enters the delay, so any trade along
  // it at rate mu leaves delay unchanged.
  const Link l = make_link(1.0, 1.5, 2, 1.0, 3.0);
  const double base = link_delay(l, 2.0, 3.0);
  const double swapped = link_delay(l, 2.0 + l.mu() * 1.5, 3.0 - 1.5);
  CHECK(swapped == Catch::Approx(base).epsilon(1e-14));
}

TEST_CASE("social delay sums flow-weighted link delays") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PathFlow f = PathFlow::zeros(paths.num_paths());
  f.h = {7.5, 0.0, 1.2, 0.0};
  f.a = {4.5, 0.0, 0.0, 4.8};
  const LinkFlow lf = aggregate(net, paths, f);
  double want = 0.0;
  for (std::size_t l = 0; l < net.num_links(); ++l)
    want += lf.total(l) * link_delay(net.links()[l], lf.h[l], lf.a[l]);
  CHECK(social_delay(net, lf) == Catch::Approx(want).epsilon(1e-14));
  CHECK(social_delay(net, paths, f) == Catch::Approx(want).epsilon(1e-14));
}

TEST_CASE("path-based and link-based social delay agree on random flows") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int trial = 0; trial < 30; ++trial) {
    PathFlow f = PathFlow::zeros(paths.num_paths());
    for (std::size_t p = 0; p < paths.num_paths(); ++p) {
      f.h[p] = u(rng);
      f.a[p] = u(rng);
    }
    const LinkFlow lf = aggregate(net, paths, f);
    CHECK(social_delay(net, paths, f) == Catch::Approx(social_delay(net, lf)).epsilon(1e-12));
  }
}

TEST_CASE("total cost decomposes into delay plus collected tolls") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PathFlow f = PathFlow::zeros(paths.num_paths());
  f.h = {4.0, 3.5, 0.7, 0.5};
  f.a = {2.0, 2.5, 3.0, 1.8};
  PriceVector tau = PriceVector::zeros(net.num_links());
  for (std::size_t l = 0; l < net.num_links(); ++l) {
    tau.h[l] = 0.5 * static_cast<double>(l + 1);
    tau.a[l] = 0.2 * static_cast<double>(l + 1);
  }
  const LinkFlow lf = aggregate(net, paths, f);
  double tolls = 0.0;
  for (std::size_t l = 0; l < net.num_links(); ++l)
    tolls += tau.h[l] * lf.h[l] + tau.a[l] * lf.a[l];
  const double C = total_cost(net, paths, f, tau);
  CHECK(C == Catch::Approx(social_delay(net, lf) + tolls).epsilon(1e-12));
}

TEST_CASE("path costs are delay plus class tolls along the path") {
  const Network net = fixtures::example1_network();
  const PathSet paths = enumerate_paths(net);
  PathFlow f = PathFlow::zeros(paths.num_paths());
  f.h = {7.5, 0.0, 1.2, 0.0};
  f.a = {4.5, 0.0, 0.0, 4.8};
  PriceVector tau = PriceVector::zeros(net.num_links());
  tau.h = {1.0, 2.0, 3.0, 4.0};
  tau.a = {0.5, 1.0, 1.5, 2.0};
  const LinkFlow lf = aggregate(net, paths, f);
  const PathCosts pc = path_costs(net, paths, lf, tau);
  // Path 1 for the first pair uses links 2 then 4.
  const double e2 = link_delay(net.links()[1], lf.h[1], lf.a[1]);
  const double e4 = link_delay(net.links()[3], lf.h[3], lf.a[3]);
  CHECK(pc.h[1] == Catch::Approx(e2 + e4 + tau.h[1] + tau.h[3]).epsilon(1e-14));
  CHECK(pc.a[1] == Catch::Approx(e2 + e4 + tau.a[1] + tau.a[3]).epsilon(1e-14));
}
