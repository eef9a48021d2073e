#pragma once

#include "tollgrid/network.hpp"
#include "tollgrid/network_io.hpp"

namespace tollgrid::fixtures {

/// Bundled copies of the shipped network files, byte-identical to data/*.net,
/// so the library and the reproduction command work without file paths.

inline constexpr const char* example1 =
    R"(# Three-node network, four links, two overlapping O/D pairs.
# Every link has capacity asymmetry mu = 1/3.

nodes: A B C

links:
  # id tail head  parameters
  1 A B  a=9    gamma=1  beta=1  m=3    mu=0.3333333333333333
  2 A C  a=3    gamma=1  beta=1  m=0.5  mu=0.3333333333333333
  3 B C  a=0.6  gamma=1  beta=1  m=0.7  mu=0.3333333333333333
  4 C B  a=0.6  gamma=1  beta=1  m=0.5  mu=0.3333333333333333

od_pairs:
  # id origin destination  demands
  AB A B demand_h=7.5 demand_a=4.5
  AC A C demand_h=1.2 demand_a=4.8
)";

inline constexpr const char* single_link =
    R"(# Smallest valid network: one link, one O/D pair, one path.

nodes: A B

links:
  1 A B a=1 gamma=1 beta=1 m=1 M=2

od_pairs:
  AB A B demand_h=1 demand_a=1
)";

inline constexpr const char* pigou2 =
    R"(# Two parallel routes: one effectively constant-time, one congestible.
# Single class (autonomous demand zero), equal capacities.

nodes: A B

links:
  1 A B a=2     gamma=1e-9 beta=1 m=1 M=1
  2 A B a=1e-9  gamma=1    beta=1 m=1 M=1

od_pairs:
  AB A B demand_h=1 demand_a=0
)";

inline constexpr const char* example1_mu1 =
    R"(# Same topology, free-flow delays, and demands as example1.net, but with
# equal capacities for the two classes (mu = 1 on every link).

nodes: A B C

links:
  1 A B  a=9    gamma=1  beta=1  m=3    mu=1
  2 A C  a=3    gamma=1  beta=1  m=0.5  mu=1
  3 B C  a=0.6  gamma=1  beta=1  m=0.7  mu=1
  4 C B  a=0.6  gamma=1  beta=1  m=0.5  mu=1

od_pairs:
  AB A B demand_h=7.5 demand_a=4.5
  AC A C demand_h=1.2 demand_a=4.8
)";

inline Network example1_network() { return parse_network(example1); }
inline Network single_link_network() { return parse_network(single_link); }
inline Network pigou2_network() { return parse_network(pigou2); }
inline Network example1_mu1_network() { return parse_network(example1_mu1); }

}  // namespace tollgrid::fixtures
