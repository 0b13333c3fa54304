#include <doctest.h>

#include <algorithm>

#include "hopmc/generators.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/region.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hopmc;
using testsupport::make_net;
using testsupport::path_net;
using testsupport::triangle_net;

TEST_SUITE_BEGIN("graph");

TEST_CASE("bfs distances on a path graph") {
  Network net = path_net(5);
  Configuration all = full_configuration(net);
  auto d = bfs_distances(net, all, 0);
  REQUIRE(d.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(d[v] == v);

  // middle edge down: far side unreachable
  Configuration x = all;
  x.set(1, false);
  d = bfs_distances(net, x, 0);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreachable);
  CHECK(d[4] == kUnreachable);
}

TEST_CASE("parallel edges count as separate failure units") {
  Network net = make_net(2, {{0, 1, 0.5}, {0, 1, 0.5}}, {0, 1});
  Configuration x(2);
  x.set(0, false);
  x.set(1, true);
  CHECK(bfs_distances(net, x, 0)[1] == 1);
  x.set(1, false);
  CHECK(bfs_distances(net, x, 0)[1] == kUnreachable);
}

TEST_CASE("bfs agrees with Floyd-Warshall on random graphs") {
  RandomStream rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    Network net = testsupport::random_connected_net(rng, 8, 14, 0.3, 0.9);
    Configuration x(net.edge_count());
    for (int e = 0; e < net.edge_count(); ++e) x.set(e, rng.bernoulli(0.7));
    auto fw = testsupport::fw_hop_distances(net, x);
    for (NodeId s = 0; s < net.node_count(); ++s) {
      auto d = bfs_distances(net, x, s);
      for (NodeId v = 0; v < net.node_count(); ++v) {
        HopDistance want = fw[s][v] >= testsupport::kInf
                               ? kUnreachable
                               : static_cast<HopDistance>(fw[s][v]);
        REQUIRE(d[v] == want);
      }
    }
  }
}

TEST_CASE("max terminal distance over two and three terminals") {
  Network nets = path_net(5);
  Configuration all = full_configuration(nets);
  CHECK(max_terminal_distance(nets, all) == 4);

  Network net3 = make_net(5, {{0, 1, .5}, {1, 2, .5}, {2, 3, .5}, {3, 4, .5}},
                          {0, 2, 4});
  Configuration x = full_configuration(net3);
  CHECK(max_terminal_distance(net3, x) == 4);  // pair (0,4) dominates
  x.set(3, false);                             // 4 unreachable
  CHECK(max_terminal_distance(net3, x) == kUnreachable);
  x.set(3, true);
  x.set(0, false);  // 0 unreachable
  CHECK(max_terminal_distance(net3, x) == kUnreachable);
}

TEST_CASE("max terminal distance agrees with oracle on random configurations") {
  RandomStream rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Network net = testsupport::random_connected_net(rng, 9, 16, 0.3, 0.9);
    Configuration x(net.edge_count());
    for (int e = 0; e < net.edge_count(); ++e) x.set(e, rng.bernoulli(0.6));
    CHECK(max_terminal_distance(net, x) ==
          testsupport::fw_max_terminal_distance(net, x));
  }
}

TEST_CASE("benchmark fixture distances") {
  auto fx = antel_fixture(0.9);
  Configuration all = full_configuration(fx.net);
  CHECK(max_terminal_distance(fx.net, all) == 4);
  auto d = bfs_distances(fx.net, all, 4);
  CHECK(d[14] == 4);
  // all nodes reachable within the 21-hop horizon
  for (NodeId v = 0; v < fx.net.node_count(); ++v) {
    CHECK(d[v] != kUnreachable);
    CHECK(d[v] <= 21);
  }
}

TEST_CASE("is_d_connected via subsets") {
  auto fx = antel_fixture(0.9);
  std::vector<EdgeId> pathset{4, 5, 9, 1};  // 4-hop route between terminals
  CHECK(is_d_connected(fx.net, pathset, 5));
  CHECK(is_d_connected(fx.net, pathset, 4));
  CHECK_FALSE(is_d_connected(fx.net, pathset, 3));

  // removing {1,8} pushes the terminals further than 5 apart
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < fx.net.edge_count(); ++e)
    if (e != 1 && e != 8) rest.push_back(e);
  CHECK_FALSE(is_d_connected(fx.net, rest, 5));
  CHECK(is_d_connected(fx.net, rest, 6));

  // unbounded = plain connectivity
  CHECK(is_d_connected(fx.net, rest, std::nullopt));
  CHECK_FALSE(is_d_connected(fx.net, std::vector<EdgeId>{}, std::nullopt));
}

TEST_CASE("adding edges never increases the terminal distance") {
  RandomStream rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = testsupport::random_connected_net(rng, 8, 14, 0.3, 0.9);
    Configuration x(net.edge_count());
    for (int e = 0; e < net.edge_count(); ++e) x.set(e, rng.bernoulli(0.5));
    HopDistance before = max_terminal_distance(net, x);
    Configuration y = x;
    for (int e = 0; e < net.edge_count(); ++e)
      if (!y.is_up(e) && rng.bernoulli(0.5)) y.set(e, true);
    HopDistance after = max_terminal_distance(net, y);
    if (before != kUnreachable) {
      REQUIRE(after != kUnreachable);
      REQUIRE(after <= before);
    }
  }
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(make_net(2, {{0, 2, 0.5}}, {0, 1}), InvalidNetwork);   // endpoint
  CHECK_THROWS_AS(make_net(2, {{1, 1, 0.5}}, {0, 1}), InvalidNetwork);   // self loop
  CHECK_THROWS_AS(make_net(2, {{0, 1, 0.0}}, {0, 1}), InvalidNetwork);   // r = 0
  CHECK_THROWS_AS(make_net(2, {{0, 1, 1.0}}, {0, 1}), InvalidNetwork);   // r = 1
  CHECK_THROWS_AS(make_net(2, {{0, 1, 0.5}}, {0}), InvalidNetwork);      // one terminal
  CHECK_THROWS_AS(make_net(2, {{0, 1, 0.5}}, {0, 0}), InvalidNetwork);   // duplicate
  CHECK_THROWS_AS(make_net(2, {{0, 1, 0.5}}, {0, 5}), InvalidNetwork);   // bad terminal
  CHECK_NOTHROW(make_net(2, {{0, 1, 0.5}, {0, 1, 0.9}}, {0, 1}));        // parallels ok
}

TEST_SUITE_END();
