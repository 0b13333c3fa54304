#include <doctest.h>

#include <cmath>

#include "hopmc/generators.hpp"
#include "hopmc/region.hpp"
#include "support/builders.hpp"

using namespace hopmc;
using testsupport::triangle_net;

TEST_SUITE_BEGIN("region");

TEST_CASE("region_of maps distances to interval indices") {
  RegionSpec spec{{5, 7, 21}, {0, 1000, 2000, 4000}};
  CHECK(region_of(4, spec) == 0);
  CHECK(region_of(5, spec) == 0);   // right-closed interval
  CHECK(region_of(6, spec) == 1);
  CHECK(region_of(7, spec) == 1);
  CHECK(region_of(9, spec) == 2);
  CHECK(region_of(21, spec) == 2);
  CHECK(region_of(22, spec) == 3);
  CHECK(region_of(kUnreachable, spec) == 3);

  RegionSpec one{{3}, {1.0, 0.0}};
  CHECK(region_of(3, one) == 0);
  CHECK(region_of(4, one) == 1);
  CHECK(region_of(kUnreachable, one) == 1);  // last region holds disconnection

  RegionSpec constant{{}, {7.5}};  // no thresholds: one region for everything
  CHECK(region_of(1, constant) == 0);
  CHECK(region_of(kUnreachable, constant) == 0);

  CHECK_THROWS_AS(region_of(0, spec), Error);  // distance 0 cannot occur
}

TEST_CASE("region spec validation") {
  CHECK_THROWS_AS(validate_region_spec(RegionSpec{{5, 5}, {0, 1, 2}}),
                  InvalidRegionSpec);
  CHECK_THROWS_AS(validate_region_spec(RegionSpec{{7, 5}, {0, 1, 2}}),
                  InvalidRegionSpec);
  CHECK_THROWS_AS(validate_region_spec(RegionSpec{{0}, {0, 1}}), InvalidRegionSpec);
  CHECK_THROWS_AS(validate_region_spec(RegionSpec{{5}, {0, 1, 2}}),
                  InvalidRegionSpec);
  CHECK_THROWS_AS(validate_region_spec(RegionSpec{{}, {}}), InvalidRegionSpec);
  CHECK_NOTHROW(validate_region_spec(RegionSpec{{5, 7}, {0, 1, 2}}));
  CHECK_NOTHROW(validate_region_spec(RegionSpec{{}, {3.0}}));
}

TEST_CASE("phi_of scores configurations by their region") {
  Network net = triangle_net(0.9);
  RegionSpec spec{{1, 2}, {0, 1, 2}};
  Configuration x = full_configuration(net);
  CHECK(phi_of(net, x, spec) == 0.0);  // direct edge: distance 1
  x.set(2, false);
  CHECK(phi_of(net, x, spec) == 1.0);  // detour: distance 2
  x.set(0, false);
  CHECK(phi_of(net, x, spec) == 2.0);  // disconnected

  auto fx = antel_fixture(0.9);
  RegionSpec fines = fx.regions({0, 1000, 2000, 4000});
  Configuration all = full_configuration(fx.net);
  CHECK(phi_of(fx.net, all, fines) == 0.0);
  Configuration none(fx.net.edge_count());
  CHECK(phi_of(fx.net, none, fines) == 4000.0);

  RegionSpec constant{{}, {7.5}};
  CHECK(phi_of(net, x, constant) == 7.5);
}

TEST_CASE("sample_configuration: one uniform per edge, in edge order") {
  Network net = triangle_net(0.9);
  net = testsupport::make_net(3, {{0, 1, 0.3}, {1, 2, 0.9}, {0, 2, 0.6}}, {0, 2});
  RandomStream a(99), b(99);
  Configuration x = sample_configuration(net, a);
  // replay the exact contract by hand
  Configuration want(3);
  want.set(0, b.uniform() < 0.3);
  want.set(1, b.uniform() < 0.9);
  want.set(2, b.uniform() < 0.6);
  CHECK(x.up == want.up);

  RandomStream c(99);
  Configuration y = sample_configuration(net, c);
  CHECK(x.up == y.up);  // same seed, same draw
}

TEST_CASE("sample_configuration hits edge reliabilities in frequency") {
  Network net = testsupport::make_net(2, {{0, 1, 0.7}}, {0, 1});
  RandomStream rng(31337);
  const int N = 200000;
  int ups = 0;
  Configuration x(1);
  for (int i = 0; i < N; ++i) {
    sample_configuration(net, rng, x);
    ups += x.is_up(0);
  }
  double p_hat = static_cast<double>(ups) / N;
  double se = std::sqrt(0.7 * 0.3 / N);
  CHECK(std::abs(p_hat - 0.7) < 4.5 * se);
}

TEST_SUITE_END();
