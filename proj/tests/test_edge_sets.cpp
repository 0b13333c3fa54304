#include <doctest.h>

#include <set>

#include "hopmc/edge_sets.hpp"
#include "hopmc/generators.hpp"
#include "support/builders.hpp"

using namespace hopmc;

TEST_SUITE_BEGIN("edge_sets");

TEST_CASE("pathset and cutset validation on the benchmark fixture") {
  auto fx = antel_fixture(0.9);
  const Network& net = fx.net;

  std::vector<EdgeId> route{4, 5, 9, 1};
  CHECK(validate_pathset(net, route, 5));
  CHECK_FALSE(validate_pathset(net, route, 3));
  std::vector<EdgeId> longroute{4, 17, 10, 18, 19, 20, 21, 22, 15};
  CHECK(validate_pathset(net, longroute, 21));
  CHECK_FALSE(validate_pathset(net, longroute, 8));

  std::vector<EdgeId> cut{1, 8};
  CHECK(validate_cutset(net, cut, 5));
  CHECK_FALSE(validate_cutset(net, cut, 6));  // a 6-hop detour survives
  std::vector<EdgeId> cut3{1, 8, 13};
  CHECK(validate_cutset(net, cut3, 7));
  std::vector<EdgeId> star{3, 4, 11};  // all edges of terminal 4
  CHECK(validate_cutset(net, star, std::nullopt));
  CHECK_FALSE(validate_cutset(net, cut, std::nullopt));  // does not disconnect
}

TEST_CASE("a disjoint cutset cannot coexist with a valid pathset") {
  RandomStream rng(404);
  int checked = 0;
  while (checked < 60) {
    Network net = testsupport::random_connected_net(rng, 8, 14, 0.3, 0.9);
    int m = net.edge_count();
    std::vector<EdgeId> sub;
    for (EdgeId e = 0; e < m; ++e)
      if (rng.bernoulli(0.6)) sub.push_back(e);
    HopDistance d = 1 + static_cast<int>(rng.index(6));
    if (!validate_pathset(net, sub, d)) continue;
    ++checked;
    // any candidate cut disjoint from sub leaves sub intact, so it cannot cut
    std::vector<EdgeId> disjoint;
    for (EdgeId e = 0; e < m; ++e) {
      bool in = false;
      for (EdgeId f : sub) in = in || f == e;
      if (!in) disjoint.push_back(e);
    }
    CHECK_FALSE(validate_cutset(net, disjoint, d));
    // supersets of a valid pathset stay valid
    std::vector<EdgeId> super = sub;
    for (EdgeId e : disjoint)
      if (rng.bernoulli(0.5)) super.push_back(e);
    CHECK(validate_pathset(net, super, d));
  }
}

static std::vector<RegionFamily> antel_raw() {
  return antel_fixture(0.9).family_sets;
}

TEST_CASE("build_families accepts the fixture sets and computes omega") {
  auto fx = antel_fixture(0.9);
  RegionSpec spec = fx.regions({0, 5, 10, 20});
  EdgeSetFamilies fams = build_families(fx.net, spec, fx.family_sets, true);
  CHECK(fams.region_count() == 4);
  CHECK(fams.omega.size() == 19);
  CHECK(fams.all_disjoint);
  std::set<EdgeId> omega(fams.omega.begin(), fams.omega.end());
  std::set<EdgeId> want{1, 2, 3, 4, 5, 8, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22};
  CHECK(omega == want);
}

TEST_CASE("build_families rejects structural violations") {
  auto fx = antel_fixture(0.9);
  RegionSpec spec = fx.regions({0, 5, 10, 20});

  auto raw = antel_raw();
  raw[3].pathsets.push_back({4, 5, 9, 1});  // last region must have no pathsets
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), InvalidPathset);

  raw = antel_raw();
  raw[0].cutsets.push_back({3, 4, 11});  // first region must have no cutsets
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), InvalidCutset);

  raw = antel_raw();
  raw[0].pathsets.push_back({11, 12, 2, 13, 14, 15});  // 6 hops > d_0 = 5
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), InvalidPathset);

  raw = antel_raw();
  raw[1].cutsets[0] = {1};  // removing edge 1 leaves a 4-hop route
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), InvalidCutset);

  raw = antel_raw();
  raw[1].pathsets.push_back({});  // empty member set
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), Error);

  raw = antel_raw();
  raw[0].pathsets[0] = {4, 4, 5, 9, 1};  // duplicated edge id inside a set
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), Error);

  raw = antel_raw();
  raw[0].pathsets[0] = {4, 5, 9, 99};  // edge id out of range
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), Error);

  raw = antel_raw();
  raw.pop_back();  // family count must match region count
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, false), Error);
}

TEST_CASE("within-region overlap: rejected strictly, recorded otherwise") {
  auto fx = antel_fixture(0.9);
  RegionSpec spec = fx.regions({0, 5, 10, 20});
  auto raw = antel_raw();
  // a second region-1 cutset sharing edge 1 with the existing {1,8}
  raw[1].cutsets.push_back({1, 8, 15});
  CHECK_THROWS_AS(build_families(fx.net, spec, raw, true), OverlapWithinRegion);

  EdgeSetFamilies fams = build_families(fx.net, spec, raw, false);
  CHECK_FALSE(fams.all_disjoint);
  CHECK_FALSE(fams.region_disjoint[1]);
  CHECK(fams.region_disjoint[0]);
  CHECK(fams.overlap_detail.find("region 1") != std::string::npos);
}

TEST_CASE("cross-region sharing is never an overlap") {
  auto fx = antel_fixture(0.9);
  RegionSpec spec = fx.regions({0, 5, 10, 20});
  // fixture sets already share edges across regions (edge 1 sits in four)
  EdgeSetFamilies fams = build_families(fx.net, spec, fx.family_sets, true);
  CHECK(fams.all_disjoint);
}

TEST_SUITE_END();
