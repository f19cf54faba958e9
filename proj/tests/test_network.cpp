#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "junctionlab/network.hpp"
#include "junctionlab/plane_tree.hpp"
#include "test_fixtures.hpp"

using namespace junctionlab;

TEST_CASE("triod builds and satisfies the counts") {
  auto net = fixtures::triod();
  CHECK(net.n_exterior() == 3);
  CHECK(net.n_interior() == 1);
  CHECK(net.n_arcs() == 3);
}

TEST_CASE("H-network counts match n-2 and 2n-3") {
  auto net = fixtures::h_network();
  CHECK(net.n_exterior() == 4);
  CHECK(net.n_interior() == 2);
  CHECK(net.n_arcs() == 5);
}

TEST_CASE("crossing arcs are rejected") {
  // two straight arcs crossing at the origin, sharing no endpoint
  std::vector<Vec2> ext;
  for (double deg : {-45.0, 45.0, 135.0, 225.0}) {
    double a = deg * kPi / 180;
    ext.push_back({std::cos(a), std::sin(a)});
  }
  std::vector<Vec2> interior = {{0.2, 0.0}, {-0.2, 0.0}};
  std::vector<Arc> arcs;
  auto add = [&](NodeRef f, NodeRef t, Vec2 pf, Vec2 pt) {
    Arc a;
    a.from = f;
    a.to = t;
    a.points = {pf, pt};
    arcs.push_back(a);
  };
  // the "X" pairing: i0 takes the diagonal pair {e0, e2}, i1 takes {e1, e3};
  // this abstract tree cannot be drawn without a crossing
  add({NodeRef::Kind::interior, 0}, {NodeRef::Kind::exterior, 0}, interior[0], ext[0]);
  add({NodeRef::Kind::interior, 0}, {NodeRef::Kind::exterior, 2}, interior[0], ext[2]);
  add({NodeRef::Kind::interior, 1}, {NodeRef::Kind::exterior, 1}, interior[1], ext[1]);
  add({NodeRef::Kind::interior, 1}, {NodeRef::Kind::exterior, 3}, interior[1], ext[3]);
  add({NodeRef::Kind::interior, 0}, {NodeRef::Kind::interior, 1}, interior[0], interior[1]);
  try {
    build_network(std::move(arcs), DomainSpec::disk(1.0), ext, interior);
    FAIL("expected SelfIntersection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::self_intersection);
  }
}

TEST_CASE("validation errors: valence, off-boundary, cycle") {
  std::vector<Vec2> ext = {{1, 0}, {-0.5, 0.8660254037844386}, {-0.5, -0.8660254037844386}};
  {
    // interior node of degree 2
    std::vector<Arc> arcs(2);
    arcs[0] = {{{0, 0}, ext[0]}, {NodeRef::Kind::interior, 0}, {NodeRef::Kind::exterior, 0}};
    arcs[1] = {{{0, 0}, ext[1]}, {NodeRef::Kind::interior, 0}, {NodeRef::Kind::exterior, 1}};
    try {
      build_network(std::move(arcs), DomainSpec::disk(1.0), {ext[0], ext[1]}, {{0, 0}});
      FAIL("expected BadValence");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::bad_valence);
    }
  }
  {
    // exterior node off the boundary
    std::vector<Arc> arcs(3);
    std::vector<Vec2> ext2 = {{0.5, 0}, ext[1], ext[2]};
    for (int k = 0; k < 3; ++k)
      arcs[static_cast<size_t>(k)] = {{{0, 0}, ext2[static_cast<size_t>(k)]},
                                      {NodeRef::Kind::interior, 0},
                                      {NodeRef::Kind::exterior, k}};
    try {
      build_network(std::move(arcs), DomainSpec::disk(1.0), ext2, {{0, 0}});
      FAIL("expected ExteriorOffBoundary");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::exterior_off_boundary);
    }
  }
}

TEST_CASE("json round trip") {
  auto net = fixtures::fig_partition();
  auto j = network_to_json(net);
  auto net2 = network_from_json(j);
  CHECK(net2.n_exterior() == net.n_exterior());
  CHECK(net2.n_arcs() == net.n_arcs());
  CHECK(topology_signature(net2) == topology_signature(net));
  std::string path = "roundtrip_net.json";
  save_network(net, path);
  auto net3 = load_network(path);
  CHECK(topology_signature(net3) == topology_signature(net));
  std::remove(path.c_str());
}

TEST_CASE("signature: same class equal, different class distinct, resample invariant") {
  auto h1 = fixtures::h_network(false);
  auto h2 = fixtures::h_network(true);
  CHECK(topology_signature(h1) != topology_signature(h2));

  // same class, different geometry
  auto j1 = fixtures::jitter(h1, 0.05, 42);
  CHECK(topology_signature(j1) == topology_signature(h1));

  // resampled copy
  auto res = h1;
  for (auto& a : res.arcs) a.points = resample_open(a.points, 23);
  auto res_net = build_network(res.arcs, res.domain, res.exterior, res.interior);
  CHECK(topology_signature(res_net) == topology_signature(h1));
}

TEST_CASE("signature invariant under interior-node jitter on random trees") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    auto net = random_tree_network(n, rng);
    auto jit = fixtures::jitter(net, 0.02, rng());
    CHECK(topology_signature(jit) == topology_signature(net));
  }
}
