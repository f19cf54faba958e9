#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "junctionlab/regions.hpp"
#include "junctionlab/plane_tree.hpp"
#include "test_fixtures.hpp"

using namespace junctionlab;

TEST_CASE("triod has three mutually adjacent regions") {
  auto net = fixtures::triod();
  auto part = regions(net);
  REQUIRE(part.n_regions() == 3);
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b, arc] : part.adjacency) pairs.insert({a, b});
  CHECK(pairs == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("fig-partition network has five regions") {
  auto net = fixtures::fig_partition();
  auto part = regions(net);
  CHECK(part.n_regions() == 5);
}

TEST_CASE("H-network: opposite lens regions are not adjacent") {
  auto net = fixtures::h_network();
  auto part = regions(net);
  REQUIRE(part.n_regions() == 4);
  // gap 0 spans e0(-45)..e1(45): the right lens; gap 2 the left lens
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b, arc] : part.adjacency) pairs.insert({a, b});
  CHECK(!pairs.count({0, 2}));
  CHECK(pairs.count({1, 3}));  // top and bottom meet across the bridge
  // every arc separates exactly two distinct regions
  for (auto [l, r] : part.arc_sides) CHECK(l != r);
}

// independent oracle: region adjacency recovered by rasterizing region
// membership on a fine grid (no face traversal involved)
TEST_CASE("adjacency matches rasterized oracle on random trees") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto net = random_tree_network(n, rng);
    auto part = regions(net);
    REQUIRE(part.n_regions() == n);

    int N = 220;
    double h = 2.0 / N;
    std::vector<std::vector<int>> id(static_cast<size_t>(N + 1),
                                     std::vector<int>(static_cast<size_t>(N + 1), -1));
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        Vec2 x{-1 + i * h, -1 + j * h};
        if (norm(x) > 0.995) continue;
        // near a node the nearest-arc side test can pick either flanking
        // region, which would fake an adjacency between regions that only
        // meet at the node; keep clear of nodes
        double dnode = std::numeric_limits<double>::infinity();
        for (Vec2 v : net.interior) dnode = std::min(dnode, dist(v, x));
        for (Vec2 v : net.exterior) dnode = std::min(dnode, dist(v, x));
        if (dnode < 4 * h) continue;
        id[static_cast<size_t>(i)][static_cast<size_t>(j)] = region_of_point(net, part, x);
      }
    std::set<std::pair<int, int>> raster_pairs;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        int a = id[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (a < 0) continue;
        for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
          if (i + di > N || j + dj > N) continue;
          int b = id[static_cast<size_t>(i + di)][static_cast<size_t>(j + dj)];
          if (b >= 0 && b != a) raster_pairs.insert({std::min(a, b), std::max(a, b)});
        }
      }
    std::set<std::pair<int, int>> face_pairs;
    for (auto [a, b, arc] : part.adjacency) face_pairs.insert({a, b});
    // raster can only see pairs separated by a wide-enough corridor, so it
    // must be a subset; and with these smooth fixtures it sees all of them
    for (auto p : raster_pairs) CHECK(face_pairs.count(p));
    CHECK(raster_pairs.size() == face_pairs.size());
  }
}

TEST_CASE("region areas sum to the domain area (rasterized)") {
  auto net = fixtures::fig_partition();
  auto part = regions(net);
  int N = 400;
  double h = 2.0 / N;
  std::vector<double> area(static_cast<size_t>(part.n_regions()), 0.0);
  double covered = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vec2 x{-1 + (i + 0.5) * h, -1 + (j + 0.5) * h};
      if (norm(x) > 1.0) continue;
      area[static_cast<size_t>(region_of_point(net, part, x))] += h * h;
      covered += h * h;
    }
  double total = 0;
  for (double a : area) {
    CHECK(a > 0);
    total += a;
  }
  CHECK(total == Catch::Approx(covered).margin(1e-12));
  CHECK(total == Catch::Approx(net.domain.area()).epsilon(0.01));
}
