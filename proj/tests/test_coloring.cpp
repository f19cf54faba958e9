#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "junctionlab/coloring.hpp"
#include "test_fixtures.hpp"

using namespace junctionlab;

TEST_CASE("triod base case: three distinct colors, normalized") {
  auto net = fixtures::triod();
  auto c = three_color(net);
  REQUIRE(c.color.size() == 3);
  CHECK(c.color[0] == 1);
  CHECK(c.color[1] == 2);
  CHECK(c.color[2] == 3);
  CHECK(verify_coloring(net, c));
}

TEST_CASE("constant coloring is rejected") {
  auto net = fixtures::triod();
  Coloring bad;
  bad.color = {1, 1, 1};
  CHECK(!verify_coloring(net, bad));
}

TEST_CASE("global color swap preserves propriety") {
  auto net = fixtures::fig_partition();
  auto c = three_color(net);
  REQUIRE(verify_coloring(net, c));
  Coloring swapped = c;
  for (int& v : swapped.color) v = (v == 1) ? 2 : (v == 2 ? 1 : 3);
  CHECK(verify_coloring(net, swapped));
}

TEST_CASE("H-network: lens regions share a color") {
  auto net = fixtures::h_network();
  auto c = three_color(net);
  REQUIRE(verify_coloring(net, c));
  // gaps 0 and 2 are the two lenses separated by the bridge
  CHECK(c.color[0] == c.color[2]);
  CHECK(c.color[1] != c.color[3]);
  // brute-force: exactly 6 proper colorings and ours among them
  auto all = enumerate_colorings(net);
  CHECK(all.size() == 6);
  CHECK(std::find(all.begin(), all.end(), c) != all.end());
}

TEST_CASE("fig-partition coloring matches the expected class pattern") {
  auto net = fixtures::fig_partition();
  auto c = three_color(net);
  REQUIRE(verify_coloring(net, c));
  // expected classes (1-indexed regions): {R1,R4} / {R2} / {R3,R5}
  CHECK(c.color[0] == c.color[3]);
  CHECK(c.color[2] == c.color[4]);
  CHECK(c.color[0] != c.color[1]);
  CHECK(c.color[1] != c.color[2]);
  // with the gap normalization these come out as the paper's labels
  CHECK(c.color[0] == 1);
  CHECK(c.color[1] == 2);
  CHECK(c.color[2] == 3);
}

TEST_CASE("property: exactly six colorings on random trees, three_color among them") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);  // 3..8
    auto net = random_tree_network(n, rng);
    auto all = enumerate_colorings(net);
    REQUIRE(all.size() == 6);
    auto c = three_color(net);
    CHECK(verify_coloring(net, c));
    CHECK(std::find(all.begin(), all.end(), c) != all.end());
    // the six are exactly the S3 orbit of any one of them
    std::set<std::vector<int>> orbit;
    std::array<int, 3> perm{1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> img;
      for (int v : c.color) img.push_back(perm[static_cast<size_t>(v - 1)]);
      orbit.insert(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::vector<int>> found;
    for (const auto& col : all) found.insert(col.color);
    CHECK(orbit == found);
  }
}

TEST_CASE("caterpillar n=8 still has exactly six colorings") {
  // the fan triangulation gives a caterpillar tree
  detail::Triangulation t;
  int n = 8;
  for (int k = 1; k < n - 1; ++k) t.push_back({0, k, k + 1});
  auto net = realize_tree_in_disk(t, n, 1.0);
  auto all = enumerate_colorings(net);
  CHECK(all.size() == 6);
  CHECK(verify_coloring(net, three_color(net)));
}

TEST_CASE("enumeration cap raises TooLarge") {
  auto net = fixtures::fig_partition();
  try {
    enumerate_colorings(net, 4);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
}

TEST_CASE("transfer: jittered copy gets the identical assignment") {
  auto net = fixtures::fig_partition();
  auto c = three_color(net);
  auto jit = fixtures::jitter(net, 0.04, 5);
  auto tc = transfer_coloring(c, net, jit);
  CHECK(tc.color == c.color);
  CHECK(verify_coloring(jit, tc));
  CHECK(three_color(jit).color == c.color);  // stability under perturbation
}

TEST_CASE("transfer between different classes is rejected") {
  auto h1 = fixtures::h_network(false);
  auto h2 = fixtures::h_network(true);
  auto c = three_color(h1);
  try {
    transfer_coloring(c, h1, h2);
    FAIL("expected ClassMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::class_mismatch);
  }
}
