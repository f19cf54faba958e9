#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "junctionlab/hausdorff.hpp"
#include "junctionlab/polyline.hpp"

using namespace junctionlab;

TEST_CASE("point-segment distance basics") {
  Polyline seg{{0, 0}, {1, 0}};
  CHECK(dist_point_polyline(seg, {0.5, 0.25}) == Catch::Approx(0.25));
  CHECK(dist_point_polyline(seg, {2, 0}) == Catch::Approx(1.0));
  CHECK(dist_point_polyline(seg, {0.3, 0}) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("signed distance side and flip") {
  Polyline seg{{0, 0}, {1, 0}};
  CHECK(signed_dist_point_polyline(seg, {0.5, 0.25}) == Catch::Approx(0.25));
  CHECK(signed_dist_point_polyline(seg, {0.5, -0.25}) == Catch::Approx(-0.25));
  // flipping the convention negates exactly
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2, 2);
  Polyline arc{{-1, 0}, {-0.3, 0.4}, {0.4, 0.1}, {1, 0.5}};
  for (int i = 0; i < 200; ++i) {
    Vec2 x{U(rng), U(rng)};
    double l = signed_dist_point_polyline(arc, x, SignConvention::left_positive);
    double r = signed_dist_point_polyline(arc, x, SignConvention::right_positive);
    CHECK(l == -r);
  }
}

TEST_CASE("signed distance magnitude matches dense brute force") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  Polyline arc{{-1, -0.2}, {-0.5, 0.3}, {0, 0}, {0.5, 0.4}, {1, -0.1}};
  // brute force: min distance over densely sampled points of the polyline
  auto cum = cumulative_lengths(arc);
  std::vector<Vec2> dense(arc.begin(), arc.end());  // kinks must be sampled exactly
  int M = static_cast<int>(cum.back() / 1e-4) + 1;
  for (int k = 0; k <= M; ++k) dense.push_back(point_at_arclength(arc, cum, cum.back() * k / M));
  for (int i = 0; i < 100; ++i) {
    Vec2 x{U(rng), U(rng)};
    double want = std::numeric_limits<double>::infinity();
    for (Vec2 p : dense) want = std::min(want, dist(p, x));
    CHECK(std::abs(signed_dist_point_polyline(arc, x)) == Catch::Approx(want).margin(1e-6));
  }
}

TEST_CASE("resampling preserves endpoints and arclength approximately") {
  Polyline p;
  for (int i = 0; i <= 40; ++i) {
    double t = kPi * i / 40;
    p.push_back({std::cos(t), std::sin(t)});
  }
  Polyline q = resample_open(p, 25);
  REQUIRE(q.size() == 25);
  CHECK(dist(q.front(), p.front()) < 1e-14);
  CHECK(dist(q.back(), p.back()) < 1e-14);
  CHECK(polyline_length(q) == Catch::Approx(polyline_length(p)).epsilon(1e-3));
  // near-uniform spacing
  double lo = 1e9, hi = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i) {
    lo = std::min(lo, dist(q[i], q[i + 1]));
    hi = std::max(hi, dist(q[i], q[i + 1]));
  }
  CHECK(hi / lo < 1.1);
}

TEST_CASE("closed resampling of a circle has tiny radius bias") {
  Polyline c;
  int m = 64;
  for (int i = 0; i <= m; ++i) {
    double t = 2 * kPi * i / m;
    c.push_back({std::cos(t), std::sin(t)});
  }
  Polyline r = resample_closed(c, 61);
  REQUIRE(r.size() == 62);
  for (size_t i = 0; i + 1 < r.size(); ++i)
    CHECK(norm(r[i]) == Catch::Approx(1.0).margin(2e-6));
}

TEST_CASE("menger curvature is exact on circles and zero on lines") {
  double R = 0.7;
  auto at = [&](double t) { return Vec2{R * std::cos(t), R * std::sin(t)}; };
  CHECK(std::abs(menger_curvature(at(0.1), at(0.25), at(0.43))) == Catch::Approx(1.0 / R));
  CHECK(menger_curvature({0, 0}, {0.5, 0}, {1.2, 0}) == 0.0);
  // curvature vector points toward the center for a CCW circle
  Vec2 kv = curvature_vector(at(0.1), at(0.3), at(0.5));
  CHECK(norm(kv) == Catch::Approx(1.0 / R));
  CHECK(dot(kv, at(0.3)) < 0);
}

TEST_CASE("hausdorff: identical, translate, and dense-cloud oracle") {
  PolylineSet A{{{0, 0}, {1, 0}}};
  PolylineSet B{{{0, 0.1}, {1, 0.1}}};
  CHECK(hausdorff_distance(A, A, 1e-3) == Catch::Approx(0.0).margin(1e-12));
  CHECK(hausdorff_distance(A, B, 1e-3) == Catch::Approx(0.1).margin(1e-9));
  CHECK_THROWS_AS(hausdorff_distance({}, A), Error);

  // random polylines vs a from-scratch dense oracle
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1, 1);
  auto rand_set = [&](int np, int nv) {
    PolylineSet S;
    for (int p = 0; p < np; ++p) {
      Polyline pl;
      for (int v = 0; v < nv; ++v) pl.push_back({U(rng), U(rng)});
      S.push_back(pl);
    }
    return S;
  };
  auto oracle = [](const PolylineSet& S, const PolylineSet& T) {
    // directed sup over very dense samples of S of exact distance to T, both ways
    auto directed = [](const PolylineSet& X, const PolylineSet& Y) {
      double h = 0;
      for (const auto& pl : X)
        for (size_t i = 0; i + 1 < pl.size(); ++i) {
          double len = dist(pl[i], pl[i + 1]);
          int m = std::max(2, static_cast<int>(len / 2e-5));
          for (int k = 0; k <= m; ++k) {
            Vec2 x = pl[i] + (pl[i + 1] - pl[i]) * (double(k) / m);
            double d = std::numeric_limits<double>::infinity();
            for (const auto& q : Y)
              for (size_t j = 0; j + 1 < q.size(); ++j)
                d = std::min(d, dist_point_segment(q[j], q[j + 1], x));
            h = std::max(h, d);
          }
        }
      return h;
    };
    return std::max(directed(S, T), directed(T, S));
  };
  for (int trial = 0; trial < 3; ++trial) {
    PolylineSet S = rand_set(2, 4), T = rand_set(2, 4);
    CHECK(hausdorff_distance(S, T, 2e-5) == Catch::Approx(oracle(S, T)).margin(1e-6));
  }
}

TEST_CASE("clip to disk") {
  Polyline p{{-2, 0}, {2, 0}};
  auto parts = clip_to_disk(p, 1.0);
  REQUIRE(parts.size() == 1);
  CHECK(dist(parts[0].front(), {-1, 0}) < 1e-9);
  CHECK(dist(parts[0].back(), {1, 0}) < 1e-9);
  // fully outside
  CHECK(clip_to_disk({{2, 2}, {3, 3}}, 1.0).empty());
  // V-shape that enters and leaves twice is split
  Polyline two{{-1.2, -0.4}, {0, 1.2}, {1.2, -0.4}};
  auto parts2 = clip_to_disk(two, 1.0);
  CHECK(parts2.size() == 2);
}
