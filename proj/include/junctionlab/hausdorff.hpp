#pragma once

#include <vector>

#include "junctionlab/polyline.hpp"

namespace junctionlab {

using PolylineSet = std::vector<Polyline>;

namespace detail {

inline std::vector<Vec2> sample_set(const PolylineSet& S, double ds) {
  std::vector<Vec2> pts;
  for (const auto& p : S) {
    if (p.empty()) continue;
    pts.push_back(p.front());
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      double len = dist(p[i], p[i + 1]);
      int m = std::max(1, static_cast<int>(std::ceil(len / ds)));
      for (int k = 1; k <= m; ++k) pts.push_back(p[i] + (p[i + 1] - p[i]) * (double(k) / m));
    }
  }
  return pts;
}

inline double dist_to_set(const PolylineSet& S, Vec2 x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : S) {
    if (p.size() == 1) best = std::min(best, dist(p[0], x));
    for (size_t i = 0; i + 1 < p.size(); ++i)
      best = std::min(best, dist_point_segment(p[i], p[i + 1], x));
  }
  return best;
}

}  // namespace detail

// Symmetric Hausdorff distance between two polyline sets: samples of one side
// at spacing ds against exact point-segment distances to the other.
inline double hausdorff_distance(const PolylineSet& A, const PolylineSet& B, double ds = 1e-3) {
  auto nonempty = [](const PolylineSet& S) {
    for (const auto& p : S)
      if (!p.empty()) return true;
    return false;
  };
  require(nonempty(A) && nonempty(B), Errc::empty_input, "hausdorff of empty set");
  double h = 0;
  for (Vec2 x : detail::sample_set(A, ds)) h = std::max(h, detail::dist_to_set(B, x));
  for (Vec2 x : detail::sample_set(B, ds)) h = std::max(h, detail::dist_to_set(A, x));
  return h;
}

}  // namespace junctionlab
