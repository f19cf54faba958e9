#pragma once

#include <algorithm>
#include <vector>

#include "junctionlab/common.hpp"

namespace junctionlab {

using Polyline = std::vector<Vec2>;

inline double polyline_length(const Polyline& p) {
  double L = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) L += dist(p[i], p[i + 1]);
  return L;
}

inline std::vector<double> cumulative_lengths(const Polyline& p) {
  std::vector<double> s(p.size(), 0.0);
  for (size_t i = 1; i < p.size(); ++i) s[i] = s[i - 1] + dist(p[i - 1], p[i]);
  return s;
}

// closest point on segment [a,b] to x; t in [0,1] reported
inline Vec2 closest_on_segment(Vec2 a, Vec2 b, Vec2 x, double* t_out = nullptr) {
  Vec2 ab = b - a;
  double len2 = norm2(ab);
  double t = len2 > 0 ? std::clamp(dot(x - a, ab) / len2, 0.0, 1.0) : 0.0;
  if (t_out) *t_out = t;
  return a + ab * t;
}

inline double dist_point_segment(Vec2 a, Vec2 b, Vec2 x) {
  return dist(x, closest_on_segment(a, b, x));
}

// Unsigned distance from x to the polyline.
inline double dist_point_polyline(const Polyline& p, Vec2 x) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    best = std::min(best, dist_point_segment(p[i], p[i + 1], x));
  if (p.size() == 1) best = dist(p[0], x);
  return best;
}

enum class SignConvention : uint8_t { left_positive, right_positive };

// Signed distance to an open polyline. Magnitude is the Euclidean distance;
// the sign is the side of the oriented curve (positive on the left of the
// traversal direction under left_positive). When the closest point is a
// shared vertex the side is decided against the angle-bisector pseudo-normal,
// which makes the sign continuous across vertex normals' cones.
inline double signed_dist_point_polyline(const Polyline& p, Vec2 x,
                                         SignConvention conv = SignConvention::left_positive) {
  double best = std::numeric_limits<double>::infinity();
  size_t bi = 0;
  double bt = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    double t;
    Vec2 c = closest_on_segment(p[i], p[i + 1], x, &t);
    double d = dist(x, c);
    if (d < best) {
      best = d;
      bi = i;
      bt = t;
    }
  }
  double side;
  const double eps = 1e-12;
  if (bt > eps && bt < 1 - eps) {
    side = cross(p[bi + 1] - p[bi], x - p[bi]);
  } else {
    // closest point is a vertex: combine the tangents of the adjacent segments
    size_t vi = (bt <= eps) ? bi : bi + 1;
    Vec2 t_sum{0, 0};
    if (vi > 0) t_sum += normalized(p[vi] - p[vi - 1]);
    if (vi + 1 < p.size()) t_sum += normalized(p[vi + 1] - p[vi]);
    side = cross(t_sum, x - p[vi]);
  }
  double s = (side >= 0) ? 1.0 : -1.0;
  if (conv == SignConvention::right_positive) s = -s;
  return s * best;
}

// Point at arclength s along the polyline (clamped), linear interpolation.
inline Vec2 point_at_arclength(const Polyline& p, const std::vector<double>& cum, double s) {
  if (s <= 0) return p.front();
  if (s >= cum.back()) return p.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), s);
  size_t i = static_cast<size_t>(it - cum.begin());  // cum[i-1] <= s < cum[i]
  double seg = cum[i] - cum[i - 1];
  double t = seg > 0 ? (s - cum[i - 1]) / seg : 0.0;
  return p[i - 1] + (p[i] - p[i - 1]) * t;
}

namespace detail {
// Catmull-Rom (chordal) interpolation through p1, p2 with neighbors p0, p3,
// evaluated at fraction t in [0,1] between p1 and p2.
inline Vec2 catmull_rom(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double t) {
  double d01 = std::max(dist(p0, p1), 1e-300);
  double d12 = std::max(dist(p1, p2), 1e-300);
  double d23 = std::max(dist(p2, p3), 1e-300);
  // tangents in chordal parametrization
  Vec2 m1 = ((p1 - p0) / d01 + (p2 - p1) / d12) * (0.5 * d12);
  Vec2 m2 = ((p2 - p1) / d12 + (p3 - p2) / d23) * (0.5 * d12);
  double t2 = t * t, t3 = t2 * t;
  return p1 * (2 * t3 - 3 * t2 + 1) + m1 * (t3 - 2 * t2 + t) + p2 * (-2 * t3 + 3 * t2) +
         m2 * (t3 - t2);
}
}  // namespace detail

// Resample an open polyline to n points uniformly by arclength. Interior
// points are placed with Catmull-Rom interpolation; plain linear placement
// would shave off curvature every pass and bias the flow inward.
inline Polyline resample_open(const Polyline& p, int n) {
  require(p.size() >= 2, Errc::empty_input, "resample of degenerate polyline");
  if (n < 2) n = 2;
  auto cum = cumulative_lengths(p);
  double L = cum.back();
  Polyline out;
  out.reserve(static_cast<size_t>(n));
  out.push_back(p.front());
  for (int k = 1; k < n - 1; ++k) {
    double s = L * k / (n - 1);
    auto it = std::upper_bound(cum.begin(), cum.end(), s);
    size_t i = std::min(static_cast<size_t>(it - cum.begin()), p.size() - 1);
    size_t i1 = i - 1, i2 = i;
    double seg = cum[i2] - cum[i1];
    double t = seg > 0 ? (s - cum[i1]) / seg : 0.0;
    Vec2 p0 = (i1 > 0) ? p[i1 - 1] : p[i1] * 2.0 - p[i2];
    Vec2 p3 = (i2 + 1 < p.size()) ? p[i2 + 1] : p[i2] * 2.0 - p[i1];
    out.push_back(detail::catmull_rom(p0, p[i1], p[i2], p3, t));
  }
  out.push_back(p.back());
  return out;
}

// Resample a closed polyline (first point repeated at the end) to n distinct
// points; returns with the closure point repeated.
inline Polyline resample_closed(const Polyline& p, int n) {
  require(p.size() >= 4 && dist(p.front(), p.back()) < 1e-12, Errc::empty_input,
          "closed polyline must repeat its first point");
  if (n < 3) n = 3;
  auto cum = cumulative_lengths(p);
  double L = cum.back();
  size_t m = p.size() - 1;  // distinct points
  Polyline out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    double s = L * k / n;
    auto it = std::upper_bound(cum.begin(), cum.end(), s);
    size_t i = std::min(static_cast<size_t>(it - cum.begin()), p.size() - 1);
    size_t i1 = i - 1, i2 = i;
    double seg = cum[i2] - cum[i1];
    double t = seg > 0 ? (s - cum[i1]) / seg : 0.0;
    Vec2 p0 = p[(i1 + m - 1) % m];
    Vec2 p3 = p[(i2 % m + 1) % m];
    out.push_back(detail::catmull_rom(p0, p[i1], p[i2], p3, t));
  }
  out.push_back(out.front());
  return out;
}

// Menger curvature of the circumcircle through (a, p, b): 4*Area/(product of
// side lengths). Zero for collinear points.
inline double menger_curvature(Vec2 a, Vec2 p, Vec2 b) {
  double ab = dist(a, p), pb = dist(p, b), ba = dist(b, a);
  double denom = ab * pb * ba;
  if (denom < 1e-300) return 0.0;
  return 2.0 * cross(p - a, b - p) / denom;  // signed: positive = left turn
}

// Curvature vector at vertex p with neighbors a, b: magnitude |menger|,
// direction toward the circumcenter. Vanishes for collinear points.
inline Vec2 curvature_vector(Vec2 a, Vec2 p, Vec2 b) {
  double k = menger_curvature(a, p, b);
  if (k == 0.0) return {0, 0};
  Vec2 n = normalized(perp(normalized(b - p) + normalized(p - a)));
  // n is +90deg from mean tangent; a left turn (k>0) curves toward +n
  return n * k;
}

// --- segment intersection (proper or touching), used by network validation --
inline bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol = 1e-12) {
  auto orient = [&](Vec2 u, Vec2 v, Vec2 w) { return cross(v - u, w - u); };
  double d1 = orient(c, d, a), d2 = orient(c, d, b);
  double d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
      ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol)))
    return true;
  auto on_segment = [&](Vec2 u, Vec2 v, Vec2 w) {
    return std::abs(orient(u, v, w)) <= tol && dot(w - u, w - v) <= tol;
  };
  if (on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d))
    return true;
  return false;
}

// Clip a polyline to the closed disk of radius R about the origin; returns
// the pieces inside as separate polylines (segments are cut at the circle).
inline std::vector<Polyline> clip_to_disk(const Polyline& p, double R) {
  std::vector<Polyline> out;
  Polyline cur;
  auto inside = [&](Vec2 v) { return norm2(v) <= R * R; };
  auto circle_hit = [&](Vec2 a, Vec2 b) {
    // smallest t in [0,1] with |a + t(b-a)| = R crossing the boundary
    Vec2 d = b - a;
    double A = norm2(d), B = 2 * dot(a, d), C = norm2(a) - R * R;
    double disc = B * B - 4 * A * C;
    std::vector<double> ts;
    if (disc >= 0 && A > 0) {
      double sq = std::sqrt(disc);
      for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)})
        if (t > 1e-12 && t < 1 - 1e-12) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    return ts;
  };
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Vec2 a = p[i], b = p[i + 1];
    bool ia = inside(a), ib = inside(b);
    auto ts = circle_hit(a, b);
    if (ia && cur.empty()) cur.push_back(a);
    if (ia && ib && ts.empty()) {
      cur.push_back(b);
    } else if (ia && !ib) {
      double t = ts.empty() ? 1.0 : ts.front();
      cur.push_back(a + (b - a) * t);
      out.push_back(cur);
      cur.clear();
    } else if (!ia && ib) {
      double t = ts.empty() ? 0.0 : ts.back();
      cur.clear();
      cur.push_back(a + (b - a) * t);
      cur.push_back(b);
    } else if (ia && ib && !ts.empty()) {
      // grazes outside and comes back: split conservatively at the two hits
      cur.push_back(a + (b - a) * ts.front());
      out.push_back(cur);
      cur.clear();
      cur.push_back(a + (b - a) * ts.back());
      cur.push_back(b);
    } else if (!ia && !ib && ts.size() >= 2) {
      // passes straight through the disk
      out.push_back({a + (b - a) * ts.front(), a + (b - a) * ts.back()});
    }
  }
  if (cur.size() >= 2) out.push_back(cur);
  return out;
}

}  // namespace junctionlab
