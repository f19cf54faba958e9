#pragma once

#include <queue>
#include <vector>

#include "junctionlab/polyline.hpp"
#include "junctionlab/potential.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Gamma distance between potential minima:
//   Gamma(c_i, c_j) = inf over paths of  int W^{1/2} |gamma'|.
// Computed by Dijkstra on an 8-connected grid graph (edge weight = mean of
// W^{1/2} at the endpoints times the edge length) followed by a local
// relaxation of the polyline path in the degenerate metric.
// ---------------------------------------------------------------------------
struct GammaOptions {
  int grid_n = 401;       // nodes per axis of the base grid
  double box = 2.0;       // grid covers [-box, box]^2
  int relax_points = 257; // path discretization for the relaxation
  int relax_iters = 4000;
  bool refine_check = true;  // redo at 2n-1 and compare (GridTooCoarse if >2%)
};

namespace detail {

inline double sqrt_w(const Potential& W, Vec2 u) {
  return std::sqrt(std::max(W.eval(u), 0.0));  // rounding can leave -1e-17 at minima
}

inline double path_energy(const Potential& W, const Polyline& p) {
  double E = 0;
  for (size_t k = 0; k + 1 < p.size(); ++k) {
    double w = 0.5 * (sqrt_w(W, p[k]) + sqrt_w(W, p[k + 1]));
    E += w * dist(p[k], p[k + 1]);
  }
  return E;
}

// gradient descent with backtracking on the path energy; endpoints pinned
inline Polyline relax_path(const Potential& W, Polyline p, int n_pts, int iters) {
  p = resample_open(p, n_pts);
  double step = 0.25 * polyline_length(p) / n_pts;
  double E = path_energy(W, p);
  for (int it = 0; it < iters; ++it) {
    std::vector<Vec2> grad(p.size(), Vec2{0, 0});
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      double Lm = dist(p[i - 1], p[i]);
      double Lp = dist(p[i], p[i + 1]);
      Vec2 um = (p[i] - p[i - 1]) / std::max(Lm, 1e-300);
      Vec2 up = (p[i + 1] - p[i]) / std::max(Lp, 1e-300);
      double wi = std::sqrt(std::max(W.eval(p[i]), 0.0));
      Vec2 dsqw = wi > 1e-15 ? W.grad(p[i]) / (2 * wi) : Vec2{0, 0};
      double wm = 0.5 * (sqrt_w(W, p[i - 1]) + wi);
      double wp = 0.5 * (wi + sqrt_w(W, p[i + 1]));
      grad[i] = dsqw * (0.5 * (Lm + Lp)) + um * wm - up * wp;
    }
    double gmax = 0;
    for (Vec2 g : grad) gmax = std::max(gmax, norm(g));
    if (gmax < 1e-14) break;
    double t = step / gmax;
    for (int bt = 0; bt < 30; ++bt) {
      Polyline q = p;
      for (size_t i = 1; i + 1 < q.size(); ++i) q[i] -= grad[i] * t;
      double Eq = path_energy(W, q);
      if (Eq < E) {
        p = std::move(q);
        E = Eq;
        break;
      }
      t *= 0.5;
    }
    if (it % 200 == 199) p = resample_open(p, n_pts);
  }
  return resample_open(p, n_pts);
}

inline Polyline grid_geodesic(const Potential& W, Vec2 a, Vec2 b, int n, double box) {
  const double h = 2 * box / (n - 1);
  auto id = [&](int i, int j) { return j * n + i; };
  auto pos = [&](int v) {
    return Vec2{-box + (v % n) * h, -box + (v / n) * h};
  };
  auto nearest = [&](Vec2 p) {
    int i = std::clamp(static_cast<int>(std::lround((p.x + box) / h)), 0, n - 1);
    int j = std::clamp(static_cast<int>(std::lround((p.y + box) / h)), 0, n - 1);
    return id(i, j);
  };
  std::vector<double> sqw(static_cast<size_t>(n) * n);
  for (int v = 0; v < n * n; ++v) sqw[static_cast<size_t>(v)] = sqrt_w(W, pos(v));

  const int src = nearest(a), dst = nearest(b);
  std::vector<double> dist_(static_cast<size_t>(n) * n, std::numeric_limits<double>::infinity());
  std::vector<int> prev(static_cast<size_t>(n) * n, -1);
  using QE = std::pair<double, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  dist_[static_cast<size_t>(src)] = 0;
  pq.push({0.0, src});
  const int di[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  const int dj[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist_[static_cast<size_t>(v)]) continue;
    if (v == dst) break;
    int i = v % n, j = v / n;
    for (int k = 0; k < 8; ++k) {
      int ii = i + di[k], jj = j + dj[k];
      if (ii < 0 || ii >= n || jj < 0 || jj >= n) continue;
      int u = id(ii, jj);
      double len = h * ((k < 4) ? 1.0 : std::sqrt(2.0));
      double nd = d + 0.5 * (sqw[static_cast<size_t>(v)] + sqw[static_cast<size_t>(u)]) * len;
      if (nd < dist_[static_cast<size_t>(u)]) {
        dist_[static_cast<size_t>(u)] = nd;
        prev[static_cast<size_t>(u)] = v;
        pq.push({nd, u});
      }
    }
  }
  require(prev[static_cast<size_t>(dst)] >= 0 || src == dst, Errc::no_convergence,
          "Dijkstra found no path");
  Polyline path;
  for (int v = dst; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(pos(v));
  std::reverse(path.begin(), path.end());
  path.front() = a;  // snap grid ends to the exact minima
  path.back() = b;
  return path;
}

}  // namespace detail

// geodesic path and its energy at one resolution
inline std::pair<double, Polyline> gamma_geodesic(const Potential& W, int i, int j,
                                                  const GammaOptions& opt = {}) {
  require(i != j && i >= 1 && i <= 3 && j >= 1 && j <= 3, Errc::usage_error,
          "minima indices must differ and lie in 1..3");
  Vec2 a = W.minima[static_cast<size_t>(i - 1)], b = W.minima[static_cast<size_t>(j - 1)];
  Polyline path = detail::grid_geodesic(W, a, b, opt.grid_n, opt.box);
  path = detail::relax_path(W, path, opt.relax_points, opt.relax_iters);
  return {detail::path_energy(W, path), path};
}

inline double gamma_distance(const Potential& W, int i, int j, const GammaOptions& opt = {}) {
  if (i == j) return 0.0;
  auto [v1, p1] = gamma_geodesic(W, i, j, opt);
  if (!opt.refine_check) return v1;
  GammaOptions fine = opt;
  fine.grid_n = 2 * opt.grid_n - 1;
  fine.refine_check = false;
  auto [v2, p2] = gamma_geodesic(W, i, j, fine);
  require(std::abs(v2 - v1) <= 0.02 * std::abs(v2), Errc::grid_too_coarse,
          "gamma value moved by more than 2% under refinement");
  return v2;
}

struct GammaMatrix {
  std::array<std::array<double, 3>, 3> g{};  // 0-indexed, symmetric, zero diagonal
  double operator()(int i, int j) const { return g[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
};

inline GammaMatrix gamma_matrix(const Potential& W, const GammaOptions& opt = {}) {
  GammaMatrix m;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      double v = gamma_distance(W, i, j, opt);
      m.g[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
      m.g[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = v;
    }
  return m;
}

// ---------------------------------------------------------------------------
// Junction angles from the sine relation
//   sin(a1)/Gamma(c2,c3) = sin(a2)/Gamma(c1,c3) = sin(a3)/Gamma(c1,c2),
// a1+a2+a3 = 2pi. Equivalent to the triangle with sides Gamma_jk via
// a_i = pi - b_i; solved by bisection on the common ratio. Exactly equal
// Gammas short-circuit to the exact symmetric answer.
// ---------------------------------------------------------------------------
inline std::array<double, 3> junction_angles(const GammaMatrix& m) {
  double s1 = m(2, 3), s2 = m(1, 3), s3 = m(1, 2);  // side opposite angle i
  require(s1 > 0 && s2 > 0 && s3 > 0, Errc::no_solution, "Gamma values must be positive");
  if (s1 == s2 && s2 == s3) return {2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3};
  require(s1 < s2 + s3 && s2 < s1 + s3 && s3 < s1 + s2, Errc::no_solution,
          "Gamma triple violates the triangle condition");
  // order sides so the first is the largest; its triangle angle may be obtuse
  std::array<int, 3> ord{0, 1, 2};
  std::array<double, 3> s{s1, s2, s3};
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return s[static_cast<size_t>(a)] > s[static_cast<size_t>(b)]; });
  double A = s[static_cast<size_t>(ord[0])], B = s[static_cast<size_t>(ord[1])],
         C = s[static_cast<size_t>(ord[2])];
  auto g = [&](double kappa) {
    return std::sin(std::asin(kappa * B) + std::asin(kappa * C)) - kappa * A;
  };
  double lo = 1e-12, hi = 1.0 / A;
  require(g(lo) > 0, Errc::no_solution, "degenerate sine relation");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  double kappa = 0.5 * (lo + hi);
  double bB = std::asin(kappa * B), bC = std::asin(kappa * C);
  double bA = kPi - bB - bC;
  std::array<double, 3> beta{};
  beta[static_cast<size_t>(ord[0])] = bA;
  beta[static_cast<size_t>(ord[1])] = bB;
  beta[static_cast<size_t>(ord[2])] = bC;
  return {kPi - beta[0], kPi - beta[1], kPi - beta[2]};
}

}  // namespace junctionlab
