#pragma once

#include <fstream>
#include <vector>

#include "junctionlab/gamma.hpp"
#include "junctionlab/potential.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Heteroclinic connection zeta_ij between minima c_i and c_j:
//
//   zeta'' = grad W(zeta) / 2,  zeta(-inf) = c_i,  zeta(+inf) = c_j,
//
// solved as a two-point boundary value problem on [-L, L] by damped Newton on
// central differences, initialized from the Gamma geodesic. The first
// integral |zeta'|^2 = W(zeta) (equipartition) and action = Gamma(c_i, c_j)
// are exact for the continuum orbit and serve as accuracy certificates for
// the table. Beyond the window the table extrapolates with the fitted
// exponential tail rate.
// ---------------------------------------------------------------------------
struct HeteroclinicTable {
  int i = 1, j = 2;          // endpoints c_i -> c_j
  double L = 12.0;           // window [-L, L]
  std::vector<Vec2> zeta;    // uniform samples, zeta.front() = c_i
  Vec2 ci, cj;
  double nu = 0.0;           // fitted tail rate
  double tail_r2 = 0.0;      // fit quality on the last quarter

  double h() const { return 2 * L / (static_cast<double>(zeta.size()) - 1); }

  Vec2 eval(double lambda) const {
    const double step = h();
    if (lambda <= -L) return ci + (zeta.front() - ci) * std::exp(nu * (lambda + L));
    if (lambda >= L) return cj + (zeta.back() - cj) * std::exp(-nu * (lambda - L));
    double t = (lambda + L) / step;
    size_t k = std::min(static_cast<size_t>(t), zeta.size() - 2);
    double f = t - static_cast<double>(k);
    return zeta[k] * (1 - f) + zeta[k + 1] * f;
  }

  Vec2 value_at_zero() const { return eval(0.0); }

  // action  int |zeta'|^2 d lambda  (midpoint-difference form)
  double action() const {
    double a = 0;
    const double step = h();
    for (size_t k = 0; k + 1 < zeta.size(); ++k) a += norm2(zeta[k + 1] - zeta[k]) / step;
    return a;
  }
};

namespace detail {

// block-tridiagonal Newton step: blocks are 2x2, solved by Thomas elimination
struct Block {
  Mat2 m;
  Mat2 inv() const {
    double det = m.a * m.d - m.b * m.c;
    return Mat2{m.d / det, -m.b / det, -m.c / det, m.a / det};
  }
};

inline double tail_rate_fit(const std::vector<Vec2>& zeta, double L, Vec2 c_end, double* r2) {
  // log-linear fit of |zeta - c_j| on the last quarter of the window
  size_t n = zeta.size();
  size_t k0 = (3 * n) / 4;
  std::vector<double> xs, ys;
  for (size_t k = k0; k < n - 1; ++k) {
    double d = dist(zeta[k], c_end);
    if (d < 1e-7) break;  // below this the table sits on the discretization floor
    double lambda = -L + 2 * L * static_cast<double>(k) / (static_cast<double>(n) - 1);
    xs.push_back(lambda);
    ys.push_back(std::log(d));
  }
  if (xs.size() < 8) {
    if (r2) *r2 = 0;
    return 1.0;
  }
  double mx = 0, my = 0;
  for (size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t k = 0; k < xs.size(); ++k) {
    sxx += sqr(xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += sqr(ys[k] - my);
  }
  double slope = sxy / sxx;
  if (r2) *r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 0.0;
  return -slope;
}

}  // namespace detail

// tol must sit above the rounding floor of the difference residual,
// about 4 * machine_eps / h^2 (3e-9 at the default resolution)
inline HeteroclinicTable heteroclinic(const Potential& W, int i, int j, double L = 12.0,
                                      double tol = 1e-8, int n_samples = 65537,
                                      const Polyline* init_path = nullptr) {
  require(i != j, Errc::usage_error, "heteroclinic endpoints must differ");
  const Vec2 ci = W.minima[static_cast<size_t>(i - 1)], cj = W.minima[static_cast<size_t>(j - 1)];
  const int N = n_samples - 1;
  const double h = 2 * L / N;

  // initial guess: walk the Gamma geodesic with a logistic arclength profile
  Polyline path;
  if (init_path) {
    path = *init_path;
  } else {
    GammaOptions opt;
    opt.grid_n = 301;
    opt.refine_check = false;
    path = gamma_geodesic(W, i, j, opt).second;
  }
  auto cum = cumulative_lengths(path);
  const double S = cum.back();
  std::vector<Vec2> z(static_cast<size_t>(n_samples));
  const double beta = 0.75;
  for (int k = 0; k <= N; ++k) {
    double lambda = -L + k * h;
    double s = S / (1.0 + std::exp(-2 * beta * lambda));
    z[static_cast<size_t>(k)] = point_at_arclength(path, cum, s);
  }
  z.front() = ci;
  z.back() = cj;

  auto residual = [&](const std::vector<Vec2>& zz, std::vector<Vec2>& F) {
    double sup = 0;
    for (int k = 1; k < N; ++k) {
      Vec2 lap = (zz[static_cast<size_t>(k - 1)] - zz[static_cast<size_t>(k)] * 2.0 +
                  zz[static_cast<size_t>(k + 1)]) /
                 (h * h);
      F[static_cast<size_t>(k)] = lap - W.grad(zz[static_cast<size_t>(k)]) * 0.5;
      sup = std::max(sup, norm(F[static_cast<size_t>(k)]));
    }
    return sup;
  };

  std::vector<Vec2> F(static_cast<size_t>(n_samples));
  std::vector<Mat2> diag(static_cast<size_t>(n_samples));
  std::vector<Mat2> c_prime(static_cast<size_t>(n_samples));  // Thomas workspace
  std::vector<Vec2> d_prime(static_cast<size_t>(n_samples));
  std::vector<Vec2> dz(static_cast<size_t>(n_samples));

  double sup = residual(z, F);
  const int max_iter = 60;
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    if (sup <= tol) {
      converged = true;
      break;
    }
    // assemble Jacobian blocks: sub = super = I/h^2, diag_k = -2I/h^2 - H/2
    const double ih2 = 1.0 / (h * h);
    for (int k = 1; k < N; ++k) {
      Mat2 H = W.hess(z[static_cast<size_t>(k)]);
      diag[static_cast<size_t>(k)] =
          Mat2{-2 * ih2 - 0.5 * H.a, -0.5 * H.b, -0.5 * H.c, -2 * ih2 - 0.5 * H.d};
    }
    // block Thomas: solve J dz = -F on interior unknowns
    Mat2 off{ih2, 0, 0, ih2};
    c_prime[1] = detail::Block{diag[1]}.inv() * off;
    d_prime[1] = detail::Block{diag[1]}.inv() * (-F[1]);
    for (int k = 2; k < N; ++k) {
      Mat2 denom = diag[static_cast<size_t>(k)];
      Mat2 corr = off * c_prime[static_cast<size_t>(k - 1)];
      denom = Mat2{denom.a - corr.a, denom.b - corr.b, denom.c - corr.c, denom.d - corr.d};
      Mat2 inv = detail::Block{denom}.inv();
      c_prime[static_cast<size_t>(k)] = inv * off;
      Vec2 rhs = -F[static_cast<size_t>(k)] - off * d_prime[static_cast<size_t>(k - 1)];
      d_prime[static_cast<size_t>(k)] = inv * rhs;
    }
    dz[static_cast<size_t>(N - 1)] = d_prime[static_cast<size_t>(N - 1)];
    for (int k = N - 2; k >= 1; --k)
      dz[static_cast<size_t>(k)] =
          d_prime[static_cast<size_t>(k)] - c_prime[static_cast<size_t>(k)] * dz[static_cast<size_t>(k + 1)];

    // damped update
    double t = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 25; ++bt) {
      std::vector<Vec2> zn = z;
      for (int k = 1; k < N; ++k) zn[static_cast<size_t>(k)] += dz[static_cast<size_t>(k)] * t;
      std::vector<Vec2> Fn(static_cast<size_t>(n_samples));
      double sn = residual(zn, Fn);
      if (sn < sup * (1 - 0.25 * t) || sn <= tol) {
        z = std::move(zn);
        F = std::move(Fn);
        sup = sn;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    require(accepted, Errc::no_convergence, "Newton stalled at residual " + std::to_string(sup));
  }
  require(sup <= tol, Errc::no_convergence,
          "heteroclinic residual " + std::to_string(sup) + " above tol");

  HeteroclinicTable tab;
  tab.i = i;
  tab.j = j;
  tab.L = L;
  tab.zeta = std::move(z);
  tab.ci = ci;
  tab.cj = cj;

  // window check: the orbit must have flattened well inside the ends
  double end_gap = std::max(dist(tab.eval(-0.75 * L), ci), dist(tab.eval(0.75 * L), cj));
  require(end_gap <= 1e-3, Errc::bad_window,
          "window too small: tail gap " + std::to_string(end_gap));

  tab.nu = detail::tail_rate_fit(tab.zeta, L, cj, &tab.tail_r2);
  require(tab.nu > 0, Errc::bad_window, "non-decaying tail");
  return tab;
}

// sup over samples of | |zeta'|^2 - W(zeta) |, 4th-order differences
inline double equipartition_error(const HeteroclinicTable& t, const Potential& W) {
  double sup = 0;
  const double h = t.h();
  for (size_t k = 2; k + 2 < t.zeta.size(); ++k) {
    Vec2 d = (t.zeta[k - 2] - t.zeta[k - 1] * 8.0 + t.zeta[k + 1] * 8.0 - t.zeta[k + 2]) / (12 * h);
    sup = std::max(sup, std::abs(norm2(d) - W.eval(t.zeta[k])));
  }
  return sup;
}

inline void save_heteroclinic_csv(const HeteroclinicTable& t, const std::string& path,
                                  int stride = 16) {
  std::ofstream f(path);
  require(f.good(), Errc::usage_error, "cannot write " + path);
  f << "lambda,zeta_x,zeta_y\n";
  char buf[128];
  for (size_t k = 0; k < t.zeta.size(); k += static_cast<size_t>(stride)) {
    double lambda = -t.L + 2 * t.L * static_cast<double>(k) / (static_cast<double>(t.zeta.size()) - 1);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", lambda, t.zeta[k].x, t.zeta[k].y);
    f << buf;
  }
}

}  // namespace junctionlab
