#pragma once

#include <array>
#include <complex>

#include "junctionlab/common.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Three-well potential W(u) = |u^3 - 1|^2 / 4 with u read as a complex
// number: zeros at the three cube roots of unity, invariant under the full
// dihedral group permuting them (rotation by 2pi/3 and conjugation).
//
// Outside |u| = seam_radius the potential is continued quadratically in the
// radial direction with C^1 matching, which caps the stiffness seen by the
// explicit solvers while keeping W positive and growing.
//
// Closed forms used below (r^2 = x^2 + y^2):
//   W      = ((x^2+y^2)^3 - 2(x^3 - 3xy^2) + 1) / 4
//   grad W = 1.5 * (r^4 x - x^2 + y^2,  r^4 y + 2xy)
//   Hess W = 1.5 * [[r^4 + 4x^2 r^2 - 2x, 4xy r^2 + 2y],
//                   [4xy r^2 + 2y,        r^4 + 4y^2 r^2 + 2x]]
// ---------------------------------------------------------------------------
class Potential {
 public:
  static constexpr double seam_radius = 2.0;

  std::array<Vec2, 3> minima;
  double hessian_bound = 0.0;   // sup |D^2 W| (spectral) on |u| <= working_radius
  double working_radius = 1.5;  // ball that solutions are expected to stay in

  Potential() {
    minima[0] = {1.0, 0.0};
    minima[1] = {-0.5, std::sqrt(3.0) / 2};
    minima[2] = {-0.5, -std::sqrt(3.0) / 2};
    // radial curvature for the extension: sup over the seam circle
    q_ext_ = 0.0;
    for (int k = 0; k < 720; ++k) {
      Vec2 u = rotate({seam_radius, 0}, kPi * k / 360);
      Vec2 uhat = normalized(u);
      q_ext_ = std::max(q_ext_, dot(uhat, hess_core(u) * uhat));
    }
    // sampled sup of |D^2 W| over the working ball
    int n = 301;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec2 u{-working_radius + 2 * working_radius * i / (n - 1),
               -working_radius + 2 * working_radius * j / (n - 1)};
        if (norm(u) > working_radius) continue;
        hessian_bound = std::max(hessian_bound, spectral_norm(hess_core(u)));
      }
    hessian_bound *= 1.05;
  }

  double eval(Vec2 u) const {
    double r = norm(u);
    if (r <= seam_radius) return eval_core(u);
    Vec2 s = u * (seam_radius / r);
    double d = r - seam_radius;
    return eval_core(s) + radial_slope(s) * d + 0.5 * q_ext_ * d * d;
  }

  Vec2 grad(Vec2 u) const {
    double r = norm(u);
    if (r <= seam_radius) return grad_core(u);
    Vec2 uhat = u / r;
    Vec2 that = perp(uhat);
    Vec2 s = uhat * seam_radius;
    double d = r - seam_radius;
    // d/dtheta of W and of the radial slope along the seam circle
    Vec2 seam_tangent = that * seam_radius;
    double dA = dot(grad_core(s), seam_tangent);
    double dB = dot(hess_core(s) * seam_tangent, uhat) + dot(grad_core(s), that);
    double g_r = radial_slope(s) + q_ext_ * d;
    double g_t = (dA + dB * d) / r;
    return uhat * g_r + that * g_t;
  }

  // analytic Hessian; valid in |u| <= seam_radius (all dynamics live there)
  Mat2 hess(Vec2 u) const { return hess_core(u); }

  static double spectral_norm(const Mat2& m) {
    double mean = 0.5 * (m.a + m.d);
    double disc = std::sqrt(sqr(0.5 * (m.a - m.d)) + sqr(0.5 * (m.b + m.c)));
    return std::max(std::abs(mean + disc), std::abs(mean - disc));
  }

 private:
  double q_ext_ = 0.0;

  static double eval_core(Vec2 u) {
    double r2 = norm2(u);
    return (r2 * r2 * r2 - 2 * (u.x * u.x * u.x - 3 * u.x * u.y * u.y) + 1) / 4;
  }
  static Vec2 grad_core(Vec2 u) {
    double r2 = norm2(u);
    double r4 = r2 * r2;
    return Vec2{r4 * u.x - u.x * u.x + u.y * u.y, r4 * u.y + 2 * u.x * u.y} * 1.5;
  }
  static Mat2 hess_core(Vec2 u) {
    double r2 = norm2(u);
    double r4 = r2 * r2;
    double off = 4 * u.x * u.y * r2 + 2 * u.y;
    return Mat2{1.5 * (r4 + 4 * u.x * u.x * r2 - 2 * u.x), 1.5 * off, 1.5 * off,
                1.5 * (r4 + 4 * u.y * u.y * r2 + 2 * u.x)};
  }
  double radial_slope(Vec2 s) const { return dot(grad_core(s), normalized(s)); }
};

inline const Potential& standard_potential() {
  static const Potential W;
  return W;
}

// zero potential: reduces the reaction-diffusion solvers to the heat equation
struct HeatPotential {
  std::array<Vec2, 3> minima{Vec2{0, 0}, Vec2{0, 0}, Vec2{0, 0}};
  double hessian_bound = 1.0;
  double eval(Vec2) const { return 0.0; }
  Vec2 grad(Vec2) const { return {0, 0}; }
};

}  // namespace junctionlab
