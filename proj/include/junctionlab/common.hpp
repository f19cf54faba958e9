#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace junctionlab {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Error taxonomy. Every operation that can fail throws Error with a code;
// the CLI maps codes to exit status (validation -> 1, numerical -> 2).
// ---------------------------------------------------------------------------
enum class Errc {
  // validation
  not_a_tree,
  bad_valence,
  self_intersection,
  exterior_off_boundary,
  empty_input,
  unknown_region_id,
  too_large,
  class_mismatch,
  no_alternate_class,
  class_infeasible,
  unresolved_epsilon,
  bad_cfl,
  grid_mismatch,
  bad_window,
  usage_error,
  // numerical
  no_convergence,
  grid_too_coarse,
  not_converged,
  arc_collapse,
  junction_diverged,
  step_underflow,
  instability,
  no_solution,
  node_too_close_to_boundary,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_tree: return "NotATree";
    case Errc::bad_valence: return "BadValence";
    case Errc::self_intersection: return "SelfIntersection";
    case Errc::exterior_off_boundary: return "ExteriorOffBoundary";
    case Errc::empty_input: return "EmptyInput";
    case Errc::unknown_region_id: return "UnknownRegionId";
    case Errc::too_large: return "TooLarge";
    case Errc::class_mismatch: return "ClassMismatch";
    case Errc::no_alternate_class: return "NoAlternateClass";
    case Errc::class_infeasible: return "ClassInfeasible";
    case Errc::unresolved_epsilon: return "UnresolvedEpsilon";
    case Errc::bad_cfl: return "BadCFL";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::bad_window: return "BadWindow";
    case Errc::usage_error: return "UsageError";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::not_converged: return "NotConverged";
    case Errc::arc_collapse: return "ArcCollapse";
    case Errc::junction_diverged: return "JunctionDiverged";
    case Errc::step_underflow: return "StepUnderflow";
    case Errc::instability: return "Instability";
    case Errc::no_solution: return "NoSolution";
    case Errc::node_too_close_to_boundary: return "NodeTooCloseToBoundary";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

  // true for errors that indicate bad input rather than a failed computation
  bool is_validation() const {
    switch (code_) {
      case Errc::no_convergence:
      case Errc::grid_too_coarse:
      case Errc::not_converged:
      case Errc::arc_collapse:
      case Errc::junction_diverged:
      case Errc::step_underflow:
      case Errc::instability:
      case Errc::no_solution:
      case Errc::node_too_close_to_boundary:
        return false;
      default:
        return true;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// ---------------------------------------------------------------------------
// 2-D vector
// ---------------------------------------------------------------------------
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  return n > 0 ? a / n : Vec2{0, 0};
}
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // rotate +90 degrees
inline Vec2 rotate(Vec2 a, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

// 2x2 matrix, used for rotations/reflections acting on fields and coordinates
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]
  Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  static Mat2 rotation(double t) {
    double co = std::cos(t), si = std::sin(t);
    return {co, -si, si, co};
  }
  // reflection across the line through the origin at angle t
  static Mat2 reflection(double t) {
    double co = std::cos(2 * t), si = std::sin(2 * t);
    return {co, si, si, -co};
  }
  static Mat2 identity() { return {}; }
};

// ---------------------------------------------------------------------------
// C^2 quintic smoothstep S(t): 0 -> 0, 1 -> 1, flat to second order at ends.
// cutoff01(s, lo, hi) = 1 for s <= lo, 0 for s >= hi.
// ---------------------------------------------------------------------------
inline double smoothstep5(double t) {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  return t * t * t * (t * (t * 6 - 15) + 10);
}

inline double cutoff01(double s, double lo, double hi) {
  if (s <= lo) return 1.0;
  if (s >= hi) return 0.0;
  return 1.0 - smoothstep5((s - lo) / (hi - lo));
}

inline double sqr(double x) { return x * x; }

}  // namespace junctionlab
