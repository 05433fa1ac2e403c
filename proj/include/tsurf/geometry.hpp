#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "tsurf/scalar.hpp"

namespace tsurf {

struct Vec2 {
  Scalar x;
  Scalar y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  Vec2 operator-() const { return {-x, -y}; }

  /// Componentwise comparison within the Scalar tolerance.
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

  double xd() const { return x.to_double(); }
  double yd() const { return y.to_double(); }
};

inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar norm2(const Vec2& a) { return dot(a, a); }
inline Scalar norm(const Vec2& a) { return sqrt(norm2(a)); }

/// Unit vector at angle theta (radians); always a float vector.
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// True when p is within eps of q (exact equality for exact points).
inline bool near(const Vec2& p, const Vec2& q) {
  Vec2 d = p - q;
  if (d.x.is_exact() && d.y.is_exact()) return sign(d.x) == 0 && sign(d.y) == 0;
  return std::hypot(d.xd(), d.yd()) <= Tolerance::eps();
}

/// Counterclockwise angle in (0, 2pi] from direction `from` to direction `to`.
inline double ccw_angle(const Vec2& from, const Vec2& to) {
  double a = std::atan2(cross(from, to).to_double(), dot(from, to).to_double());
  if (a <= 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace tsurf
