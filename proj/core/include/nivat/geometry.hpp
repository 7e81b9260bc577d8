#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nivat/error.hpp"

namespace nivat {

using i64 = long long;

// Checked integer helpers. All lattice arithmetic is exact; overflow
// throws instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 floor_div(i64 a, i64 b);
i64 gcd_nonneg(i64 a, i64 b);

/// A point of Z^2.
struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
  }
  friend Vec2 operator-(Vec2 a, Vec2 b) {
    return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
  }
  friend Vec2 operator-(Vec2 a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }
  friend Vec2 operator*(i64 k, Vec2 a) {
    return {checked_mul(k, a.x), checked_mul(k, a.y)};
  }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
  // Canonical scan order: by y, then x.
  friend bool operator<(Vec2 a, Vec2 b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
  bool is_zero() const { return x == 0 && y == 0; }
  i64 norm_inf() const {
    i64 ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    return ax > ay ? ax : ay;
  }
};

i64 dot(Vec2 a, Vec2 b);
i64 cross(Vec2 a, Vec2 b);
/// Left normal of d: rotate by +90 degrees.
inline Vec2 left_normal(Vec2 d) { return Vec2{-d.y, d.x}; }

std::string to_string(Vec2 v);

/// A direction of a line together with its orientation. dir is always
/// primitive, so it is also the minimum-norm lattice vector on the line.
struct OrientedLine {
  Vec2 dir;

  Vec2 normal() const { return left_normal(dir); }
  OrientedLine reversed() const { return OrientedLine{-dir}; }
  friend bool operator==(OrientedLine a, OrientedLine b) { return a.dir == b.dir; }
  friend bool operator<(OrientedLine a, OrientedLine b) { return a.dir < b.dir; }
};

/// primitive(v): the oriented direction of v and the positive multiplier
/// with multiplier * dir == v. Errors on the zero vector.
std::pair<OrientedLine, i64> primitive(Vec2 v);

/// A concrete lattice line: the set {g : <g, n> == offset} with
/// n = left normal of dir. Its half plane is {g : <g, n> >= offset}.
struct AnchoredLine {
  OrientedLine line;
  i64 offset = 0;

  static AnchoredLine through(OrientedLine l, Vec2 anchor);
  bool half_plane_contains(Vec2 g) const;
  bool on_line(Vec2 g) const;
  /// The nearest lattice line parallel to this one lying strictly
  /// outside the half plane.
  AnchoredLine next_line() const { return {line, offset - 1}; }
};

struct OrientedEdge {
  Vec2 from;
  Vec2 to;

  OrientedLine direction() const { return primitive(to - from).first; }
  /// Number of lattice points on the closed edge segment.
  i64 lattice_count() const;
};

/// A finite lattice-convex subset of Z^2: points == conv(points) n Z^2.
/// hull_vertices are the corners of the hull polygon, counterclockwise,
/// starting from the canonically least corner. Zero-area sets keep the
/// segment endpoints (or the single point) as vertices and have no edges.
class ConvexLatticeSet {
 public:
  ConvexLatticeSet() = default;  // empty placeholder; fill via hull()
  static ConvexLatticeSet hull(const std::vector<Vec2>& pts);

  const std::vector<Vec2>& points() const { return points_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return points_.size(); }
  bool degenerate() const { return vertices_.size() < 3; }
  /// Twice the area of the hull polygon.
  i64 area2() const;
  bool contains(Vec2 g) const;
  /// Edges of the hull polygon, positively oriented. Errors on
  /// degenerate sets.
  std::vector<OrientedEdge> edges() const;

  friend bool operator==(const ConvexLatticeSet& a, const ConvexLatticeSet& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Vec2> points_;    // sorted canonical
  std::vector<Vec2> vertices_;  // CCW corners
};

/// Support line of S in direction l: the translate of l touching S with
/// S inside its half plane. Returns the line and the contact points.
struct SupportContact {
  AnchoredLine line;
  std::vector<Vec2> contact;  // sorted canonical
};
SupportContact support_line(OrientedLine l, const std::vector<Vec2>& pts);
SupportContact support_line(OrientedLine l, const ConvexLatticeSet& s);

/// Weak edge envelopment: every edge of T has a parallel edge of U with
/// at most as many lattice points. Errors if T or U is degenerate.
bool is_weakly_enveloped(const ConvexLatticeSet& t, const ConvexLatticeSet& u);

}  // namespace nivat
