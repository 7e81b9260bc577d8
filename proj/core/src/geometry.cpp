#include "nivat/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace nivat {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in add");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw error("integer overflow in sub");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in mul");
  return r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

i64 gcd_nonneg(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 dot(Vec2 a, Vec2 b) {
  return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}

i64 cross(Vec2 a, Vec2 b) {
  return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::pair<OrientedLine, i64> primitive(Vec2 v) {
  if (v.is_zero()) throw error("zero direction");
  i64 g = gcd_nonneg(v.x, v.y);
  return {OrientedLine{Vec2{v.x / g, v.y / g}}, g};
}

AnchoredLine AnchoredLine::through(OrientedLine l, Vec2 anchor) {
  return AnchoredLine{l, dot(anchor, l.normal())};
}

bool AnchoredLine::half_plane_contains(Vec2 g) const {
  return dot(g, line.normal()) >= offset;
}

bool AnchoredLine::on_line(Vec2 g) const { return dot(g, line.normal()) == offset; }

i64 OrientedEdge::lattice_count() const {
  if (to == from) throw error("degenerate edge");
  return primitive(to - from).second + 1;
}

namespace {

// Monotone chain; returns strict hull corners in CCW order.
std::vector<Vec2> hull_corners(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vec2> lo, hi;
  for (Vec2 p : pts) {
    while (lo.size() >= 2 && cross(lo.back() - lo[lo.size() - 2], p - lo.back()) <= 0)
      lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    Vec2 p = *it;
    while (hi.size() >= 2 && cross(hi.back() - hi[hi.size() - 2], p - hi.back()) <= 0)
      hi.pop_back();
    hi.push_back(p);
  }
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  if (lo.size() == 2 && lo[0] == lo[1]) lo.pop_back();  // collinear collapse
  return lo;
}

void rotate_to_least(std::vector<Vec2>& vs) {
  if (vs.empty()) return;
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
}

bool in_hull(const std::vector<Vec2>& corners, Vec2 g) {
  std::size_t n = corners.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = corners[i], b = corners[(i + 1) % n];
    if (cross(b - a, g - a) < 0) return false;
  }
  return true;
}

}  // namespace

ConvexLatticeSet ConvexLatticeSet::hull(const std::vector<Vec2>& pts) {
  if (pts.empty()) throw error("hull of empty point set");
  ConvexLatticeSet s;
  std::vector<Vec2> corners = hull_corners(pts);
  if (corners.size() == 1) {
    s.points_ = corners;
    s.vertices_ = corners;
    return s;
  }
  if (corners.size() == 2) {
    // Collinear: fill the segment.
    Vec2 a = corners[0], b = corners[1];
    auto [dir, m] = primitive(b - a);
    for (i64 k = 0; k <= m; ++k) s.points_.push_back(a + k * dir.dir);
    std::sort(s.points_.begin(), s.points_.end());
    s.vertices_ = {std::min(a, b), std::max(a, b)};
    return s;
  }
  i64 minx = corners[0].x, maxx = corners[0].x, miny = corners[0].y,
      maxy = corners[0].y;
  for (Vec2 v : corners) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  for (i64 y = miny; y <= maxy; ++y)
    for (i64 x = minx; x <= maxx; ++x)
      if (in_hull(corners, Vec2{x, y})) s.points_.push_back(Vec2{x, y});
  rotate_to_least(corners);
  s.vertices_ = corners;
  return s;
}

i64 ConvexLatticeSet::area2() const {
  if (vertices_.size() < 3) return 0;
  i64 a = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vec2 p = vertices_[i], q = vertices_[(i + 1) % vertices_.size()];
    a = checked_add(a, cross(p, q));
  }
  return a;
}

bool ConvexLatticeSet::contains(Vec2 g) const {
  return std::binary_search(points_.begin(), points_.end(), g);
}

std::vector<OrientedEdge> ConvexLatticeSet::edges() const {
  if (degenerate()) throw error("degenerate convex set has no edges");
  std::vector<OrientedEdge> es;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    es.push_back(OrientedEdge{vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  return es;
}

SupportContact support_line(OrientedLine l, const std::vector<Vec2>& pts) {
  if (pts.empty()) throw error("support line of empty set");
  Vec2 n = l.normal();
  i64 c = dot(pts[0], n);
  for (Vec2 g : pts) c = std::min(c, dot(g, n));
  SupportContact sc;
  sc.line = AnchoredLine{l, c};
  for (Vec2 g : pts)
    if (dot(g, n) == c) sc.contact.push_back(g);
  std::sort(sc.contact.begin(), sc.contact.end());
  return sc;
}

SupportContact support_line(OrientedLine l, const ConvexLatticeSet& s) {
  return support_line(l, s.points());
}

bool is_weakly_enveloped(const ConvexLatticeSet& t, const ConvexLatticeSet& u) {
  if (t.degenerate() || u.degenerate()) throw error("degenerate set in envelopment check");
  for (const OrientedEdge& et : t.edges()) {
    bool matched = false;
    for (const OrientedEdge& eu : u.edges()) {
      if (eu.direction() == et.direction() &&
          eu.lattice_count() <= et.lattice_count()) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace nivat
