#include "cupcap/geometry.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cupcap/errors.hpp"
#include "wide_int.hpp"

namespace cupcap {

using detail::i128;
using detail::sign_of;

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.y, b.y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

bool all_integral(const Point& p) {
  return mpz_cmp_ui(p.x.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(p.y.get_den_mpz_t(), 1) == 0;
}

constexpr long kSmall = 1L << 61;

bool small_integer(const mpz_class& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) && v.get_si() < kSmall && v.get_si() > -kSmall;
}



}  // namespace

int orientation_sign(const Point& p, const Point& q, const Point& r) {
  if (all_integral(p) && all_integral(q) && all_integral(r)) {
    const mpz_class& px = p.x.get_num();
    const mpz_class& py = p.y.get_num();
    const mpz_class& qx = q.x.get_num();
    const mpz_class& qy = q.y.get_num();
    const mpz_class& rx = r.x.get_num();
    const mpz_class& ry = r.y.get_num();
    if (small_integer(px) && small_integer(py) && small_integer(qx) && small_integer(qy) &&
        small_integer(rx) && small_integer(ry)) {
      i128 ax = qx.get_si() - px.get_si();
      i128 ay = qy.get_si() - py.get_si();
      i128 bx = rx.get_si() - px.get_si();
      i128 by = ry.get_si() - py.get_si();
      return sign_of(ax * by - ay * bx);
    }
    mpz_class v = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    return sgn(v);
  }
  Coord v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(v);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(orientation_sign(p, q, r));
}

Orientation reversed(Orientation o) noexcept { return static_cast<Orientation>(-static_cast<int>(o)); }

HalfPlane HalfPlane::left_of(const Point& u, const Point& v, bool closed) {
  if (u == v) throw PreconditionError("half-plane through two identical points", {u});
  HalfPlane h;
  h.a = u.y - v.y;
  h.b = v.x - u.x;
  h.c = -(h.a * u.x + h.b * u.y);
  h.closed = closed;
  return h;
}

HalfPlane HalfPlane::side_of(const Point& u, const Point& v, const Point& toward, bool closed) {
  int s = orientation_sign(u, v, toward);
  if (s == 0) throw PreconditionError("reference point lies on the bounding line", {u, v, toward});
  return s > 0 ? left_of(u, v, closed) : left_of(v, u, closed);
}

HalfPlane HalfPlane::opposite_of(const Point& u, const Point& v, const Point& away, bool closed) {
  int s = orientation_sign(u, v, away);
  if (s == 0) throw PreconditionError("reference point lies on the bounding line", {u, v, away});
  return s > 0 ? left_of(v, u, closed) : left_of(u, v, closed);
}

bool HalfPlane::contains(const Point& p) const {
  int s = sgn(evaluate(p));
  return closed ? s >= 0 : s > 0;
}

bool point_in_convex_region(const Point& p, std::span<const HalfPlane> region) {
  return std::all_of(region.begin(), region.end(), [&](const HalfPlane& h) { return h.contains(p); });
}

bool has_duplicates(std::span<const Point> points) {
  PointSet sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

bool has_distinct_x(std::span<const Point> points) {
  std::vector<Coord> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

PointSet shear_distinct_x(std::span<const Point> points) {
  if (has_duplicates(points)) throw PreconditionError("point set contains duplicate points");
  PointSet out(points.begin(), points.end());
  if (has_distinct_x(points)) return out;

  // x_i + e*y_i == x_j + e*y_j  <=>  e == (x_j - x_i) / (y_i - y_j). Only positive
  // collision values constrain a positive e.
  std::optional<Coord> smallest;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].y == points[j].y) continue;
      Coord collision = (points[j].x - points[i].x) / (points[i].y - points[j].y);
      if (sgn(collision) > 0 && (!smallest || collision < *smallest)) smallest = collision;
    }
  }
  Coord eps = smallest ? Coord(*smallest / 2) : Coord(1);
  for (auto& p : out) p.x += eps * p.y;
  return out;
}

PointSet convex_hull(std::span<const Point> points) {
  PointSet pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  PointSet hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation_sign(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_convex_position(std::span<const Point> points) {
  if (points.size() <= 1) return true;
  if (has_duplicates(points)) return false;
  return convex_hull(points).size() == points.size();
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool point_in_hull(const Point& p, std::span<const Point> hull) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation_sign(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool hulls_intersect(std::span<const Point> first, std::span<const Point> second) {
  PointSet h1 = convex_hull(first);
  PointSet h2 = convex_hull(second);
  if (h1.empty() || h2.empty()) return false;
  for (const auto& p : h1) {
    if (point_in_hull(p, h2)) return true;
  }
  for (const auto& p : h2) {
    if (point_in_hull(p, h1)) return true;
  }
  if (h1.size() < 2 || h2.size() < 2) return false;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const Point& a = h1[i];
    const Point& b = h1[(i + 1) % h1.size()];
    for (std::size_t j = 0; j < h2.size(); ++j) {
      if (segments_intersect(a, b, h2[j], h2[(j + 1) % h2.size()])) return true;
    }
  }
  return false;
}

std::string to_string(const Coord& value) { return value.get_str(); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace cupcap
