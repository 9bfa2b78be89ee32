#pragma once

// Exact planar geometry over arbitrary-precision rationals.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cupcap {

/// Exact rational coordinate. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Coord = mpq_class;

struct Point {
  Coord x;
  Coord y;

  Point() = default;
  Point(Coord px, Coord py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
};

using PointSet = std::vector<Point>;

enum class Orientation : int { Right = -1, Collinear = 0, Left = 1 };

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Integer sign of the same cross product, for arithmetic on orientations.
int orientation_sign(const Point& p, const Point& q, const Point& r);

Orientation reversed(Orientation o) noexcept;

/// Open ({a x + b y + c > 0}) or closed ({... >= 0}) half-plane.
struct HalfPlane {
  Coord a;
  Coord b;
  Coord c;
  bool closed = false;

  /// Points strictly (or weakly, when closed) to the left of the directed line u -> v.
  static HalfPlane left_of(const Point& u, const Point& v, bool closed = false);
  /// The side of line(u, v) that contains `toward`; `toward` must not lie on the line.
  static HalfPlane side_of(const Point& u, const Point& v, const Point& toward, bool closed = false);
  /// The side of line(u, v) that does not contain `away`.
  static HalfPlane opposite_of(const Point& u, const Point& v, const Point& away, bool closed = false);

  Coord evaluate(const Point& p) const { return a * p.x + b * p.y + c; }
  bool contains(const Point& p) const;
  HalfPlane as_closed() const { return HalfPlane{a, b, c, true}; }
};

bool point_in_convex_region(const Point& p, std::span<const HalfPlane> region);

bool has_duplicates(std::span<const Point> points);
bool has_distinct_x(std::span<const Point> points);

/// Applies (x, y) -> (x + eps * y, y) with the largest eps of the form
/// (half the smallest positive collision value) so that all x-coordinates
/// become distinct. Shears have determinant 1, so every orientation is kept.
/// Returns the input unchanged when x-coordinates are already distinct.
PointSet shear_distinct_x(std::span<const Point> points);

/// Strict hull vertices in counterclockwise order, starting from the
/// lexicographically smallest point. Points on hull edges are dropped.
PointSet convex_hull(std::span<const Point> points);

/// True iff every point is a strict vertex of the hull of the set.
bool is_convex_position(std::span<const Point> points);

/// Closed containment of p in conv(hull), hull as returned by convex_hull.
bool point_in_hull(const Point& p, std::span<const Point> hull);

/// True iff the closed segments [a, b] and [c, d] share a point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff conv(first) and conv(second) share a point (closed sets).
bool hulls_intersect(std::span<const Point> first, std::span<const Point> second);

/// Renders a coordinate as an integer or p/q token.
std::string to_string(const Coord& value);
std::string to_string(const Point& p);

}  // namespace cupcap
