#include <doctest.h>

#include <random>
#include <sstream>

#include "cupcap/errors.hpp"
#include "cupcap/frame.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/point_io.hpp"
#include "oracles.hpp"

using namespace cupcap;

TEST_CASE("orientation of basic triples") {
  CHECK(orientation({0, 0}, {1, 0}, {2, 1}) == Orientation::Left);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  CHECK(orientation({0, 0}, {1, 0}, {2, -1}) == Orientation::Right);
}

TEST_CASE("orientation handles rationals and huge integers exactly") {
  Point a(Coord(1, 3), Coord(1, 7));
  Point b(Coord(2, 3), Coord(2, 7));
  Point c(Coord(1, 1), Coord(3, 7));
  CHECK(orientation(a, b, c) == Orientation::Collinear);
  mpz_class big("123456789012345678901234567890");
  Point p{Coord(big), Coord(big)}, q{Coord(big + 1), Coord(big + 1)}, r{Coord(big + 2), Coord(big + 3)};
  CHECK(orientation(p, q, r) == Orientation::Left);
  CHECK(orientation(p, q, Point{Coord(big + 2), Coord(big + 2)}) == Orientation::Collinear);
}

TEST_CASE("orientation is antisymmetric and affine invariant") {
  std::mt19937_64 rng(11);
  PointSet pts = oracle::random_points(rng, 40, -50, 50, -50, 50);
  Coord s(7, 3), tx(-5, 11), ty(13, 2);
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    const Point &p = pts[i], &q = pts[i + 1], &r = pts[i + 2];
    Orientation o = orientation(p, q, r);
    CHECK(orientation(q, p, r) == reversed(o));
    CHECK(orientation(p, r, q) == reversed(o));
    CHECK(orientation(r, q, p) == reversed(o));
    auto f = [&](const Point& u) { return Point(Coord(u.x * s + tx), Coord(u.y * s + ty)); };
    CHECK(orientation(f(p), f(q), f(r)) == o);
  }
}

TEST_CASE("frame predicates agree with the rational kernel") {
  std::mt19937_64 rng(5);
  PointSet pts = oracle::random_points(rng, 30, -1000, 1000, -1000, 1000);
  pts.emplace_back(Coord(1, 3), Coord(-2, 9));
  pts.emplace_back(Coord(mpz_class("99999999999999999999")), Coord(1, 2));
  Frame f(pts);
  CHECK_FALSE(f.is_small());
  for (std::size_t i = 0; i + 2 < pts.size(); ++i)
    CHECK(f.orient(i, i + 1, i + 2) == orientation_sign(pts[i], pts[i + 1], pts[i + 2]));
  Frame small(std::span<const Point>(pts.data(), 30));
  CHECK(small.is_small());
  for (std::size_t i = 0; i + 2 < 30; ++i)
    CHECK(small.orient(i, i + 1, i + 2) == orientation_sign(pts[i], pts[i + 1], pts[i + 2]));
}

TEST_CASE("shear_distinct_x") {
  PointSet a = {{0, 0}, {0, 1}, {1, 0}};
  PointSet sa = shear_distinct_x(a);
  CHECK(has_distinct_x(sa));
  CHECK(orientation(sa[0], sa[1], sa[2]) == orientation(a[0], a[1], a[2]));

  PointSet b = {{0, 0}, {1, 1}};
  CHECK(shear_distinct_x(b) == b);

  PointSet c = {{0, 0}, {0, 1}, {0, 2}};
  PointSet sc = shear_distinct_x(c);
  CHECK(has_distinct_x(sc));
  CHECK(orientation(sc[0], sc[1], sc[2]) == Orientation::Collinear);

  PointSet dup = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(shear_distinct_x(dup), PreconditionError);
}

TEST_CASE("shear keeps every orientation on grid-like sets") {
  std::mt19937_64 rng(17);
  PointSet pts = oracle::random_points(rng, 45, 0, 6, 0, 12);
  PointSet s = shear_distinct_x(pts);
  REQUIRE(has_distinct_x(s));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        REQUIRE(orientation(pts[i], pts[j], pts[k]) == orientation(s[i], s[j], s[k]));
}

TEST_CASE("convex hull and convex position") {
  PointSet grid;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) grid.emplace_back(x, y);
  PointSet h = convex_hull(grid);
  CHECK(h == PointSet{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(convex_hull(PointSet{{0, 0}, {1, 1}, {2, 2}}) == PointSet{{0, 0}, {2, 2}});
  CHECK(convex_hull(PointSet{{0, 0}}) == PointSet{{0, 0}});

  CHECK(is_convex_position(PointSet{{0, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 2}}));
  CHECK_FALSE(is_convex_position(PointSet{{0, 0}, {1, 0}, {2, 0}}));
  CHECK(is_convex_position(PointSet{{3, 4}, {-1, 2}}));
}

TEST_CASE("hull equals the set exactly in convex position") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    PointSet pts = oracle::random_points(rng, 2 + t % 7, -4, 4, -4, 4);
    PointSet h = convex_hull(pts);
    bool same = h.size() == pts.size();
    CHECK(is_convex_position(pts) == same);
    CHECK(is_convex_position(pts) == (oracle::brute_max_convex(pts) == pts.size()));
  }
}

TEST_CASE("half-plane regions") {
  HalfPlane above{0, 1, 1};  // y > -1
  HalfPlane right{1, 0, 0};  // x > 0
  Point o(0, 0);
  CHECK(point_in_convex_region(o, std::vector<HalfPlane>{above}));
  CHECK_FALSE(point_in_convex_region(o, std::vector<HalfPlane>{right}));
  CHECK(point_in_convex_region(o, std::vector<HalfPlane>{right.as_closed()}));

  Point a(0, 0), b(4, 0), c(2, 3);
  std::vector<HalfPlane> tri = {HalfPlane::side_of(a, b, c), HalfPlane::side_of(b, c, a), HalfPlane::side_of(c, a, b)};
  CHECK(point_in_convex_region(Point(2, 1), tri));
  CHECK_FALSE(point_in_convex_region(Point(2, 0), tri));
  CHECK_FALSE(point_in_convex_region(Point(5, 1), tri));
}

TEST_CASE("segment and hull intersection") {
  CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK(segments_intersect({0, 0}, {2, 0}, {2, 0}, {3, 5}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
  CHECK(hulls_intersect(PointSet{{0, 0}, {4, 0}, {0, 4}}, PointSet{{1, 1}}));
  CHECK_FALSE(hulls_intersect(PointSet{{0, 0}, {4, 0}, {0, 4}}, PointSet{{3, 3}, {5, 5}}));
  CHECK(hulls_intersect(PointSet{{0, 0}, {4, 4}}, PointSet{{0, 4}, {4, 0}}));
}

TEST_CASE("points file round trip and parse errors") {
  PointSet pts = {{0, 0}, {Coord(-3, 7), Coord(5)}, {Coord(mpz_class("123456789012345678901")), Coord(1, 2)}};
  std::string text = format_points(pts);
  std::istringstream in(text);
  CHECK(read_points(in) == pts);

  std::istringstream comments("espts v1\n# comment\n1 2\n\n3/4 -5\n");
  CHECK(read_points(comments) == PointSet{{1, 2}, {Coord(3, 4), Coord(-5)}});

  auto line_of = [](const std::string& s) {
    std::istringstream is(s);
    try {
      read_points(is);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("espts v1\n1 2\n3 x\n") == 3);
  CHECK(line_of("espts v1\n1 2/0\n") == 2);
  CHECK(line_of("espts v1\n2/4 1\n") == 2);
  CHECK(line_of("espts v1\n1 2 3\n") == 2);
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("espts v1\n1 2 # note\n") == 2);
  CHECK(parse_coord("-3/2") == Coord(-3, 2));
  CHECK(parse_coord("+7") == Coord(7));
  CHECK_THROWS(parse_coord("-6/4"));
}
