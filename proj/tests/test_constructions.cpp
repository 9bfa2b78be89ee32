#include <doctest.h>

#include "cupcap/bounds.hpp"
#include "cupcap/constructions.hpp"
#include "cupcap/extremal.hpp"
#include "oracles.hpp"

using namespace cupcap;

namespace {

std::size_t collinear(const PointSet& p) { return p.size() < 2 ? p.size() : max_collinear(p).size(); }

}  // namespace

TEST_CASE("base constructions") {
  PointSet a = build_base_cupfree(3, 5);
  CHECK(a.size() == 4);
  CHECK(collinear(a) <= 2);
  CHECK(longest_cup(a).size() <= 4);
  CHECK(longest_cap(a).size() <= 2);
  CHECK(oracle::brute_longest_cup(a) <= 4);

  PointSet b = build_base_cupfree(4, 5);
  CHECK(b.size() == 6);
  CHECK(collinear(b) == 3);

  CHECK(build_base_cupfree(3, 3).size() == 2);

  PointSet c = build_base_capfree(3, 5);
  CHECK(c.size() == 4);
  CHECK(longest_cup(c).size() <= 2);
  CHECK(longest_cap(c).size() <= 4);

  PointSet d = build_base_capfree(5, 4);
  CHECK(d.size() == 5);
  CHECK(collinear(d) <= 4);
  CHECK(build_base_capfree(3, 3).size() == 2);
}

TEST_CASE("flat combination separates the two halves") {
  PointSet s1 = {{0, 0}}, s2 = {{5, 5}};
  CHECK(combine_flat(s1, s2).size() == 2);

  PointSet a = {{0, 0}, {1, 3}}, b = {{0, 0}, {2, -1}};
  FlatCombination fc = combine_flat_detailed(a, b);
  REQUIRE(fc.points.size() == 4);
  const Point &a0 = fc.points[0], &a1 = fc.points[1], &b0 = fc.points[2], &b1 = fc.points[3];
  // Lines through lower pairs pass below the upper set; lines through upper pairs above the lower set.
  CHECK(orientation(a0, a1, b0) == Orientation::Left);
  CHECK(orientation(a0, a1, b1) == Orientation::Left);
  CHECK(orientation(b0, b1, a0) == Orientation::Right);
  CHECK(orientation(b0, b1, a1) == Orientation::Right);
  CHECK(a1.x < b0.x);
  CHECK(a0.x < b1.x);
  CHECK(fc.halvings < 10000);

  PointSet x333 = build_X(3, 3, 3), x343 = build_X(3, 4, 3);
  CHECK(combine_flat(x333, x343).size() == x333.size() + x343.size());
}

TEST_CASE("fast separation check agrees with the all-pairs definition") {
  for (int m = 4; m <= 6; ++m)
    for (int n = 4; n <= 6; ++n) {
      FlatCombination fc = combine_flat_detailed(build_X(3, m - 1, n), build_X(3, m, n - 1));
      std::size_t split = build_X(3, m - 1, n).size();
      PointSet lower(fc.points.begin(), fc.points.begin() + static_cast<long>(split));
      PointSet upper(fc.points.begin() + static_cast<long>(split), fc.points.end());
      bool all = true;
      for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = i + 1; j < lower.size(); ++j) {
          const Point& l = lower[i].x < lower[j].x ? lower[i] : lower[j];
          const Point& r = lower[i].x < lower[j].x ? lower[j] : lower[i];
          for (const Point& u : upper) all = all && orientation(l, r, u) == Orientation::Left;
        }
      for (std::size_t i = 0; i < upper.size(); ++i)
        for (std::size_t j = i + 1; j < upper.size(); ++j) {
          const Point& l = upper[i].x < upper[j].x ? upper[i] : upper[j];
          const Point& r = upper[i].x < upper[j].x ? upper[j] : upper[i];
          for (const Point& w : lower) all = all && orientation(l, r, w) == Orientation::Right;
        }
      CHECK(all);
      CHECK(flat_separation_holds(lower, upper) == all);
      CHECK(fc.halvings < 10000);
    }
}

TEST_CASE("build_X sizes and certificates") {
  CHECK(build_X(3, 4, 4).size() == 6);
  for (int m = 3; m <= 7; ++m)
    for (int n = 3; n <= 7; ++n) {
      PointSet x = build_X(3, m, n);
      CHECK(mpz_class(static_cast<unsigned long>(x.size())) == binomial(m + n - 4, n - 2));
      if (m > 3 && n > 3) CHECK(x.size() == build_X(3, m - 1, n).size() + build_X(3, m, n - 1).size());
    }
  PointSet x444 = build_X(4, 4, 4);
  CHECK(x444.size() >= 8);
  CHECK(collinear(x444) <= 3);
  ConstructionCertificate cert = verify_construction(build_X(3, 5, 5), Claim::cupcap(3, 5, 5));
  CHECK(cert.passes);
  CHECK(cert.size == 20);
}

TEST_CASE("every builder certifies against its own claim") {
  for (int ell = 3; ell <= 5; ++ell)
    for (int m = 3; m <= 6; ++m)
      for (int n = 3; n <= 6; ++n) {
        ConstructionCertificate c = verify_construction(build_X(ell, m, n), Claim::cupcap(ell, m, n));
        CHECK_MESSAGE(c.passes, "X(" << ell << "," << m << "," << n << ")");
      }
}

TEST_CASE("certificates are invariant under orientation-preserving affine maps") {
  PointSet x = build_X(4, 5, 4);
  ConstructionCertificate base = verify_construction(x, Claim::cupcap(4, 5, 4));
  // Positive diagonal scaling plus translation keeps x-order, so cups stay cups.
  PointSet mapped;
  for (const Point& p : x)
    mapped.emplace_back(Coord(3 * p.x + 7), Coord(2 * p.y + Coord(1, 3)));
  ConstructionCertificate c = verify_construction(mapped, Claim::cupcap(4, 5, 4));
  CHECK(c.passes == base.passes);
  CHECK(c.longest_cup_points == base.longest_cup_points);
  CHECK(c.longest_cap_points == base.longest_cap_points);
  CHECK(c.max_collinear_points == base.max_collinear_points);

  PointSet es = build_ES_lower(3, 6);
  ConstructionCertificate e0 = verify_construction(es, Claim::convex(3, 6));
  PointSet es_mapped;
  // det 7; convex position and collinearity only.
  for (const Point& p : es) es_mapped.emplace_back(Coord(2 * p.x - p.y), Coord(p.x + 3 * p.y + 5));
  ConstructionCertificate e1 = verify_construction(es_mapped, Claim::convex(3, 6));
  CHECK(e1.passes == e0.passes);
  CHECK(e1.max_convex_points == e0.max_convex_points);
  CHECK(e1.max_collinear_points == e0.max_collinear_points);
}

TEST_CASE("ES lower-bound sets") {
  PointSet a = build_ES_lower(3, 6);
  CHECK(a.size() == 16);
  CHECK(max_convex_subset(a).size() <= 5);
  PointSet b = build_ES_lower(4, 6);
  CHECK(b.size() == 22);
  CHECK(max_convex_subset(b).size() <= 5);
  CHECK(collinear(b) <= 3);
  PointSet c = build_ES_lower(3, 7);
  CHECK(c.size() == 32);
  CHECK(max_convex_subset(c).size() <= 6);
  ConstructionCertificate cert = verify_construction(a, Claim::convex(3, 6));
  REQUIRE(cert.max_convex_points.has_value());
  CHECK(*cert.max_convex_points <= 5);
  CHECK(cert.passes);
  CHECK(build_ES_assembly(4, 7).size() >= build_ES_lower(4, 7).size());
  CHECK_THROWS(build_ES_lower(3, 5));
}

TEST_CASE("verifier rejects bad sets") {
  PointSet line = {{0, 0}, {1, 1}, {2, 2}};
  ConstructionCertificate c = verify_construction(line, Claim::cupcap(3, 4, 4));
  CHECK_FALSE(c.no_collinear_ell);
  CHECK_FALSE(c.passes);
  CHECK_FALSE(verify_construction(build_X(3, 5, 5), Claim::cupcap(3, 4, 5)).passes);
}

TEST_CASE("claims parse and print") {
  CHECK(Claim::parse("x:3,5,5") == Claim::cupcap(3, 5, 5));
  CHECK(Claim::parse("es:4,7") == Claim::convex(4, 7));
  CHECK(Claim::cupcap(3, 5, 5).to_string() == "x:3,5,5");
  CHECK_THROWS(Claim::parse("x:3,5"));
  CHECK_THROWS(Claim::parse("q:3,5,5"));
  CHECK_THROWS(Claim::parse("x:2,5,5"));
}
