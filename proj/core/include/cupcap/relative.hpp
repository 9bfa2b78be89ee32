#pragma once

// Cups and caps measured against a convex body, the induced partial order and
// per-cell profiles.

#include <cstddef>
#include <span>
#include <vector>

#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"

namespace cupcap {

/// A point, a segment or a convex polygon.
class ConvexBody {
 public:
  enum class Kind { Point, Segment, Polygon };

  static ConvexBody point(const cupcap::Point& p);
  static ConvexBody segment(const cupcap::Point& a, const cupcap::Point& b);
  /// Hull of the given points; must have nonzero area.
  static ConvexBody polygon(std::span<const cupcap::Point> points);

  Kind kind() const noexcept { return kind_; }
  /// Hull vertices (one for a point, two for a segment).
  const PointSet& vertices() const noexcept { return vertices_; }

 private:
  Kind kind_ = Kind::Point;
  PointSet vertices_;
};

/// Throws PreconditionError unless P has no duplicates, conv(P) and K are
/// disjoint, and every line through two points of P misses K. The witness is
/// the offending pair (or K's vertices for a separation failure).
void check_radial_preconditions(std::span<const Point> points, const ConvexBody& body);

/// P sorted clockwise as seen from K.
PointSet radial_order(std::span<const Point> points, const ConvexBody& body);

enum class TripleClass { InnerCap, OuterCup, Collinear };

/// A triple is an inner-cap when no member lies in the hull of K and the other
/// two, and an outer-cup when the hull of K and any one member misses the
/// segment of the other two. Checks the radial preconditions on the triple.
TripleClass classify_triple_wrt(const ConvexBody& body, const Point& p, const Point& q, const Point& r);

bool is_inner_cap_wrt(std::span<const Point> points, const ConvexBody& body);
bool is_outer_cup_wrt(std::span<const Point> points, const ConvexBody& body);

/// Re-checks any witness, including inner-caps and outer-cups against `body`.
bool witness_is_valid(const StructureWitness& witness, const ConvexBody& body);

/// Largest inner-cap / outer-cup, members in radial order.
StructureWitness longest_inner_cap(std::span<const Point> points, const ConvexBody& body);
StructureWitness longest_outer_cup(std::span<const Point> points, const ConvexBody& body);

/// p < q iff p != q and p lies in the closed hull of B and q.
class PartialOrderInstance {
 public:
  PartialOrderInstance(PointSet ground, ConvexBody body, std::vector<char> relation);

  std::size_t size() const noexcept { return ground_.size(); }
  const PointSet& ground() const noexcept { return ground_; }
  const ConvexBody& body() const noexcept { return body_; }
  bool less(std::size_t i, std::size_t j) const { return relation_[i * ground_.size() + j] != 0; }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

 private:
  PointSet ground_;
  ConvexBody body_;
  std::vector<char> relation_;
};

/// Builds the order and verifies asymmetry and transitivity; a failure throws
/// with the offending pair or triple as witness.
PartialOrderInstance prec_order(std::span<const Point> points, const ConvexBody& body);

struct DilworthResult {
  std::vector<std::size_t> chain;      ///< ground indices, increasing in the order
  std::vector<std::size_t> antichain;  ///< ground indices, ascending
  /// Minimum chain cover, one chain per entry; its size equals the antichain's.
  std::vector<std::vector<std::size_t>> cover;
};

/// Longest chain, and a maximum antichain certified by a chain cover of the
/// same size (bipartite matching plus Konig's construction).
DilworthResult dilworth(const PartialOrderInstance& order);

struct CellProfile {
  std::size_t h = 0;  ///< largest antichain
  std::size_t v = 0;  ///< longest chain
  std::size_t a = 0;  ///< longest chain that is an inner-cap w.r.t. the right point
  std::size_t b = 0;  ///< longest chain that is an inner-cap w.r.t. the left point
  std::size_t w = 0;  ///< longest antichain that is an inner-cap w.r.t. B
  std::size_t z = 0;  ///< longest antichain that is an outer-cup w.r.t. B
  PointSet chain, antichain, a_witness, b_witness, w_witness, z_witness;
};

/// Requires P to satisfy the radial preconditions for {left} and {right}, and
/// conv(P) to miss B.
CellProfile cell_profile(std::span<const Point> points, const Point& left, const Point& right,
                         const ConvexBody& body);

}  // namespace cupcap
