#pragma once

// Lower-bound point sets: sets without ell collinear points, m-cups or n-caps,
// and the arc assembly that avoids n points in convex position. Every builder
// places its pieces by verify-then-shrink, and every output can be certified
// independently with verify_construction.

#include <cstddef>
#include <optional>
#include <string>

#include "cupcap/geometry.hpp"

namespace cupcap {

/// Axis-aligned, orientation-preserving affine map.
struct FlatPlacement {
  Coord scale_x{1};
  Coord scale_y{1};
  Coord translate_x{0};
  Coord translate_y{0};

  Point apply(const Point& p) const;
  PointSet apply(std::span<const Point> points) const;
};

/// Parameters of a claimed construction: either "no ell collinear, no m-cup,
/// no n-cap" (kind Cupcap) or "no ell collinear, no n in convex position"
/// (kind Convex, m unused).
struct Claim {
  enum class Kind { Cupcap, Convex };
  Kind kind = Kind::Cupcap;
  int ell = 3;
  int m = 3;
  int n = 3;

  static Claim cupcap(int ell, int m, int n) { return Claim{Kind::Cupcap, ell, m, n}; }
  static Claim convex(int ell, int n) { return Claim{Kind::Convex, ell, 0, n}; }

  /// "x:ell,m,n" or "es:ell,n".
  std::string to_string() const;
  static Claim parse(const std::string& text);

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ConstructionCertificate {
  Claim claim;
  std::size_t size = 0;
  std::size_t max_collinear_points = 0;
  bool no_collinear_ell = false;
  std::size_t longest_cup_points = 0;
  std::size_t longest_cap_points = 0;
  std::optional<std::size_t> max_convex_points;
  Coord required_size;  ///< h_ell(ell, m, n) or (3 ell - 1) 2^(n-5)
  bool passes = false;
};

/// X_{ell,m,3}: points on a strictly convex lower chain (vertices on a
/// parabola), ell-1 evenly spaced interior points on each of floor((m-1)/2)
/// segments, plus one lone point on the next segment when m-1 is odd.
PointSet build_base_cupfree(int ell, int m);

/// X_{ell,3,n}: the mirror image of build_base_cupfree(ell, n).
PointSet build_base_capfree(int ell, int n);

struct FlatCombination {
  PointSet points;       ///< placed lower set followed by placed upper set
  FlatPlacement lower;
  FlatPlacement upper;
  int halvings = 0;      ///< vertical-scale halvings needed until verified
};

/// Places `upper` above and to the right of `lower`, both flattened, until
/// every line through two placed lower points passes strictly below all placed
/// upper points and every line through two placed upper points passes strictly
/// above all placed lower points.
FlatCombination combine_flat_detailed(std::span<const Point> lower, std::span<const Point> upper);
PointSet combine_flat(std::span<const Point> lower, std::span<const Point> upper);

/// True iff both separation conditions of combine_flat hold for the given
/// (already placed) sets; requires every upper point to lie strictly right of
/// every lower point.
bool flat_separation_holds(std::span<const Point> lower, std::span<const Point> upper);

/// X_{ell,m,n} by the recursive flat combination.
PointSet build_X(int ell, int m, int n);

/// The arc assembly: X_{ell,n,3} near (0,1), X_{ell,3,n} near (1,0) and
/// X_{ell,n-2-i,4+i}, i = 0..n-6, between them along the unit circle. For even
/// ell its size can exceed (3 ell - 1) 2^(n-5). Requires n >= 6.
PointSet build_ES_assembly(int ell, int n);

/// The arc assembly trimmed (largest x first) to exactly (3 ell - 1) 2^(n-5)
/// points. Removing points never creates collinear runs or convex subsets.
PointSet build_ES_lower(int ell, int n);

/// Re-derives every bound of the claim from the coordinates alone. Sets with
/// repeated x-coordinates are sheared first, which keeps every orientation.
ConstructionCertificate verify_construction(std::span<const Point> points, const Claim& claim);

}  // namespace cupcap
