#pragma once

// Support regions of a cup or cap, their occupancy by a point set, an
// empirical search for "fat" caps, and the transversal convexity check.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"

namespace cupcap {

/// For a cup/cap x_1..x_k (left to right, indices wrap), region `index` i is
/// the open set beyond edge x_i x_{i+1}, on the x_{i+1} side of line
/// x_{i-1} x_i and on the x_i side of line x_{i+1} x_{i+2}. Index k-1 flanks
/// the long edge x_k x_1.
struct SupportRegion {
  std::size_t index = 0;
  std::vector<HalfPlane> bounds;

  bool contains(const Point& p) const { return point_in_convex_region(p, bounds); }
};

/// All k regions. X may be given in any order; it must form a cup or a cap of
/// at least four points. `closed` yields the closures instead.
std::vector<SupportRegion> support_regions(std::span<const Point> cup_or_cap, bool closed = false);

struct Occupancy {
  std::vector<std::size_t> counts;   ///< one per region
  std::vector<PointSet> members;     ///< points of P in each region, in input order
};

Occupancy populate_support(std::span<const Point> points, std::span<const Point> cup_or_cap, bool closed = false);

struct FatCap {
  StructureKind kind = StructureKind::Cap;
  PointSet members;                      ///< left to right
  std::vector<std::size_t> occupancies;  ///< regions 0..k-2 (the edges of the chain)
  std::size_t min_occupancy = 0;
};

/// Tries `budget` seeded random k-subsets of P, keeps those forming a cup or
/// cap, and returns the one whose least-occupied chain region holds the most
/// points. Falls back to an exact longest cup/cap when sampling finds none.
/// Throws PreconditionError when P has no k-cup and no k-cap.
FatCap find_fat_cap(std::span<const Point> points, std::size_t k, std::uint64_t seed, std::size_t budget);

enum class TransversalMode { Exhaustive, Sampled };

struct TransversalResult {
  bool ok = true;
  TransversalMode mode = TransversalMode::Exhaustive;
  std::size_t checked = 0;
  std::size_t violations = 0;
  PointSet counterexample;  ///< first tuple found not in convex position
};

/// Checks that every selection of one point per part is in convex position:
/// all selections when there are at most `sample_budget`, otherwise
/// `sample_budget` seeded uniform selections. Empty parts make the check
/// vacuous.
TransversalResult transversal_check_parts(std::span<const PointSet> parts, std::size_t sample_budget,
                                          std::uint64_t seed);

/// The same over the chain regions 0..k-2 of X's support, populated from P.
TransversalResult transversal_check(std::span<const Point> points, std::span<const Point> cup_or_cap,
                                    std::size_t sample_budget, std::uint64_t seed, bool closed = false);

}  // namespace cupcap
