#pragma once

// Detection of cups, caps, collinear runs and convex subsets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cupcap/geometry.hpp"

namespace cupcap {

enum class StructureKind { Cup, Cap, CollinearRun, ConvexSubset, InnerCap, OuterCup };

std::string_view to_string(StructureKind kind) noexcept;

/// A certified object found in a point set. Cups and caps list their members
/// left to right.
struct StructureWitness {
  StructureKind kind;
  PointSet members;

  std::size_t size() const noexcept { return members.size(); }
};

/// Re-checks a witness from scratch with the geometry predicates. Inner-caps
/// and outer-cups need their body; see relative.hpp.
bool witness_is_valid(const StructureWitness& witness);

/// True iff the points (in the given order) have increasing x and every
/// consecutive triple turns the requested way. Two points always qualify.
bool is_cup(std::span<const Point> left_to_right);
bool is_cap(std::span<const Point> left_to_right);

/// Longest-cup / longest-cap lengths ending at each pair. A pair by itself is a
/// cup and a cap of length 1 (lengths count edges); collinear triples extend
/// neither.
struct PairLabel {
  std::uint32_t x_label = 1;
  std::uint32_t y_label = 1;

  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

class PairLabels {
 public:
  PairLabels() = default;
  PairLabels(std::vector<std::size_t> x_order, std::vector<PairLabel> labels);

  std::size_t size() const noexcept { return order_.size(); }
  /// Indices of the input points sorted by x.
  const std::vector<std::size_t>& x_order() const noexcept { return order_; }
  /// Position of input point `index` in x-order.
  std::size_t rank(std::size_t index) const { return rank_[index]; }

  /// Label of the pair of input points (p, q); p must precede q in x-order.
  PairLabel at(std::size_t p, std::size_t q) const;
  /// Label of the pair at x-order positions (a, b), a < b.
  PairLabel at_rank(std::size_t a, std::size_t b) const { return labels_[a * order_.size() + b]; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  std::vector<PairLabel> labels_;
};

/// Requires distinct x-coordinates. O(n^2 log n).
PairLabels pair_labels(std::span<const Point> points);

/// Maximum cup; ties go to the lexicographically smallest sequence of x-order
/// positions. Requires |P| >= 2 and distinct x-coordinates.
StructureWitness longest_cup(std::span<const Point> points);
StructureWitness longest_cap(std::span<const Point> points);

/// Largest subset on a common line. Requires |P| >= 2.
StructureWitness max_collinear(std::span<const Point> points);

/// Largest subset in strict convex position, by dynamic programming over
/// angularly sorted chains anchored at each possible bottom vertex. O(n^4)
/// orientation lookups. Requires |P| >= 3.
StructureWitness max_convex_subset(std::span<const Point> points);

/// Exhaustive search over all subsets; for cross-checking (|P| <= 24).
StructureWitness max_convex_subset_exhaustive(std::span<const Point> points);

/// An ell-point collinear run, an m-cup or an n-cap, preferring them in that
/// order; nullopt when the set contains none of the three.
std::optional<StructureWitness> find_structure(std::span<const Point> points, int ell, int m, int n);

}  // namespace cupcap
