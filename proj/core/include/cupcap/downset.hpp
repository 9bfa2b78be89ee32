#pragma once

// Down-sets of the grid poset L(a, b) on [a] x [b], ordered componentwise.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"

namespace cupcap {

/// A down-set stored as its column heights: profile[x - 1] is the largest y
/// with (x, y) in the set, 0 for an empty column. Profiles are non-increasing,
/// which makes equality and ordering canonical.
class DownSet {
 public:
  DownSet(int a, int b);
  DownSet(int a, int b, std::vector<int> profile);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<int>& profile() const noexcept { return profile_; }

  /// 1-based membership test.
  bool contains(int x, int y) const;
  bool empty() const noexcept { return profile_.empty() || profile_[0] == 0; }
  std::size_t cardinality() const;

  /// Adds the principal down-set of (x, y).
  void add_generator(int x, int y);

  friend bool operator==(const DownSet&, const DownSet&) = default;
  friend auto operator<=>(const DownSet&, const DownSet&) = default;

 private:
  int a_;
  int b_;
  std::vector<int> profile_;
};

/// D(q): the down-set generated by the labels of all pairs (p, q) with p left
/// of q. Throws PreconditionError when q is not in P or a label leaves the grid.
DownSet downset_of(std::span<const Point> points, const Point& q, int a, int b);

/// Same, reusing labels already computed for the set; q_index indexes the
/// original point order.
DownSet downset_of(const PairLabels& labels, std::size_t q_index, int a, int b);

/// Number of down-sets of L(a, b): binomial(a + b, a).
mpz_class count_downsets(int a, int b);

/// Every down-set of L(a, b) exactly once, in lexicographic profile order.
/// Refuses grids with more than one million down-sets.
std::vector<DownSet> enumerate_downsets(int a, int b);

}  // namespace cupcap
