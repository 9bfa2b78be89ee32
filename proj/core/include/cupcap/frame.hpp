#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cupcap/geometry.hpp"

namespace cupcap {

/// A point set rescaled by the common denominator of its coordinates, so that
/// predicates run on integers. Scaling by a positive constant preserves every
/// orientation and slope comparison. When all scaled coordinates are below
/// 2^61 in magnitude the predicates run on 128-bit machine integers; otherwise
/// they fall back to GMP integers. Either path is exact.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::span<const Point> points);

  std::size_t size() const noexcept { return size_; }
  bool is_small() const noexcept { return small_; }

  /// Sign of (p_j - p_i) x (p_k - p_i).
  int orient(std::size_t i, std::size_t j, std::size_t k) const;

  /// Compares slope(i, j) with slope(k, l); requires x_i < x_j and x_k < x_l.
  int compare_slopes(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

  int compare_x(std::size_t i, std::size_t j) const;
  int compare_y(std::size_t i, std::size_t j) const;

  /// Compares |p_a - p_o|^2 with |p_b - p_o|^2.
  int compare_distance(std::size_t o, std::size_t a, std::size_t b) const;

  /// Compares direction vectors (j - i) and (l - k) by angle within the
  /// half-plane {dx > 0} U {dx == 0, dy > 0}; both must lie in it.
  int compare_directions(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

  /// Indices sorted by (x, y).
  std::vector<std::size_t> lexicographic_order() const;

 private:
  std::size_t size_ = 0;
  bool small_ = true;
  std::vector<std::int64_t> sx_, sy_;
  std::vector<mpz_class> bx_, by_;
};

}  // namespace cupcap
