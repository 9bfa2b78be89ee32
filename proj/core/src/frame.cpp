#include "cupcap/frame.hpp"
#include "wide_int.hpp"

#include <algorithm>
#include <numeric>

namespace cupcap {

using detail::i128;
using detail::sign_of;

namespace {

constexpr long kLimit = 1L << 61;



}  // namespace

Frame::Frame(std::span<const Point> points) : size_(points.size()) {
  mpz_class common = 1;
  for (const auto& p : points) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.x.get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.y.get_den_mpz_t());
  }
  bx_.reserve(size_);
  by_.reserve(size_);
  for (const auto& p : points) {
    mpz_class x = p.x.get_num() * (common / p.x.get_den());
    mpz_class y = p.y.get_num() * (common / p.y.get_den());
    for (const auto* v : {&x, &y}) {
      if (!mpz_fits_slong_p(v->get_mpz_t()) || v->get_si() >= kLimit || v->get_si() <= -kLimit) small_ = false;
    }
    bx_.push_back(std::move(x));
    by_.push_back(std::move(y));
  }
  if (small_) {
    sx_.reserve(size_);
    sy_.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      sx_.push_back(bx_[i].get_si());
      sy_.push_back(by_[i].get_si());
    }
    bx_.clear();
    by_.clear();
  }
}

int Frame::orient(std::size_t i, std::size_t j, std::size_t k) const {
  if (small_) {
    i128 ax = sx_[j] - sx_[i];
    i128 ay = sy_[j] - sy_[i];
    i128 bx = sx_[k] - sx_[i];
    i128 by = sy_[k] - sy_[i];
    return sign_of(ax * by - ay * bx);
  }
  mpz_class v = (bx_[j] - bx_[i]) * (by_[k] - by_[i]) - (by_[j] - by_[i]) * (bx_[k] - bx_[i]);
  return sgn(v);
}

int Frame::compare_slopes(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  // dy1/dx1 ? dy2/dx2 with positive dx  <=>  dy1*dx2 ? dy2*dx1
  if (small_) {
    i128 dx1 = sx_[j] - sx_[i];
    i128 dy1 = sy_[j] - sy_[i];
    i128 dx2 = sx_[l] - sx_[k];
    i128 dy2 = sy_[l] - sy_[k];
    return sign_of(dy1 * dx2 - dy2 * dx1);
  }
  mpz_class v = (by_[j] - by_[i]) * (bx_[l] - bx_[k]) - (by_[l] - by_[k]) * (bx_[j] - bx_[i]);
  return sgn(v);
}

int Frame::compare_x(std::size_t i, std::size_t j) const {
  if (small_) return (sx_[i] > sx_[j]) - (sx_[i] < sx_[j]);
  int c = cmp(bx_[i], bx_[j]);
  return (c > 0) - (c < 0);
}

int Frame::compare_y(std::size_t i, std::size_t j) const {
  if (small_) return (sy_[i] > sy_[j]) - (sy_[i] < sy_[j]);
  int c = cmp(by_[i], by_[j]);
  return (c > 0) - (c < 0);
}

int Frame::compare_distance(std::size_t o, std::size_t a, std::size_t b) const {
  if (small_) {
    i128 ax = sx_[a] - sx_[o], ay = sy_[a] - sy_[o];
    i128 bx = sx_[b] - sx_[o], by = sy_[b] - sy_[o];
    return sign_of((ax * ax + ay * ay) - (bx * bx + by * by));
  }
  mpz_class ax = bx_[a] - bx_[o], ay = by_[a] - by_[o];
  mpz_class bx = bx_[b] - bx_[o], by = by_[b] - by_[o];
  return sgn(mpz_class(ax * ax + ay * ay - bx * bx - by * by));
}

int Frame::compare_directions(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  // Within the half-plane, d1 < d2 in angle iff cross(d1, d2) > 0.
  if (small_) {
    i128 ax = sx_[j] - sx_[i];
    i128 ay = sy_[j] - sy_[i];
    i128 bx = sx_[l] - sx_[k];
    i128 by = sy_[l] - sy_[k];
    return -sign_of(ax * by - ay * bx);
  }
  mpz_class v = (bx_[j] - bx_[i]) * (by_[l] - by_[k]) - (by_[j] - by_[i]) * (bx_[l] - bx_[k]);
  return -sgn(v);
}

std::vector<std::size_t> Frame::lexicographic_order() const {
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (small_) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sx_[a] != sx_[b] ? sx_[a] < sx_[b] : sy_[a] < sy_[b];
    });
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      int c = cmp(bx_[a], bx_[b]);
      return c != 0 ? c < 0 : by_[a] < by_[b];
    });
  }
  return order;
}

}  // namespace cupcap
