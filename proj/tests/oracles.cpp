#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "cupcap/errors.hpp"

namespace oracle {

using cupcap::orientation_sign;

PointSet select(std::span<const Point> points, std::uint32_t mask) {
  PointSet s;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask >> i & 1U) s.push_back(points[i]);
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Direct definition: increasing x, every consecutive triple turning `turn`.
bool chain_turns(const PointSet& s, int turn) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!(s[i].x < s[i + 1].x)) return false;
  for (std::size_t i = 0; i + 2 < s.size(); ++i)
    if (orientation_sign(s[i], s[i + 1], s[i + 2]) != turn) return false;
  return true;
}

template <class Pred>
std::size_t best_subset(std::span<const Point> points, Pred pred) {
  std::size_t best = 0;
  const std::uint32_t full = 1U << points.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    if (pred(select(points, mask))) best = size;
  }
  return best;
}

// A point is a strict hull vertex iff it is outside the hull of the others;
// tested here with triangles and segments only (Caratheodory).
bool in_convex_position_direct(const PointSet& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (i == j || i == k) continue;
        if (orientation_sign(s[j], s[k], s[i]) == 0 && std::min(s[j], s[k]) <= s[i] && s[i] <= std::max(s[j], s[k]))
          return false;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (l == i) continue;
          int a = orientation_sign(s[j], s[k], s[i]);
          int b = orientation_sign(s[k], s[l], s[i]);
          int c = orientation_sign(s[l], s[j], s[i]);
          bool has_neg = a < 0 || b < 0 || c < 0, has_pos = a > 0 || b > 0 || c > 0;
          if (!(has_neg && has_pos) && orientation_sign(s[j], s[k], s[l]) != 0) return false;
        }
      }
  return true;
}

}  // namespace

std::size_t brute_longest_cup(std::span<const Point> points) {
  return best_subset(points, [](const PointSet& s) { return chain_turns(s, 1); });
}

std::size_t brute_longest_cap(std::span<const Point> points) {
  return best_subset(points, [](const PointSet& s) { return chain_turns(s, -1); });
}

std::size_t brute_max_convex(std::span<const Point> points) {
  return best_subset(points, in_convex_position_direct);
}

std::size_t brute_max_collinear(std::span<const Point> points) {
  return best_subset(points, [](const PointSet& s) {
    for (std::size_t i = 2; i < s.size(); ++i)
      if (orientation_sign(s[0], s[1], s[i]) != 0) return false;
    return true;
  });
}

namespace {

std::size_t brute_ending(std::span<const Point> points, const Point& p, const Point& q, int turn) {
  std::size_t best = 0;
  const std::uint32_t full = 1U << points.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    PointSet s = select(points, mask);
    if (s.size() < 2 || !(s[s.size() - 2] == p) || !(s.back() == q)) continue;
    if (chain_turns(s, turn)) best = std::max(best, s.size() - 1);
  }
  return best;
}

}  // namespace

std::size_t brute_cup_ending(std::span<const Point> points, const Point& p, const Point& q) {
  return brute_ending(points, p, q, 1);
}

std::size_t brute_cap_ending(std::span<const Point> points, const Point& p, const Point& q) {
  return brute_ending(points, p, q, -1);
}

std::size_t brute_inner_cap(std::span<const Point> points, const cupcap::ConvexBody& body) {
  return best_subset(points, [&](const PointSet& s) { return cupcap::is_inner_cap_wrt(s, body); });
}

std::size_t brute_outer_cup(std::span<const Point> points, const cupcap::ConvexBody& body) {
  return best_subset(points, [&](const PointSet& s) { return cupcap::is_outer_cup_wrt(s, body); });
}

std::size_t brute_max_antichain(const cupcap::PartialOrderInstance& order) {
  const std::size_t n = order.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && order.comparable(i, j)) ok = false;
    if (ok) best = size;
  }
  return best;
}

PointSet random_general_position(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> d(-range, range);
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  std::set<std::int64_t> xs;
  while (pts.size() < n) {
    std::int64_t x = d(rng), y = d(rng);
    if (xs.count(x)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        __extension__ __int128 cross =
            static_cast<__int128>(pts[j].first - pts[i].first) * (y - pts[i].second) -
            static_cast<__int128>(pts[j].second - pts[i].second) * (x - pts[i].first);
        ok = cross != 0;
      }
    if (!ok) continue;
    xs.insert(x);
    pts.emplace_back(x, y);
  }
  PointSet out;
  for (auto [x, y] : pts) out.emplace_back(static_cast<long>(x), static_cast<long>(y));
  return out;
}

PointSet random_points(std::mt19937_64& rng, std::size_t n, std::int64_t lo_x, std::int64_t hi_x,
                       std::int64_t lo_y, std::int64_t hi_y) {
  std::uniform_int_distribution<std::int64_t> dx(lo_x, hi_x), dy(lo_y, hi_y);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  PointSet out;
  while (out.size() < n) {
    auto p = std::make_pair(dx(rng), dy(rng));
    if (!seen.insert(p).second) continue;
    out.emplace_back(static_cast<long>(p.first), static_cast<long>(p.second));
  }
  return out;
}

PointSet random_avoiding(std::mt19937_64& rng, std::size_t n, std::span<const cupcap::ConvexBody> bodies,
                         std::int64_t lo_x, std::int64_t hi_x, std::int64_t lo_y, std::int64_t hi_y,
                         std::size_t attempts) {
  std::uniform_int_distribution<std::int64_t> dx(lo_x, hi_x), dy(lo_y, hi_y);
  PointSet out;
  for (std::size_t t = 0; t < attempts && out.size() < n; ++t) {
    Point p(static_cast<long>(dx(rng)), static_cast<long>(dy(rng)));
    PointSet trial = out;
    trial.push_back(p);
    bool ok = true;
    for (const auto& body : bodies) {
      try {
        cupcap::check_radial_preconditions(trial, body);
      } catch (const cupcap::PreconditionError&) {
        ok = false;
        break;
      }
    }
    if (ok) out = std::move(trial);
  }
  return out;
}

}  // namespace oracle
