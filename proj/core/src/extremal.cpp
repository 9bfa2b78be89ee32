#include "cupcap/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cupcap/errors.hpp"
#include "cupcap/frame.hpp"

namespace cupcap {

std::string_view to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Cup: return "cup";
    case StructureKind::Cap: return "cap";
    case StructureKind::CollinearRun: return "collinear";
    case StructureKind::ConvexSubset: return "convex";
    case StructureKind::InnerCap: return "inner-cap";
    case StructureKind::OuterCup: return "outer-cup";
  }
  return "unknown";
}

namespace {

bool monotone_chain(std::span<const Point> pts, int turn) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i].x < pts[i + 1].x)) return false;
  }
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    if (orientation_sign(pts[i], pts[i + 1], pts[i + 2]) != turn) return false;
  }
  return true;
}

}  // namespace

bool is_cup(std::span<const Point> left_to_right) { return monotone_chain(left_to_right, 1); }
bool is_cap(std::span<const Point> left_to_right) { return monotone_chain(left_to_right, -1); }

bool witness_is_valid(const StructureWitness& w) {
  switch (w.kind) {
    case StructureKind::Cup: return w.members.size() >= 2 && is_cup(w.members);
    case StructureKind::Cap: return w.members.size() >= 2 && is_cap(w.members);
    case StructureKind::CollinearRun:
      if (w.members.size() < 2 || has_duplicates(w.members)) return false;
      for (std::size_t i = 2; i < w.members.size(); ++i) {
        if (orientation_sign(w.members[0], w.members[1], w.members[i]) != 0) return false;
      }
      return true;
    case StructureKind::ConvexSubset: return is_convex_position(w.members);
    case StructureKind::InnerCap:
    case StructureKind::OuterCup: return false;
  }
  return false;
}

PairLabels::PairLabels(std::vector<std::size_t> x_order, std::vector<PairLabel> labels)
    : order_(std::move(x_order)), rank_(order_.size()), labels_(std::move(labels)) {
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
}

PairLabel PairLabels::at(std::size_t p, std::size_t q) const {
  std::size_t a = rank_.at(p);
  std::size_t b = rank_.at(q);
  if (a >= b) throw PreconditionError("pair label requested for a pair not in x-order");
  return at_rank(a, b);
}

namespace {

// Points re-indexed in x-order, with their frame.
struct SortedSet {
  std::vector<std::size_t> order;
  PointSet points;
  Frame frame;
};

SortedSet sort_by_x(std::span<const Point> points) {
  if (!has_distinct_x(points)) throw PreconditionError("cup/cap analysis needs distinct x-coordinates");
  SortedSet s;
  s.order.resize(points.size());
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
  s.points.reserve(points.size());
  for (auto i : s.order) s.points.push_back(points[i]);
  s.frame = Frame(s.points);
  return s;
}

// Row-major n x n table over x-order positions; only a < b is used.
using Table = std::vector<std::uint32_t>;

// Edge count of the longest chain (cup for turn = +1, cap for turn = -1) that
// ends with the pair (a, b). For middle j, a chain (i, j) extends to (j, k)
// iff the turn i -> j -> k has the requested sign, i.e. slope(i, j) is below
// (cup) or above (cap) slope(j, k); sorting both sides by slope turns the
// maximisation into a merge.
Table chain_ending(const Frame& f, int turn) {
  const std::size_t n = f.size();
  Table label(n * n, 1);
  std::vector<std::size_t> left, right;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    left.resize(j);
    std::iota(left.begin(), left.end(), std::size_t{0});
    right.resize(n - j - 1);
    std::iota(right.begin(), right.end(), j + 1);
    // Sort so that the "extendable" side comes first in the sweep direction.
    std::sort(left.begin(), left.end(), [&](std::size_t a, std::size_t b) { return f.compare_slopes(a, j, b, j) * turn < 0; });
    std::sort(right.begin(), right.end(), [&](std::size_t a, std::size_t b) { return f.compare_slopes(j, a, j, b) * turn < 0; });
    std::size_t p = 0;
    std::uint32_t best = 0;
    for (std::size_t k : right) {
      while (p < left.size() && f.compare_slopes(left[p], j, j, k) * turn < 0) {
        best = std::max(best, label[left[p] * n + j]);
        ++p;
      }
      label[j * n + k] = best == 0 ? 1 : best + 1;
    }
  }
  return label;
}

// Point count of the longest chain starting with the pair (a, b).
Table chain_starting(const Frame& f, int turn) {
  const std::size_t n = f.size();
  Table start(n * n, 2);
  std::vector<std::size_t> left, right;
  for (std::size_t j = n - 1; j-- > 1;) {
    left.resize(j);
    std::iota(left.begin(), left.end(), std::size_t{0});
    right.resize(n - j - 1);
    std::iota(right.begin(), right.end(), j + 1);
    // (i, j) extends by (j, k) iff turn * (slope(j, k) - slope(i, j)) > 0.
    std::sort(left.begin(), left.end(), [&](std::size_t a, std::size_t b) { return f.compare_slopes(a, j, b, j) * turn > 0; });
    std::sort(right.begin(), right.end(), [&](std::size_t a, std::size_t b) { return f.compare_slopes(j, a, j, b) * turn > 0; });
    std::size_t p = 0;
    std::uint32_t best = 0;
    for (std::size_t i : left) {
      while (p < right.size() && f.compare_slopes(j, right[p], i, j) * turn > 0) {
        best = std::max(best, start[j * n + right[p]]);
        ++p;
      }
      start[i * n + j] = best == 0 ? 2 : best + 1;
    }
  }
  return start;
}

StructureWitness longest_chain(std::span<const Point> points, int turn) {
  if (points.size() < 2) throw PreconditionError("longest cup/cap needs at least two points");
  SortedSet s = sort_by_x(points);
  const std::size_t n = s.points.size();
  Table start = chain_starting(s.frame, turn);

  std::uint32_t best = 0;
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (start[i * n + j] > best) {
        best = start[i * n + j];
        a = i;
        b = j;
      }
    }
  }
  std::vector<std::size_t> seq{a, b};
  while (seq.size() < best) {
    std::size_t want = start[a * n + b] - 1;
    std::size_t next = n;
    for (std::size_t c = b + 1; c < n; ++c) {
      if (s.frame.orient(a, b, c) == turn && start[b * n + c] == want) {
        next = c;
        break;
      }
    }
    if (next == n) throw InvariantError("chain reconstruction failed");
    seq.push_back(next);
    a = b;
    b = next;
  }
  StructureWitness w{turn > 0 ? StructureKind::Cup : StructureKind::Cap, {}};
  for (auto r : seq) w.members.push_back(s.points[r]);
  return w;
}

}  // namespace

PairLabels pair_labels(std::span<const Point> points) {
  SortedSet s = sort_by_x(points);
  const std::size_t n = s.points.size();
  Table cups = chain_ending(s.frame, 1);
  Table caps = chain_ending(s.frame, -1);
  std::vector<PairLabel> labels(n * n);
  for (std::size_t i = 0; i < n * n; ++i) labels[i] = PairLabel{cups[i], caps[i]};
  return PairLabels(std::move(s.order), std::move(labels));
}

StructureWitness longest_cup(std::span<const Point> points) { return longest_chain(points, 1); }
StructureWitness longest_cap(std::span<const Point> points) { return longest_chain(points, -1); }

StructureWitness max_collinear(std::span<const Point> points) {
  if (points.size() < 2) throw PreconditionError("max_collinear needs at least two points");
  if (has_duplicates(points)) throw PreconditionError("point set contains duplicate points");
  Frame frame(points);
  std::vector<std::size_t> order = frame.lexicographic_order();
  const std::size_t n = order.size();

  // Each line is discovered from its lexicographically first member, so every
  // later point's direction lies in the half-plane {dx > 0} U {dx = 0, dy > 0}.
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  std::vector<std::size_t> best;
  std::vector<std::size_t> later;
  for (std::size_t a = 0; a + 1 < n && n - a > best.size(); ++a) {
    std::size_t origin = order[a];
    later.assign(order.begin() + static_cast<std::ptrdiff_t>(a) + 1, order.end());
    std::stable_sort(later.begin(), later.end(), [&](std::size_t p, std::size_t q) {
      return frame.compare_directions(origin, p, origin, q) < 0;
    });
    for (std::size_t lo = 0; lo < later.size();) {
      std::size_t hi = lo + 1;
      while (hi < later.size() && frame.compare_directions(origin, later[lo], origin, later[hi]) == 0) ++hi;
      if (hi - lo + 1 >= best.size()) {
        std::vector<std::size_t> run{a};
        for (std::size_t t = lo; t < hi; ++t) {
          run.push_back(rank[later[t]]);
        }
        std::sort(run.begin(), run.end());
        if (run.size() > best.size() || (run.size() == best.size() && run < best)) best = std::move(run);
      }
      lo = hi;
    }
  }
  StructureWitness w{StructureKind::CollinearRun, {}};
  for (auto r : best) w.members.push_back(points[order[r]]);
  return w;
}

namespace {

// Orientation signs, cached as a dense table when small enough.
class OrientationCache {
 public:
  explicit OrientationCache(const Frame& f) : frame_(f), n_(f.size()) {
    if (n_ <= 256) {
      table_.assign(n_ * n_ * n_, 0);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
          for (std::size_t k = j + 1; k < n_; ++k) {
            auto s = static_cast<std::int8_t>(f.orient(i, j, k));
            auto neg = static_cast<std::int8_t>(-s);
            table_[(i * n_ + j) * n_ + k] = s;
            table_[(j * n_ + k) * n_ + i] = s;
            table_[(k * n_ + i) * n_ + j] = s;
            table_[(j * n_ + i) * n_ + k] = neg;
            table_[(i * n_ + k) * n_ + j] = neg;
            table_[(k * n_ + j) * n_ + i] = neg;
          }
        }
      }
    }
  }

  int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    if (!table_.empty()) return table_[(i * n_ + j) * n_ + k];
    return frame_.orient(i, j, k);
  }

 private:
  const Frame& frame_;
  std::size_t n_;
  std::vector<std::int8_t> table_;
};

}  // namespace

StructureWitness max_convex_subset(std::span<const Point> points) {
  if (points.size() < 3) throw PreconditionError("max_convex_subset needs at least three points");
  if (has_duplicates(points)) throw PreconditionError("point set contains duplicate points");
  Frame frame(points);
  OrientationCache orient(frame);
  const std::size_t n = points.size();
  std::vector<std::size_t> anchors = frame.lexicographic_order();

  std::vector<std::size_t> best{anchors[0], anchors[1]};
  std::vector<std::size_t> cand;
  std::vector<std::uint32_t> count;
  std::vector<std::int32_t> parent;

  for (std::size_t anchor : anchors) {
    // The anchor is the lowest vertex (leftmost among equals) of the polygon.
    cand.clear();
    for (std::size_t q = 0; q < n; ++q) {
      if (q == anchor) continue;
      int dy = frame.compare_y(q, anchor);
      if (dy > 0 || (dy == 0 && frame.compare_x(q, anchor) > 0)) cand.push_back(q);
    }
    if (cand.size() + 1 <= best.size()) continue;
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      int o = orient(anchor, a, b);
      if (o != 0) return o > 0;
      return frame.compare_distance(anchor, a, b) < 0;
    });
    const std::size_t m = cand.size();
    count.assign(m * m, 0);
    parent.assign(m * m, -1);
    std::uint32_t local_best = 0;
    std::size_t end_a = 0, end_b = 0;
    for (std::size_t b = 1; b < m; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (orient(anchor, cand[a], cand[b]) <= 0) continue;
        std::uint32_t value = 3;
        std::int32_t from = -1;
        for (std::size_t c = 0; c < a; ++c) {
          std::uint32_t prev = count[c * m + a];
          if (prev + 1 > value && orient(cand[c], cand[a], cand[b]) > 0) {
            value = prev + 1;
            from = static_cast<std::int32_t>(c);
          }
        }
        count[a * m + b] = value;
        parent[a * m + b] = from;
        if (value > local_best && orient(cand[a], cand[b], anchor) > 0) {
          local_best = value;
          end_a = a;
          end_b = b;
        }
      }
    }
    if (local_best > best.size()) {
      std::vector<std::size_t> chain{cand[end_b], cand[end_a]};
      std::size_t a = end_a, b = end_b;
      while (parent[a * m + b] >= 0) {
        auto c = static_cast<std::size_t>(parent[a * m + b]);
        chain.push_back(cand[c]);
        b = a;
        a = c;
      }
      chain.push_back(anchor);
      std::reverse(chain.begin(), chain.end());
      best = std::move(chain);
    }
  }
  StructureWitness w{StructureKind::ConvexSubset, {}};
  for (auto i : best) w.members.push_back(points[i]);
  return w;
}

StructureWitness max_convex_subset_exhaustive(std::span<const Point> points) {
  if (points.size() < 3) throw PreconditionError("max_convex_subset needs at least three points");
  if (points.size() > 24) throw PreconditionError("exhaustive convex search is limited to 24 points");
  if (has_duplicates(points)) throw PreconditionError("point set contains duplicate points");
  Frame frame(points);
  OrientationCache orient(frame);
  std::vector<std::size_t> lex = frame.lexicographic_order();
  const std::size_t n = points.size();

  // Bits index lexicographic ranks, so a subset is already sorted for the
  // monotone-chain hull.
  std::uint32_t best_mask = 0b11;
  int best_size = 2;
  std::vector<std::size_t> pts, hull(2 * n + 2);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < best_size) continue;
    pts.clear();
    for (std::size_t r = 0; r < n; ++r) {
      if (mask & (1u << r)) pts.push_back(lex[r]);
    }
    std::size_t k = 0;
    for (auto p : pts) {
      while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
      hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    if (static_cast<int>(k - 1) != size) continue;
    // Equal sizes: prefer the lexicographically smaller rank sequence, which
    // is the mask with the lower set bits, i.e. the larger reversed mask.
    bool better = size > best_size;
    if (!better && size == best_size) {
      std::uint32_t diff = mask ^ best_mask;
      better = (mask & (diff & -diff)) != 0;
    }
    if (better) {
      best_size = size;
      best_mask = mask;
    }
  }
  StructureWitness w{StructureKind::ConvexSubset, {}};
  for (std::size_t r = 0; r < n; ++r) {
    if (best_mask & (1u << r)) w.members.push_back(points[lex[r]]);
  }
  return w;
}

std::optional<StructureWitness> find_structure(std::span<const Point> points, int ell, int m, int n) {
  if (ell < 3 || m < 3 || n < 3) throw PreconditionError("find_structure needs ell, m, n >= 3");
  if (points.size() < 2) return std::nullopt;
  StructureWitness line = max_collinear(points);
  if (line.size() >= static_cast<std::size_t>(ell)) return line;
  StructureWitness cup = longest_cup(points);
  if (cup.size() >= static_cast<std::size_t>(m)) return cup;
  StructureWitness cap = longest_cap(points);
  if (cap.size() >= static_cast<std::size_t>(n)) return cap;
  return std::nullopt;
}

}  // namespace cupcap
