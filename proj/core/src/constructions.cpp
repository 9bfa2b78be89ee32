#include "cupcap/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cupcap/bounds.hpp"
#include "cupcap/errors.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/frame.hpp"

namespace cupcap {

Point FlatPlacement::apply(const Point& p) const {
  return Point(scale_x * p.x + translate_x, scale_y * p.y + translate_y);
}

PointSet FlatPlacement::apply(std::span<const Point> points) const {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(apply(p));
  return out;
}

std::string Claim::to_string() const {
  std::ostringstream s;
  if (kind == Kind::Cupcap) {
    s << "x:" << ell << ',' << m << ',' << n;
  } else {
    s << "es:" << ell << ',' << n;
  }
  return s.str();
}

Claim Claim::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("claim must look like x:ell,m,n or es:ell,n");
  std::string kind = text.substr(0, colon);
  std::vector<int> values;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad claim parameter '" + item + "'");
    values.push_back(v);
  }
  Claim c;
  if (kind == "x" && values.size() == 3) {
    c = cupcap(values[0], values[1], values[2]);
  } else if (kind == "es" && values.size() == 2) {
    c = convex(values[0], values[1]);
  } else {
    throw std::invalid_argument("claim must look like x:ell,m,n or es:ell,n");
  }
  if (c.ell < 3 || c.n < 3 || (c.kind == Kind::Cupcap && c.m < 3)) {
    throw std::invalid_argument("claim parameters must be at least 3");
  }
  return c;
}

namespace {

// Smallest power of two (possibly fractional) that is >= value; value > 0.
Coord power_of_two_at_least(const Coord& value) {
  Coord p = 1;
  while (p < value) p *= 2;
  while (p / 2 >= value) p /= 2;
  return p;
}

struct Box {
  Coord min_x, min_y, width, height;
};

Box bounding_box(std::span<const Point> pts) {
  Box b{pts[0].x, pts[0].y, 0, 0};
  Coord max_x = pts[0].x, max_y = pts[0].y;
  for (const auto& p : pts) {
    if (p.x < b.min_x) b.min_x = p.x;
    if (p.y < b.min_y) b.min_y = p.y;
    if (p.x > max_x) max_x = p.x;
    if (p.y > max_y) max_y = p.y;
  }
  b.width = max_x - b.min_x;
  b.height = max_y - b.min_y;
  return b;
}

// Maps the set into [0,1] x [0,1] using power-of-two scales, which keeps
// denominators from accumulating odd factors across recursion levels.
FlatPlacement unit_box(std::span<const Point> pts) {
  Box b = bounding_box(pts);
  FlatPlacement f;
  f.scale_x = sgn(b.width) > 0 ? Coord(1 / power_of_two_at_least(b.width)) : Coord(1);
  f.scale_y = sgn(b.height) > 0 ? Coord(1 / power_of_two_at_least(b.height)) : Coord(1);
  f.translate_x = -b.min_x * f.scale_x;
  f.translate_y = -b.min_y * f.scale_y;
  return f;
}

FlatPlacement then(const FlatPlacement& first, const FlatPlacement& second) {
  FlatPlacement r;
  r.scale_x = second.scale_x * first.scale_x;
  r.scale_y = second.scale_y * first.scale_y;
  r.translate_x = second.scale_x * first.translate_x + second.translate_x;
  r.translate_y = second.scale_y * first.translate_y + second.translate_y;
  return r;
}

PointSet sorted_by_x(PointSet pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

constexpr int kMaxHalvings = 10000;

// Exact check that every line through two points of `block` (ranks
// [lo, hi) of a frame sorted by x) has all of `above` strictly above it and
// all of `below` strictly below it. Each query point lies strictly left or
// right of the block, so directions from it to the block fall in an open
// half-plane where "counterclockwise of" is a total order; checking
// x-consecutive block points is then enough.
bool lines_separate(const Frame& f, std::size_t lo, std::size_t hi, std::span<const std::size_t> above,
                    std::span<const std::size_t> below) {
  for (std::size_t t = lo; t + 1 < hi; ++t) {
    for (auto q : above) {
      if (f.orient(q, t, t + 1) <= 0) return false;
    }
    for (auto q : below) {
      if (f.orient(q, t, t + 1) >= 0) return false;
    }
  }
  return true;
}

}  // namespace

PointSet build_base_cupfree(int ell, int m) {
  if (ell < 3 || m < 3) throw PreconditionError("build_base_cupfree needs ell, m >= 3");
  const int full = (m - 1) / 2;
  const bool lone = (m - 1) % 2 == 1;
  auto vertex = [](int t) { return Point(Coord(t), Coord(t * t)); };
  PointSet out;
  for (int s = 0; s < full; ++s) {
    Point a = vertex(s), b = vertex(s + 1);
    for (int j = 1; j < ell; ++j) {
      Coord t(j, ell);
      t.canonicalize();
      out.emplace_back(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
    }
  }
  if (lone) {
    Point a = vertex(full), b = vertex(full + 1);
    out.emplace_back((a.x + b.x) / 2, (a.y + b.y) / 2);
  }
  return out;
}

PointSet build_base_capfree(int ell, int n) {
  PointSet out = build_base_cupfree(ell, n);
  for (auto& p : out) p.y = -p.y;
  return out;
}

bool flat_separation_holds(std::span<const Point> lower, std::span<const Point> upper) {
  PointSet all = sorted_by_x(PointSet(lower.begin(), lower.end()));
  PointSet up = sorted_by_x(PointSet(upper.begin(), upper.end()));
  if (!all.empty() && !up.empty() && !(all.back().x < up.front().x)) {
    throw PreconditionError("upper set must lie strictly to the right of the lower set");
  }
  const std::size_t nl = all.size();
  all.insert(all.end(), up.begin(), up.end());
  Frame f(all);
  std::vector<std::size_t> lower_idx(nl), upper_idx(all.size() - nl);
  for (std::size_t i = 0; i < nl; ++i) lower_idx[i] = i;
  for (std::size_t i = nl; i < all.size(); ++i) upper_idx[i - nl] = i;
  return lines_separate(f, 0, nl, upper_idx, {}) && lines_separate(f, nl, all.size(), {}, lower_idx);
}

FlatCombination combine_flat_detailed(std::span<const Point> lower, std::span<const Point> upper) {
  if (lower.empty() || upper.empty()) throw PreconditionError("combine_flat needs two nonempty sets");
  FlatPlacement base_lower = unit_box(lower);
  FlatPlacement base_upper = unit_box(upper);
  Coord flat(1, 2);
  for (int halvings = 0; halvings < kMaxHalvings; ++halvings, flat /= 2) {
    FlatCombination r;
    r.lower = then(base_lower, FlatPlacement{1, flat, 0, 0});
    r.upper = then(base_upper, FlatPlacement{1, flat, 2, 1});
    PointSet a = sorted_by_x(r.lower.apply(lower));
    PointSet b = sorted_by_x(r.upper.apply(upper));
    if (flat_separation_holds(a, b)) {
      r.points = std::move(a);
      r.points.insert(r.points.end(), b.begin(), b.end());
      r.halvings = halvings;
      return r;
    }
  }
  throw InvariantError("combine_flat did not converge");
}

PointSet combine_flat(std::span<const Point> lower, std::span<const Point> upper) {
  return combine_flat_detailed(lower, upper).points;
}

namespace {

const PointSet& build_X_cached(int ell, int m, int n, std::map<std::pair<int, int>, PointSet>& cache) {
  auto key = std::make_pair(m, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  PointSet result;
  if (n == 3) {
    result = build_base_cupfree(ell, m);
  } else if (m == 3) {
    result = build_base_capfree(ell, n);
  } else {
    const PointSet& lower = build_X_cached(ell, m - 1, n, cache);
    const PointSet& upper = build_X_cached(ell, m, n - 1, cache);
    result = combine_flat(lower, upper);
  }
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

PointSet build_X(int ell, int m, int n) {
  if (ell < 3 || m < 3 || n < 3) throw PreconditionError("build_X needs ell, m, n >= 3");
  std::map<std::pair<int, int>, PointSet> cache;
  return build_X_cached(ell, m, n, cache);
}

PointSet build_ES_assembly(int ell, int n) {
  if (ell < 3) throw PreconditionError("build_ES_lower needs ell >= 3");
  if (n < 6) throw PreconditionError("build_ES_lower needs n >= 6");
  std::map<std::pair<int, int>, PointSet> cache;
  std::vector<PointSet> blocks;
  blocks.push_back(build_X_cached(ell, n, 3, cache));
  for (int i = 0; i <= n - 6; ++i) blocks.push_back(build_X_cached(ell, n - 2 - i, 4 + i, cache));
  blocks.push_back(build_X_cached(ell, 3, n, cache));
  const int count = static_cast<int>(blocks.size());

  // Anchors on the unit circle via the rational parametrisation
  // t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), from (0,1) at t = 1 to (1,0) at t = 0.
  std::vector<Point> anchors;
  for (int b = 0; b < count; ++b) {
    Coord t = 1 - Coord(b) / Coord(count - 1);
    anchors.emplace_back((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t));
  }
  Coord gap = anchors[1].x - anchors[0].x;
  for (int b = 1; b + 1 < count; ++b) gap = std::min(gap, Coord(anchors[b + 1].x - anchors[b].x));
  Coord size = 1;
  while (size >= gap / 2) size /= 2;

  std::vector<FlatPlacement> unit;
  for (const auto& blk : blocks) unit.push_back(unit_box(blk));

  Coord flat(1, 2);
  for (int halvings = 0; halvings < kMaxHalvings; ++halvings, flat /= 2) {
    PointSet all;
    std::vector<std::size_t> start;
    for (int b = 0; b < count; ++b) {
      FlatPlacement place = then(unit[static_cast<std::size_t>(b)],
                                 FlatPlacement{size, size * flat, anchors[static_cast<std::size_t>(b)].x,
                                               anchors[static_cast<std::size_t>(b)].y});
      start.push_back(all.size());
      PointSet placed = sorted_by_x(place.apply(blocks[static_cast<std::size_t>(b)]));
      all.insert(all.end(), placed.begin(), placed.end());
    }
    start.push_back(all.size());
    Frame f(all);
    bool ok = true;
    for (int b = 0; b < count && ok; ++b) {
      std::vector<std::size_t> earlier, later;
      for (std::size_t i = 0; i < start[static_cast<std::size_t>(b)]; ++i) earlier.push_back(i);
      for (std::size_t i = start[static_cast<std::size_t>(b) + 1]; i < all.size(); ++i) later.push_back(i);
      ok = lines_separate(f, start[static_cast<std::size_t>(b)], start[static_cast<std::size_t>(b) + 1], earlier, later);
    }
    if (ok) return all;
  }
  throw InvariantError("arc assembly did not converge");
}

PointSet build_ES_lower(int ell, int n) {
  PointSet all = build_ES_assembly(ell, n);
  Coord target = es_construction_size(ell, n);
  auto want = static_cast<std::size_t>(mpz_class(target.get_num() / target.get_den()).get_ui());
  if (all.size() < want) throw InvariantError("arc assembly is smaller than (3 ell - 1) 2^(n-5)");
  all.resize(want);
  return all;
}

ConstructionCertificate verify_construction(std::span<const Point> input, const Claim& claim) {
  ConstructionCertificate cert;
  cert.claim = claim;
  cert.size = input.size();
  PointSet pts = has_distinct_x(input) ? PointSet(input.begin(), input.end()) : shear_distinct_x(input);

  cert.max_collinear_points = pts.size() < 2 ? pts.size() : max_collinear(pts).size();
  cert.no_collinear_ell = cert.max_collinear_points < static_cast<std::size_t>(claim.ell);
  cert.longest_cup_points = pts.size() < 2 ? pts.size() : longest_cup(pts).size();
  cert.longest_cap_points = pts.size() < 2 ? pts.size() : longest_cap(pts).size();

  const auto size = Coord(static_cast<unsigned long>(cert.size));
  if (claim.kind == Claim::Kind::Cupcap) {
    cert.required_size = h_ell(claim.ell, claim.m, claim.n);
    cert.passes = cert.no_collinear_ell && cert.longest_cup_points + 1 <= static_cast<std::size_t>(claim.m) &&
                  cert.longest_cap_points + 1 <= static_cast<std::size_t>(claim.n) && size >= cert.required_size;
  } else {
    cert.max_convex_points = pts.size() < 3 ? pts.size() : max_convex_subset(pts).size();
    cert.required_size = es_construction_size(claim.ell, claim.n);
    cert.passes = cert.no_collinear_ell && *cert.max_convex_points + 1 <= static_cast<std::size_t>(claim.n) &&
                  size >= cert.required_size;
  }
  return cert;
}

}  // namespace cupcap
