#include "cupcap/support.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "cupcap/errors.hpp"
#include "cupcap/frame.hpp"

namespace cupcap {

namespace {

PointSet sorted_chain(std::span<const Point> cup_or_cap) {
  PointSet chain(cup_or_cap.begin(), cup_or_cap.end());
  std::sort(chain.begin(), chain.end());
  if (chain.size() < 4) throw PreconditionError("support regions need a cup or cap of at least 4 points", chain);
  if (!has_distinct_x(chain)) throw PreconditionError("cup/cap points must have distinct x-coordinates", chain);
  if (!is_cup(chain) && !is_cap(chain)) throw PreconditionError("points form neither a cup nor a cap", chain);
  return chain;
}

// Region tests on frame indices: the chain occupies indices [0, k) of the frame.
class RegionTester {
 public:
  RegionTester(const Frame& frame, std::vector<std::size_t> chain, bool closed)
      : frame_(frame), chain_(std::move(chain)), closed_(closed) {
    const std::size_t k = chain_.size();
    for (std::size_t i = 0; i < k; ++i) {
      auto [prev, a, b, next] = corners(i);
      edge_.push_back(frame_.orient(a, b, prev));
      before_.push_back(frame_.orient(prev, a, b));
      after_.push_back(frame_.orient(b, next, a));
    }
  }

  bool contains(std::size_t region, std::size_t p) const {
    auto [prev, a, b, next] = corners(region);
    int e = frame_.orient(a, b, p) * edge_[region];
    int s = frame_.orient(prev, a, p) * before_[region];
    int t = frame_.orient(b, next, p) * after_[region];
    if (closed_) return e <= 0 && s >= 0 && t >= 0;
    return e < 0 && s > 0 && t > 0;
  }

 private:
  struct Corners {
    std::size_t prev, a, b, next;
  };
  Corners corners(std::size_t i) const {
    const std::size_t k = chain_.size();
    return {chain_[(i + k - 1) % k], chain_[i], chain_[(i + 1) % k], chain_[(i + 2) % k]};
  }

  const Frame& frame_;
  std::vector<std::size_t> chain_;
  bool closed_;
  std::vector<int> edge_, before_, after_;
};

}  // namespace

std::vector<SupportRegion> support_regions(std::span<const Point> cup_or_cap, bool closed) {
  PointSet x = sorted_chain(cup_or_cap);
  const std::size_t k = x.size();
  std::vector<SupportRegion> regions;
  regions.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point& prev = x[(i + k - 1) % k];
    const Point& a = x[i];
    const Point& b = x[(i + 1) % k];
    const Point& next = x[(i + 2) % k];
    SupportRegion r;
    r.index = i;
    r.bounds.push_back(HalfPlane::opposite_of(a, b, prev, closed));
    r.bounds.push_back(HalfPlane::side_of(prev, a, b, closed));
    r.bounds.push_back(HalfPlane::side_of(b, next, a, closed));
    regions.push_back(std::move(r));
  }
  return regions;
}

Occupancy populate_support(std::span<const Point> points, std::span<const Point> cup_or_cap, bool closed) {
  PointSet x = sorted_chain(cup_or_cap);
  const std::size_t k = x.size();
  PointSet all = x;
  all.insert(all.end(), points.begin(), points.end());
  Frame frame(all);
  std::vector<std::size_t> chain(k);
  for (std::size_t i = 0; i < k; ++i) chain[i] = i;
  RegionTester tester(frame, chain, closed);

  Occupancy occ;
  occ.counts.assign(k, 0);
  occ.members.assign(k, {});
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t r = 0; r < k; ++r) {
      if (tester.contains(r, k + p)) {
        ++occ.counts[r];
        occ.members[r].push_back(points[p]);
      }
    }
  }
  return occ;
}

FatCap find_fat_cap(std::span<const Point> points, std::size_t k, std::uint64_t seed, std::size_t budget) {
  if (k < 4) throw PreconditionError("fat-cap search needs k >= 4");
  if (points.size() < k) throw PreconditionError("fewer points than k");
  if (has_duplicates(points)) throw PreconditionError("duplicate points");

  Frame frame(points);
  const std::size_t n = points.size();
  std::vector<std::size_t> lex = frame.lexicographic_order();
  std::vector<std::size_t> lex_rank(n);
  for (std::size_t i = 0; i < n; ++i) lex_rank[lex[i]] = i;

  auto chain_kind = [&](const std::vector<std::size_t>& c) -> int {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (frame.compare_x(c[i], c[i + 1]) >= 0) return 0;
    int turn = frame.orient(c[0], c[1], c[2]);
    if (turn == 0) return 0;
    for (std::size_t i = 1; i + 2 < c.size(); ++i)
      if (frame.orient(c[i], c[i + 1], c[i + 2]) != turn) return 0;
    return turn;
  };

  bool found = false;
  FatCap best;
  auto consider = [&](const std::vector<std::size_t>& c, int turn) {
    RegionTester tester(frame, c, false);
    std::vector<std::size_t> counts(k - 1, 0);
    std::size_t floor = found ? best.min_occupancy : 0;
    for (std::size_t r = 0; r + 1 < k; ++r) {
      for (std::size_t p = 0; p < n; ++p)
        if (tester.contains(r, p)) ++counts[r];
      // Cannot beat the incumbent once one region is too thin.
      if (found && counts[r] <= floor) return;
    }
    std::size_t lo = *std::min_element(counts.begin(), counts.end());
    if (found && lo <= best.min_occupancy) return;
    found = true;
    best.kind = turn > 0 ? StructureKind::Cup : StructureKind::Cap;
    best.members.clear();
    for (std::size_t i : c) best.members.push_back(points[i]);
    best.occupancies = std::move(counts);
    best.min_occupancy = lo;
  };

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::size_t> c(k);
  for (std::size_t round = 0; round < budget; ++round) {
    // Partial Fisher-Yates draw of k distinct indices.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
      c[i] = pool[i];
    }
    std::sort(c.begin(), c.end(), [&](std::size_t a, std::size_t b) { return lex_rank[a] < lex_rank[b]; });
    if (int turn = chain_kind(c); turn != 0) consider(c, turn);
  }

  if (!found) {
    if (!has_distinct_x(points))
      throw PreconditionError("no cup or cap found by sampling and x-coordinates are not distinct");
    StructureWitness cup = longest_cup(points);
    StructureWitness cap = longest_cap(points);
    for (const StructureWitness* w : {&cap, &cup}) {
      if (w->size() < k) continue;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i) {
        auto it = std::find(points.begin(), points.end(), w->members[i]);
        idx.push_back(static_cast<std::size_t>(it - points.begin()));
      }
      consider(idx, w == &cup ? 1 : -1);
      break;
    }
    if (!found) throw PreconditionError("point set contains no k-cup and no k-cap");
  }
  return best;
}

TransversalResult transversal_check_parts(std::span<const PointSet> parts, std::size_t sample_budget,
                                          std::uint64_t seed) {
  TransversalResult result;
  for (const PointSet& part : parts)
    if (part.empty()) return result;

  // Number of selections, saturated just above the budget.
  std::size_t total = 1;
  bool over = false;
  for (const PointSet& part : parts) {
    if (total > sample_budget / part.size()) {
      over = true;
      break;
    }
    total *= part.size();
  }
  if (total > sample_budget) over = true;

  PointSet tuple(parts.size());
  auto check = [&] {
    ++result.checked;
    if (!is_convex_position(tuple)) {
      if (result.violations == 0) result.counterexample = tuple;
      ++result.violations;
      result.ok = false;
    }
  };

  if (!over) {
    result.mode = TransversalMode::Exhaustive;
    std::vector<std::size_t> digit(parts.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
      for (std::size_t i = 0; i < parts.size(); ++i) tuple[i] = parts[i][digit[i]];
      check();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (++digit[i] < parts[i].size()) break;
        digit[i] = 0;
      }
    }
  } else {
    result.mode = TransversalMode::Sampled;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < sample_budget; ++t) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, parts[i].size() - 1);
        tuple[i] = parts[i][pick(rng)];
      }
      check();
    }
  }
  return result;
}

TransversalResult transversal_check(std::span<const Point> points, std::span<const Point> cup_or_cap,
                                    std::size_t sample_budget, std::uint64_t seed, bool closed) {
  Occupancy occ = populate_support(points, cup_or_cap, closed);
  occ.members.pop_back();  // the long edge region is not part of the chain
  return transversal_check_parts(occ.members, sample_budget, seed);
}

}  // namespace cupcap
