#include "cupcap/relative.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cupcap/errors.hpp"

namespace cupcap {

ConvexBody ConvexBody::point(const cupcap::Point& p) {
  ConvexBody body;
  body.kind_ = Kind::Point;
  body.vertices_ = {p};
  return body;
}

ConvexBody ConvexBody::segment(const cupcap::Point& a, const cupcap::Point& b) {
  if (a == b) throw PreconditionError("segment endpoints coincide", {a});
  ConvexBody body;
  body.kind_ = Kind::Segment;
  body.vertices_ = a < b ? PointSet{a, b} : PointSet{b, a};
  return body;
}

ConvexBody ConvexBody::polygon(std::span<const cupcap::Point> points) {
  PointSet hull = convex_hull(points);
  if (hull.size() < 3) throw PreconditionError("polygon has zero area", PointSet(points.begin(), points.end()));
  ConvexBody body;
  body.kind_ = Kind::Polygon;
  body.vertices_ = std::move(hull);
  return body;
}

void check_radial_preconditions(std::span<const Point> points, const ConvexBody& body) {
  if (has_duplicates(points)) throw PreconditionError("duplicate points");
  const PointSet& k = body.vertices();
  if (hulls_intersect(points, k)) throw PreconditionError("point set and body are not separated", k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      int side = orientation_sign(points[i], points[j], k[0]);
      bool avoids = side != 0;
      for (std::size_t v = 1; avoids && v < k.size(); ++v)
        avoids = orientation_sign(points[i], points[j], k[v]) == side;
      if (!avoids) throw PreconditionError("line through two points meets the body", {points[i], points[j]});
    }
  }
}

namespace {

// Angular order about one vertex of K. Under the radial preconditions this is
// a strict total order; otherwise points on a common ray through the vertex tie.
std::vector<std::size_t> radial_indices(std::span<const Point> points, const ConvexBody& body) {
  const Point& ref = body.vertices().front();
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return orientation_sign(ref, points[a], points[b]) < 0;
  });
  return order;
}

PointSet with_body(std::initializer_list<const Point*> extra, const ConvexBody& body) {
  PointSet s = body.vertices();
  for (const Point* p : extra) s.push_back(*p);
  return s;
}

TripleClass classify_unchecked(const ConvexBody& body, const Point& p, const Point& q, const Point& r) {
  if (orientation_sign(p, q, r) == 0) return TripleClass::Collinear;
  const Point* t[3] = {&p, &q, &r};
  bool inner = true;
  for (int i = 0; i < 3 && inner; ++i) {
    PointSet rest = with_body({t[(i + 1) % 3], t[(i + 2) % 3]}, body);
    inner = !point_in_hull(*t[i], convex_hull(rest));
  }
  if (inner) return TripleClass::InnerCap;
  bool outer = true;
  for (int i = 0; i < 3 && outer; ++i) {
    PointSet lhs = with_body({t[i]}, body);
    PointSet rhs = {*t[(i + 1) % 3], *t[(i + 2) % 3]};
    outer = !hulls_intersect(lhs, rhs);
  }
  if (outer) return TripleClass::OuterCup;
  throw InvariantError("triple is neither an inner-cap nor an outer-cup", {p, q, r});
}

// Longest sequence s_0 < s_1 < ... of positions in [0, n) whose consecutive
// pairs satisfy pair_ok and consecutive triples satisfy accept. Ties go to the
// lexicographically smallest position sequence.
std::vector<std::size_t> longest_sequence(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pair_ok,
                                          const std::function<bool(std::size_t, std::size_t, std::size_t)>& accept) {
  if (n == 0) return {};
  // g[i * n + j]: longest valid sequence starting with positions i, j.
  std::vector<std::size_t> g(n * n, 0);
  std::size_t best = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pair_ok(i, j)) continue;
      std::size_t v = 2;
      for (std::size_t k = j + 1; k < n; ++k) {
        std::size_t tail = g[j * n + k];
        if (tail + 1 > v && tail != 0 && accept(i, j, k)) v = tail + 1;
      }
      g[i * n + j] = v;
      best = std::max(best, v);
    }
  }
  if (best == 1) return {0};
  std::vector<std::size_t> seq;
  for (std::size_t i = 0; i < n && seq.empty(); ++i)
    for (std::size_t j = i + 1; j < n && seq.empty(); ++j)
      if (g[i * n + j] == best) seq = {i, j};
  while (seq.size() < best) {
    std::size_t i = seq[seq.size() - 2], j = seq.back();
    std::size_t want = best - seq.size() + 1;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (g[j * n + k] == want && accept(i, j, k)) {
        seq.push_back(k);
        break;
      }
    }
  }
  return seq;
}

StructureWitness longest_wrt(std::span<const Point> points, const ConvexBody& body, TripleClass want,
                             StructureKind kind) {
  check_radial_preconditions(points, body);
  std::vector<std::size_t> order = radial_indices(points, body);
  auto seq = longest_sequence(
      order.size(), [](std::size_t, std::size_t) { return true; },
      [&](std::size_t h, std::size_t i, std::size_t j) {
        return classify_unchecked(body, points[order[h]], points[order[i]], points[order[j]]) == want;
      });
  StructureWitness w{kind, {}};
  for (std::size_t s : seq) w.members.push_back(points[order[s]]);
  return w;
}

}  // namespace

PointSet radial_order(std::span<const Point> points, const ConvexBody& body) {
  check_radial_preconditions(points, body);
  PointSet out;
  for (std::size_t i : radial_indices(points, body)) out.push_back(points[i]);
  return out;
}

TripleClass classify_triple_wrt(const ConvexBody& body, const Point& p, const Point& q, const Point& r) {
  Point t[3] = {p, q, r};
  check_radial_preconditions(t, body);
  return classify_unchecked(body, p, q, r);
}

bool is_inner_cap_wrt(std::span<const Point> points, const ConvexBody& body) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointSet rest = body.vertices();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) rest.push_back(points[j]);
    if (point_in_hull(points[i], convex_hull(rest))) return false;
  }
  return true;
}

bool is_outer_cup_wrt(std::span<const Point> points, const ConvexBody& body) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointSet lhs = body.vertices();
    lhs.push_back(points[i]);
    PointSet rhs;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) rhs.push_back(points[j]);
    if (!rhs.empty() && hulls_intersect(lhs, rhs)) return false;
  }
  return true;
}

bool witness_is_valid(const StructureWitness& witness, const ConvexBody& body) {
  switch (witness.kind) {
    case StructureKind::InnerCap: return is_inner_cap_wrt(witness.members, body);
    case StructureKind::OuterCup: return is_outer_cup_wrt(witness.members, body);
    default: return witness_is_valid(witness);
  }
}

StructureWitness longest_inner_cap(std::span<const Point> points, const ConvexBody& body) {
  return longest_wrt(points, body, TripleClass::InnerCap, StructureKind::InnerCap);
}

StructureWitness longest_outer_cup(std::span<const Point> points, const ConvexBody& body) {
  return longest_wrt(points, body, TripleClass::OuterCup, StructureKind::OuterCup);
}

PartialOrderInstance::PartialOrderInstance(PointSet ground, ConvexBody body, std::vector<char> relation)
    : ground_(std::move(ground)), body_(std::move(body)), relation_(std::move(relation)) {}

PartialOrderInstance prec_order(std::span<const Point> points, const ConvexBody& body) {
  if (has_duplicates(points)) throw PreconditionError("duplicate points");
  const std::size_t n = points.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    PointSet s = body.vertices();
    s.push_back(points[j]);
    PointSet hull = convex_hull(s);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && point_in_hull(points[i], hull)) rel[i * n + j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw PreconditionError("relation is not asymmetric", {points[i], points[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (rel[j * n + k] && !rel[i * n + k])
          throw InvariantError("relation is not transitive", {points[i], points[j], points[k]});
    }
  return PartialOrderInstance(PointSet(points.begin(), points.end()), body, std::move(rel));
}

DilworthResult dilworth(const PartialOrderInstance& order) {
  const std::size_t n = order.size();
  DilworthResult result;
  if (n == 0) return result;

  // Predecessor counts grow strictly along the order, so sorting by them
  // gives a linear extension.
  std::vector<std::size_t> preds(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (order.less(i, j)) ++preds[j];
  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), std::size_t{0});
  std::stable_sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) { return preds[a] < preds[b]; });

  std::vector<std::size_t> len(n, 1), parent(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t j = topo[t];
    for (std::size_t s = 0; s < t; ++s) {
      std::size_t i = topo[s];
      if (order.less(i, j) && (len[i] + 1 > len[j] || (len[i] + 1 == len[j] && i < parent[j]))) {
        len[j] = len[i] + 1;
        parent[j] = i;
      }
    }
  }
  std::size_t end = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (len[j] > len[end]) end = j;
  for (std::size_t j = end; j != n; j = parent[j]) result.chain.push_back(j);
  std::reverse(result.chain.begin(), result.chain.end());

  // Maximum matching between left copies and right copies along i < j.
  std::vector<std::size_t> match_left(n, n), match_right(n, n);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!order.less(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == n || augment(match_right[v])) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    augment(u);
  }

  for (std::size_t s = 0; s < n; ++s) {
    if (match_right[s] != n) continue;
    std::vector<std::size_t> c;
    for (std::size_t x = s; x != n; x = match_left[x]) c.push_back(x);
    result.cover.push_back(std::move(c));
  }

  // Konig: alternating reachability from unmatched left vertices.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] == n) {
      zl[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!order.less(u, v) || zr[v] || match_left[u] == v) continue;
      zr[v] = 1;
      std::size_t w = match_right[v];
      if (w != n && !zl[w]) {
        zl[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (zl[x] && !zr[x]) result.antichain.push_back(x);

  PointSet witness;
  for (std::size_t x : result.antichain) witness.push_back(order.ground()[x]);
  if (result.antichain.size() != result.cover.size())
    throw InvariantError("antichain and chain cover sizes differ", witness);
  for (std::size_t a = 0; a < result.antichain.size(); ++a)
    for (std::size_t b = a + 1; b < result.antichain.size(); ++b)
      if (order.comparable(result.antichain[a], result.antichain[b]))
        throw InvariantError("extracted antichain has comparable members", witness);
  return result;
}

namespace {

PointSet pick(std::span<const Point> points, const std::vector<std::size_t>& order,
              const std::vector<std::size_t>& seq) {
  PointSet out;
  for (std::size_t s : seq) out.push_back(points[order[s]]);
  return out;
}

// Largest ≺-chain that is an inner-cap w.r.t. a point, trying both
// directions of the order along the radial sequence.
PointSet chain_inner_cap(std::span<const Point> points, const PartialOrderInstance& inst, const Point& apex) {
  ConvexBody body = ConvexBody::point(apex);
  std::vector<std::size_t> order = radial_indices(points, body);
  auto accept = [&](std::size_t h, std::size_t i, std::size_t j) {
    return classify_unchecked(body, points[order[h]], points[order[i]], points[order[j]]) == TripleClass::InnerCap;
  };
  auto up = longest_sequence(
      order.size(), [&](std::size_t i, std::size_t j) { return inst.less(order[i], order[j]); }, accept);
  auto down = longest_sequence(
      order.size(), [&](std::size_t i, std::size_t j) { return inst.less(order[j], order[i]); }, accept);
  return pick(points, order, down.size() > up.size() ? down : up);
}

PointSet antichain_wrt(std::span<const Point> points, const PartialOrderInstance& inst, const ConvexBody& body,
                       TripleClass want) {
  std::vector<std::size_t> order = radial_indices(points, body);
  auto seq = longest_sequence(
      order.size(), [&](std::size_t i, std::size_t j) { return !inst.comparable(order[i], order[j]); },
      [&](std::size_t h, std::size_t i, std::size_t j) {
        return !inst.comparable(order[h], order[j]) &&
               classify_unchecked(body, points[order[h]], points[order[i]], points[order[j]]) == want;
      });
  return pick(points, order, seq);
}

bool is_chain(const PartialOrderInstance& inst, std::span<const Point> points, const PointSet& members,
              bool want_chain) {
  std::vector<std::size_t> idx;
  for (const Point& m : members)
    idx.push_back(static_cast<std::size_t>(std::find(points.begin(), points.end(), m) - points.begin()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (inst.comparable(idx[a], idx[b]) != want_chain) return false;
  return true;
}

}  // namespace

CellProfile cell_profile(std::span<const Point> points, const Point& left, const Point& right,
                         const ConvexBody& body) {
  ConvexBody left_body = ConvexBody::point(left);
  ConvexBody right_body = ConvexBody::point(right);
  check_radial_preconditions(points, left_body);
  check_radial_preconditions(points, right_body);
  // Chains always cross B, so only separation is required here; incomparable
  // pairs avoid B automatically, which is all the w and z searches need.
  if (hulls_intersect(points, body.vertices()))
    throw PreconditionError("point set and body are not separated", body.vertices());

  PartialOrderInstance inst = prec_order(points, body);
  DilworthResult d = dilworth(inst);
  CellProfile cp;
  for (std::size_t i : d.chain) cp.chain.push_back(points[i]);
  for (std::size_t i : d.antichain) cp.antichain.push_back(points[i]);
  cp.v = cp.chain.size();
  cp.h = cp.antichain.size();

  cp.a_witness = chain_inner_cap(points, inst, right);
  cp.b_witness = chain_inner_cap(points, inst, left);
  cp.w_witness = antichain_wrt(points, inst, body, TripleClass::InnerCap);
  cp.z_witness = antichain_wrt(points, inst, body, TripleClass::OuterCup);
  cp.a = cp.a_witness.size();
  cp.b = cp.b_witness.size();
  cp.w = cp.w_witness.size();
  cp.z = cp.z_witness.size();

  if (!is_chain(inst, points, cp.a_witness, true) || !is_inner_cap_wrt(cp.a_witness, right_body))
    throw InvariantError("a-witness is not an inner-cap chain", cp.a_witness);
  if (!is_chain(inst, points, cp.b_witness, true) || !is_inner_cap_wrt(cp.b_witness, left_body))
    throw InvariantError("b-witness is not an inner-cap chain", cp.b_witness);
  if (!is_chain(inst, points, cp.w_witness, false) || !is_inner_cap_wrt(cp.w_witness, body))
    throw InvariantError("w-witness is not an inner-cap antichain", cp.w_witness);
  if (!is_chain(inst, points, cp.z_witness, false) || !is_outer_cup_wrt(cp.z_witness, body))
    throw InvariantError("z-witness is not an outer-cup antichain", cp.z_witness);
  return cp;
}

}  // namespace cupcap
