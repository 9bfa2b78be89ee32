#include "cupcap/downset.hpp"

#include <algorithm>
#include <numeric>

#include "cupcap/bounds.hpp"
#include "cupcap/errors.hpp"

namespace cupcap {

DownSet::DownSet(int a, int b) : a_(a), b_(b), profile_(static_cast<std::size_t>(std::max(a, 0)), 0) {
  if (a < 0 || b < 0) throw PreconditionError("grid dimensions must be non-negative");
}

DownSet::DownSet(int a, int b, std::vector<int> profile) : a_(a), b_(b), profile_(std::move(profile)) {
  if (a < 0 || b < 0) throw PreconditionError("grid dimensions must be non-negative");
  if (profile_.size() != static_cast<std::size_t>(a)) throw PreconditionError("profile length must equal a");
  for (std::size_t i = 0; i < profile_.size(); ++i) {
    if (profile_[i] < 0 || profile_[i] > b) throw PreconditionError("profile entry outside 0..b");
    if (i > 0 && profile_[i] > profile_[i - 1]) throw PreconditionError("profile must be non-increasing");
  }
}

bool DownSet::contains(int x, int y) const {
  if (x < 1 || x > a_ || y < 1 || y > b_) return false;
  return y <= profile_[static_cast<std::size_t>(x - 1)];
}

std::size_t DownSet::cardinality() const {
  return static_cast<std::size_t>(std::accumulate(profile_.begin(), profile_.end(), 0));
}

void DownSet::add_generator(int x, int y) {
  if (x < 1 || x > a_ || y < 1 || y > b_) {
    throw PreconditionError("label (" + std::to_string(x) + ", " + std::to_string(y) + ") lies outside L(" +
                            std::to_string(a_) + ", " + std::to_string(b_) + ")");
  }
  for (int c = 0; c < x; ++c) profile_[static_cast<std::size_t>(c)] = std::max(profile_[static_cast<std::size_t>(c)], y);
}

DownSet downset_of(const PairLabels& labels, std::size_t q_index, int a, int b) {
  if (q_index >= labels.size()) throw PreconditionError("query point is not in the set");
  DownSet d(a, b);
  std::size_t rq = labels.rank(q_index);
  for (std::size_t rp = 0; rp < rq; ++rp) {
    PairLabel l = labels.at_rank(rp, rq);
    d.add_generator(static_cast<int>(l.x_label), static_cast<int>(l.y_label));
  }
  return d;
}

DownSet downset_of(std::span<const Point> points, const Point& q, int a, int b) {
  auto it = std::find(points.begin(), points.end(), q);
  if (it == points.end()) throw PreconditionError("query point is not in the set", {q});
  PairLabels labels = pair_labels(points);
  return downset_of(labels, static_cast<std::size_t>(it - points.begin()), a, b);
}

mpz_class count_downsets(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("grid dimensions must be non-negative");
  return binomial(a + b, a);
}

namespace {

void extend(int a, int b, std::vector<int>& profile, std::vector<DownSet>& out) {
  if (profile.size() == static_cast<std::size_t>(a)) {
    out.emplace_back(a, b, profile);
    return;
  }
  int cap = profile.empty() ? b : profile.back();
  for (int h = 0; h <= cap; ++h) {
    profile.push_back(h);
    extend(a, b, profile, out);
    profile.pop_back();
  }
}

}  // namespace

std::vector<DownSet> enumerate_downsets(int a, int b) {
  mpz_class total = count_downsets(a, b);
  if (total > 1000000) throw PreconditionError("L(" + std::to_string(a) + ", " + std::to_string(b) + ") has more than 10^6 down-sets");
  std::vector<DownSet> out;
  out.reserve(total.get_ui());
  std::vector<int> profile;
  extend(a, b, profile, out);
  return out;
}

}  // namespace cupcap
