#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/metric.hpp"

namespace warpdist {

/// Rooted tree over the alphabet whose edge weights never increase along a
/// root-to-leaf path. The distance between two nodes is the largest edge
/// weight on the path between them.
class WellSeparatedTree {
 public:
  using letter_type = Symbol;

  static constexpr double kDefaultDepthConstant = 4.0;

  /// `parent[root] == root`; `weight[v]` is the weight of the edge from v to
  /// its parent and is ignored for the root. Throws std::invalid_argument if
  /// the input is not a single rooted tree with positive, nonincreasing weights.
  WellSeparatedTree(std::vector<Symbol> parent, std::vector<Cost> weight,
                    double depth_constant = kDefaultDepthConstant)
      : parent_(std::move(parent)), weight_(std::move(weight)), depth_constant_(depth_constant) {
    const std::size_t n = parent_.size();
    if (n == 0) throw std::invalid_argument("tree must have at least one node");
    if (weight_.size() != n) throw std::invalid_argument("tree parent/weight arrays differ in size");
    bool found_root = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (parent_[v] >= n) throw std::invalid_argument("tree parent index out of range");
      if (parent_[v] == v) {
        if (found_root) throw std::invalid_argument("tree has more than one root");
        found_root = true;
        root_ = static_cast<Symbol>(v);
        weight_[v] = 0.0;
      } else if (!(weight_[v] > 0.0) || !std::isfinite(weight_[v])) {
        throw std::invalid_argument("tree edge weights must be finite and positive");
      }
    }
    if (!found_root) throw std::invalid_argument("tree has no root");
    compute_depths();
    for (std::size_t v = 0; v < n; ++v) {
      const Symbol p = parent_[v];
      if (p != v && p != root_ && weight_[v] > weight_[p])
        throw std::invalid_argument("edge weights increase along a root-to-leaf path at node " +
                                    std::to_string(v));
    }
    min_edge_ = 0.0;
    max_edge_ = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == root_) continue;
      if (min_edge_ == 0.0 || weight_[v] < min_edge_) min_edge_ = weight_[v];
      max_edge_ = std::max(max_edge_, weight_[v]);
    }
  }

  Cost dist(Symbol u, Symbol v) const {
    check(u);
    check(v);
    Cost best = 0.0;
    while (depth_[u] > depth_[v]) {
      best = std::max(best, weight_[u]);
      u = parent_[u];
    }
    while (depth_[v] > depth_[u]) {
      best = std::max(best, weight_[v]);
      v = parent_[v];
    }
    while (u != v) {
      best = std::max({best, weight_[u], weight_[v]});
      u = parent_[u];
      v = parent_[v];
    }
    return best;
  }

  Cost resolution(std::span<const Symbol>, std::span<const Symbol>) const { return min_edge_; }

  std::size_t alphabet_size() const noexcept { return parent_.size(); }
  std::size_t size() const noexcept { return parent_.size(); }
  Symbol root() const noexcept { return root_; }
  Symbol parent(Symbol v) const { return check(v), parent_[v]; }
  Cost parent_weight(Symbol v) const { return check(v), weight_[v]; }
  std::size_t depth(Symbol v) const { return check(v), depth_[v]; }
  std::size_t max_depth() const noexcept { return max_depth_; }
  double depth_constant() const noexcept { return depth_constant_; }

  /// Smallest edge weight, which is also the smallest nonzero distance.
  Cost min_nonzero_distance() const noexcept { return min_edge_; }
  /// Largest edge weight (always on an edge out of the root).
  Cost max_distance() const noexcept { return max_edge_; }

  /// depth <= c * log2(|nodes|). Deep trees are legal but slow.
  bool depth_within_bound() const noexcept {
    const double limit = depth_constant_ * std::log2(static_cast<double>(size()));
    return static_cast<double>(max_depth_) <= limit + 1e-9;
  }

 private:
  void check(Symbol v) const {
    if (v >= parent_.size()) throw std::domain_error("letter is not a node of the tree");
  }

  void compute_depths() {
    const std::size_t n = parent_.size();
    constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
    depth_.assign(n, kUnknown);
    depth_[root_] = 0;
    std::vector<Symbol> chain;
    for (std::size_t start = 0; start < n; ++start) {
      chain.clear();
      Symbol v = static_cast<Symbol>(start);
      while (depth_[v] == kUnknown) {
        chain.push_back(v);
        if (chain.size() > n) throw std::invalid_argument("tree parent links contain a cycle");
        v = parent_[v];
      }
      std::size_t d = depth_[v];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++d;
    }
    max_depth_ = *std::max_element(depth_.begin(), depth_.end());
  }

  std::vector<Symbol> parent_;
  std::vector<Cost> weight_;
  std::vector<std::size_t> depth_;
  double depth_constant_;
  Symbol root_ = 0;
  std::size_t max_depth_ = 0;
  Cost min_edge_ = 0.0;
  Cost max_edge_ = 0.0;
};

inline Cost tree_distance(const WellSeparatedTree& t, Symbol u, Symbol v) { return t.dist(u, v); }

/// Replaces every letter by its highest ancestor reachable through edges of
/// weight at most r/4.
inline std::vector<Symbol> simplify_tree(const WellSeparatedTree& t, std::span<const Symbol> x,
                                         Cost r) {
  if (!(r >= 0.0)) throw std::domain_error("simplification radius must be nonnegative");
  const Cost limit = r / 4.0;
  std::unordered_map<Symbol, Symbol> memo;
  std::vector<Symbol> out;
  out.reserve(x.size());
  for (Symbol l : x) {
    auto it = memo.find(l);
    if (it == memo.end()) {
      Symbol v = l;
      // Weights only grow toward the root, so the first heavy edge ends the climb.
      while (v != t.root() && t.parent_weight(v) <= limit) v = t.parent(v);
      it = memo.emplace(l, v).first;
    }
    out.push_back(it->second);
  }
  return out;
}

inline std::vector<Symbol> simplify_tree(const WellSeparatedTree& t, const std::vector<Symbol>& x,
                                         Cost r) {
  return simplify_tree(t, std::span<const Symbol>(x), r);
}

/// Tree embedding of a finite set of reals: input points are leaves, pivots
/// are internal nodes carrying no input letter.
struct RealEmbedding {
  WellSeparatedTree tree;
  std::vector<double> node_value;  // point value for leaves, pivot value otherwise
  std::vector<bool> is_pivot;
  std::map<double, Symbol> leaf_of;

  Symbol leaf(double v) const {
    auto it = leaf_of.find(v);
    if (it == leaf_of.end()) throw std::domain_error("value was not part of the embedded point set");
    return it->second;
  }

  std::vector<Symbol> map(std::span<const double> s) const {
    std::vector<Symbol> out;
    out.reserve(s.size());
    for (double v : s) out.push_back(leaf(v));
    return out;
  }
};

/// Random-pivot embedding: the set's range r is split at a pivot drawn
/// uniformly from [min + r/4, max - r/4], both halves are embedded
/// recursively, and the pivot's child edges weigh r. Tree distances dominate
/// |a - b| and exceed it by O(log n) in expectation.
template <class Rng>
RealEmbedding embed_reals(std::span<const double> points, Rng& rng) {
  if (points.empty()) throw std::domain_error("cannot embed an empty point set");
  std::vector<double> pts(points.begin(), points.end());
  for (double p : pts)
    if (!std::isfinite(p)) throw std::invalid_argument("embedded points must be finite");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Symbol> parent;
  std::vector<Cost> weight;
  std::vector<double> value;
  std::vector<bool> pivot;
  std::map<double, Symbol> leaf_of;

  struct Task {
    std::size_t lo, hi;  // half-open range into pts
    Symbol parent;
    Cost weight;
  };
  const auto new_node = [&](Symbol par, Cost w, double v, bool is_pivot) {
    const auto id = static_cast<Symbol>(parent.size());
    parent.push_back(par == static_cast<Symbol>(-1) ? id : par);
    weight.push_back(w);
    value.push_back(v);
    pivot.push_back(is_pivot);
    return id;
  };

  std::vector<Task> tasks{{0, pts.size(), static_cast<Symbol>(-1), 0.0}};
  while (!tasks.empty()) {
    const Task task = tasks.back();
    tasks.pop_back();
    if (task.hi - task.lo == 1) {
      leaf_of[pts[task.lo]] = new_node(task.parent, task.weight, pts[task.lo], false);
      continue;
    }
    const double lo_v = pts[task.lo];
    const double hi_v = pts[task.hi - 1];
    const double range = hi_v - lo_v;
    std::uniform_real_distribution<double> pick(lo_v + range / 4.0, hi_v - range / 4.0);
    const double p = pick(rng);
    auto split = static_cast<std::size_t>(
        std::upper_bound(pts.begin() + static_cast<std::ptrdiff_t>(task.lo),
                         pts.begin() + static_cast<std::ptrdiff_t>(task.hi), p) -
        pts.begin());
    // Rounding can push the pivot onto an endpoint when the range is a few ulps.
    if (split == task.lo || split == task.hi) split = task.lo + (task.hi - task.lo) / 2;
    const Symbol node = new_node(task.parent, task.weight, p, true);
    tasks.push_back({split, task.hi, node, range});
    tasks.push_back({task.lo, split, node, range});
  }
  return RealEmbedding{WellSeparatedTree(std::move(parent), std::move(weight)), std::move(value),
                       std::move(pivot), std::move(leaf_of)};
}

template <class Rng>
RealEmbedding embed_reals(const std::vector<double>& points, Rng& rng) {
  return embed_reals(std::span<const double>(points), rng);
}

}  // namespace warpdist
