#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "warpdist/approx.hpp"
#include "warpdist/cost.hpp"
#include "warpdist/dtw.hpp"
#include "warpdist/random.hpp"
#include "warpdist/tree.hpp"

namespace warpdist {

struct GapVerdict {
  int bit = 0;             // 1: dtw > n*r/factor for certain; 0: dtw <= n*r/factor + n*r/2
  std::size_t states = 0;  // subproblems evaluated by the bounded DP
};

/// Gap test with an explicit factor g: decides whether the simplified
/// strings are within n*r/g of each other. Simplification never expands tree
/// distances and moves each letter by at most r/4, so a 1 verdict proves
/// dtw > n*r/g and a 0 verdict proves dtw <= n*r/g + n*r/2.
inline GapVerdict dtw_gap_factor(const WellSeparatedTree& t, std::span<const Symbol> x,
                                 std::span<const Symbol> y, Cost r, double factor) {
  if (x.empty() || y.empty()) throw std::domain_error("gap test needs non-empty strings");
  if (!(r > 0.0) || r < t.min_nonzero_distance())
    throw std::domain_error("gap radius must be at least the smallest tree distance");
  if (!(factor > 0.0)) throw std::domain_error("gap factor must be positive");
  const auto n = static_cast<double>(std::max(x.size(), y.size()));
  const auto sx = simplify_tree(t, x, r);
  const auto sy = simplify_tree(t, y, r);
  // Distinct simplified letters are more than r/4 apart.
  const Cost resolution = std::max(r / 4.0, t.min_nonzero_distance());
  const auto res = dtw_threshold_or_exceed(t, std::span<const Symbol>(sx), std::span<const Symbol>(sy),
                                           n * r / factor, resolution);
  return {res.exceeds_bound() ? 1 : 0, res.states};
}

/// Gap test at threshold n^(1-eps) * r.
inline GapVerdict dtw_gap(const WellSeparatedTree& t, std::span<const Symbol> x,
                          std::span<const Symbol> y, Cost r, double eps) {
  require_epsilon(eps);
  const auto n = static_cast<double>(std::max(x.size(), y.size()));
  return dtw_gap_factor(t, x, y, r, std::pow(n, eps));
}

inline GapVerdict dtw_gap(const WellSeparatedTree& t, const std::vector<Symbol>& x,
                          const std::vector<Symbol>& y, Cost r, double eps) {
  return dtw_gap(t, std::span<const Symbol>(x), std::span<const Symbol>(y), r, eps);
}

/// O(n^eps)-approximation of DTW over a well-separated tree. Small
/// distances are computed exactly; otherwise the scale 2^i * delta is located
/// by bisection on gap verdicts and the bracket [2^i delta n^(1-eps),
/// 2^i delta n] is returned.
inline ApproxEstimate dtw_approximate(const WellSeparatedTree& t, std::span<const Symbol> x,
                                      std::span<const Symbol> y, double eps) {
  require_epsilon(eps);
  if (x.empty() || y.empty()) throw std::domain_error("dtw approximation needs non-empty strings");
  const auto exact = [](Cost v, int calls) {
    ApproxEstimate e;
    e.estimate = e.lower = e.upper = v;
    e.mode = ApproxMode::ExactSmall;
    e.gap_calls = calls;
    return e;
  };
  const Cost delta = t.min_nonzero_distance();
  if (delta == 0.0) return exact(0.0, 0);  // single-node tree

  const auto n = static_cast<double>(std::max(x.size(), y.size()));
  const double spread = std::pow(n, eps);
  // With factor n^eps/2 a 0 verdict bounds dtw by 2 n^(1-eps) r + n r / 2,
  // which stays below n r only when n^eps >= 4.
  if (spread < 4.0) return exact(dtw_doubling(t, x, y), 0);

  const auto small = dtw_threshold_or_exceed(t, x, y, delta * n / spread, delta);
  if (small.exact) return exact(*small.exact, 0);

  // Invariant: scale lo is known to give 1 (dtw > delta n^(1-eps) from the
  // failed exact probe), scale hi gives 0. At the top scale 2^top delta >= m,
  // so dtw <= n m holds without a test.
  const int top = std::max(0, static_cast<int>(std::ceil(std::log2(t.max_distance() / delta) - 1e-12)));
  int lo = -1;
  int hi = top;
  int calls = 0;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    const auto v = dtw_gap_factor(t, x, y, std::ldexp(delta, mid), spread / 2.0);
    ++calls;
    (v.bit == 1 ? lo : hi) = mid;
  }
  ApproxEstimate e;
  e.mode = ApproxMode::GapBracketed;
  e.upper = std::ldexp(delta, hi) * n;
  e.lower = e.upper / spread;
  e.estimate = e.lower;
  e.gap_calls = calls;
  return e;
}

inline ApproxEstimate dtw_approximate(const WellSeparatedTree& t, const std::vector<Symbol>& x,
                                      const std::vector<Symbol>& y, double eps) {
  return dtw_approximate(t, std::span<const Symbol>(x), std::span<const Symbol>(y), eps);
}

struct RealApproxResult {
  Cost estimate = 0.0;
  ApproxEstimate best;  // the trial that produced the estimate
  int trials = 0;
  int gap_calls = 0;    // summed over trials
};

inline int default_embedding_trials(std::size_t n) {
  return n <= 1 ? 1 : static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

/// DTW over the real line: embeds the points into `trials` random trees and
/// keeps the smallest tree estimate. Trial k uses stream (seed, k).
inline RealApproxResult dtw_approx_reals(std::span<const double> x, std::span<const double> y,
                                         double eps, std::uint64_t seed, int trials = 0) {
  require_epsilon(eps);
  if (x.empty() || y.empty()) throw std::domain_error("dtw approximation needs non-empty strings");
  if (trials == 0) trials = default_embedding_trials(std::max(x.size(), y.size()));
  if (trials < 1) throw std::domain_error("at least one embedding trial is required");
  std::vector<double> points(x.begin(), x.end());
  points.insert(points.end(), y.begin(), y.end());

  RealApproxResult out;
  out.trials = trials;
  for (int k = 0; k < trials; ++k) {
    auto rng = derive_rng(seed, {static_cast<std::uint64_t>(k)});
    const auto emb = embed_reals(std::span<const double>(points), rng);
    const auto tx = emb.map(x);
    const auto ty = emb.map(y);
    const auto est = dtw_approximate(emb.tree, tx, ty, eps);
    out.gap_calls += est.gap_calls;
    if (k == 0 || est.estimate < out.best.estimate) out.best = est;
  }
  out.estimate = out.best.estimate;
  return out;
}

inline RealApproxResult dtw_approx_reals(const std::vector<double>& x, const std::vector<double>& y,
                                         double eps, std::uint64_t seed, int trials = 0) {
  return dtw_approx_reals(std::span<const double>(x), std::span<const double>(y), eps, seed, trials);
}

}  // namespace warpdist
