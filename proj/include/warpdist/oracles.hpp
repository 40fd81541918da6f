#pragma once

// Exhaustive reference implementations. Exponential time; inputs are guarded
// and a guard violation is an error rather than a truncated answer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/metric.hpp"

namespace warpdist::oracle {

inline constexpr std::size_t kDtwGuard = 64;     // |x| * |y|
inline constexpr std::size_t kEditGuard = 12;    // |x| + |y|
inline constexpr std::size_t kLcsGuard = 16;     // |x|

struct DtwOracleResult {
  Cost value = kInfinity;
  std::size_t shortest_optimal_path = 0;  // fewest pairs among optimal paths
  std::size_t paths = 0;                  // warping paths enumerated
};

namespace detail {

template <class M, class L>
void enumerate_paths(const M& m, std::span<const L> x, std::span<const L> y, std::size_t i,
                     std::size_t j, Cost acc, std::size_t len, DtwOracleResult& best) {
  acc += m.dist(x[i], y[j]);
  ++len;
  if (i + 1 == x.size() && j + 1 == y.size()) {
    ++best.paths;
    if (acc < best.value || (acc == best.value && len < best.shortest_optimal_path)) {
      best.value = acc;
      best.shortest_optimal_path = len;
    }
    return;
  }
  if (i + 1 < x.size()) enumerate_paths(m, x, y, i + 1, j, acc, len, best);
  if (j + 1 < y.size()) enumerate_paths(m, x, y, i, j + 1, acc, len, best);
  if (i + 1 < x.size() && j + 1 < y.size()) enumerate_paths(m, x, y, i + 1, j + 1, acc, len, best);
}

}  // namespace detail

/// Minimum correspondence cost over every monotone warping path, enumerated
/// without memoization.
template <Metric M>
DtwOracleResult dtw_bruteforce_traced(const M& m, std::span<const typename M::letter_type> x,
                                      std::span<const typename M::letter_type> y) {
  if (x.size() * y.size() > kDtwGuard) throw std::domain_error("dtw oracle guard: |x|*|y| > 64");
  if (x.empty() != y.empty())
    throw std::domain_error("dtw is undefined between an empty and a non-empty string");
  DtwOracleResult best;
  if (x.empty()) {
    best.value = 0.0;
    return best;
  }
  detail::enumerate_paths(m, x, y, 0, 0, 0.0, 0, best);
  return best;
}

template <Metric M>
Cost dtw_bruteforce(const M& m, std::span<const typename M::letter_type> x,
                    std::span<const typename M::letter_type> y) {
  return dtw_bruteforce_traced(m, x, y).value;
}

namespace detail {

// An optimal edit script never edits the same position twice, so it is a
// monotone alignment: matched pairs are substitutions (free when equal) and
// every unmatched letter is inserted or deleted at its magnitude.
template <class M, class L>
Cost enumerate_alignments(const M& m, std::span<const L> x, std::span<const L> y, std::size_t i,
                          std::size_t j, bool allow_substitution) {
  if (i == x.size() && j == y.size()) return 0.0;
  Cost best = kInfinity;
  if (i < x.size())
    best = std::min(best, m.magnitude(x[i]) + enumerate_alignments(m, x, y, i + 1, j, allow_substitution));
  if (j < y.size())
    best = std::min(best, m.magnitude(y[j]) + enumerate_alignments(m, x, y, i, j + 1, allow_substitution));
  if (i < x.size() && j < y.size() && (allow_substitution || x[i] == y[j]))
    best = std::min(best, m.dist(x[i], y[j]) + enumerate_alignments(m, x, y, i + 1, j + 1, allow_substitution));
  return best;
}

}  // namespace detail

/// Weighted edit distance by enumerating all alignments.
template <class M>
Cost ed_bruteforce(const M& m, std::span<const typename M::letter_type> x,
                   std::span<const typename M::letter_type> y) {
  if (x.size() + y.size() > kEditGuard) throw std::domain_error("edit oracle guard: |x|+|y| > 12");
  return detail::enumerate_alignments(m, x, y, 0, 0, true);
}

/// Insertion/deletion-only distance by enumerating alignments that match
/// equal letters only.
template <class M>
Cost ed_simple_bruteforce(const M& m, std::span<const typename M::letter_type> x,
                          std::span<const typename M::letter_type> y) {
  if (x.size() + y.size() > kEditGuard) throw std::domain_error("edit oracle guard: |x|+|y| > 12");
  return detail::enumerate_alignments(m, x, y, 0, 0, false);
}

/// Longest common subsequence by trying every subset of x.
template <class L>
std::size_t lcs_bruteforce(std::span<const L> x, std::span<const L> y) {
  if (x.size() > kLcsGuard) throw std::domain_error("lcs oracle guard: |x| > 16");
  std::size_t best = 0;
  const std::uint32_t subsets = 1u << x.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::size_t j = 0;
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      while (j < y.size() && !(y[j] == x[i])) ++j;
      if (j == y.size()) ok = false;
      else ++j;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace warpdist::oracle
