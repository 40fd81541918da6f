#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/dtw.hpp"
#include "warpdist/metric.hpp"

namespace warpdist {

/// Metrics with a null letter and a magnitude (indel cost) per letter.
template <class M>
concept EditMetric = Metric<M> && requires(const M& m, const typename M::letter_type& a) {
  { m.null() } -> std::convertible_to<typename M::letter_type>;
  { m.magnitude(a) } -> std::convertible_to<Cost>;
};

/// null x1 null x2 ... xn null; length 2|x| + 1.
template <class L>
std::vector<L> pad(std::span<const L> x, const L& null) {
  std::vector<L> out;
  out.reserve(2 * x.size() + 1);
  out.push_back(null);
  for (const auto& l : x) {
    out.push_back(l);
    out.push_back(null);
  }
  return out;
}

template <class L>
std::vector<L> pad(const std::vector<L>& x, const L& null) {
  return pad(std::span<const L>(x), null);
}

/// Weighted edit distance: substitution l -> l' costs d(l, l'), inserting or
/// deleting l costs its magnitude. Quadratic DP over prefixes.
template <EditMetric M>
Cost ed_general(const M& m, std::span<const typename M::letter_type> x,
                std::span<const typename M::letter_type> y) {
  const std::size_t cols = y.size();
  std::vector<Cost> prev(cols + 1), cur(cols + 1);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= cols; ++j) prev[j] = add_cost(prev[j - 1], m.magnitude(y[j - 1]));
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const Cost del = m.magnitude(x[i - 1]);
    cur[0] = add_cost(prev[0], del);
    for (std::size_t j = 1; j <= cols; ++j) {
      cur[j] = std::min({add_cost(prev[j], del), add_cost(cur[j - 1], m.magnitude(y[j - 1])),
                         add_cost(prev[j - 1], m.dist(x[i - 1], y[j - 1]))});
    }
    std::swap(prev, cur);
  }
  return prev[cols];
}

template <EditMetric M>
Cost ed_general(const M& m, const std::vector<typename M::letter_type>& x,
                const std::vector<typename M::letter_type>& y) {
  using L = typename M::letter_type;
  return ed_general(m, std::span<const L>(x), std::span<const L>(y));
}

/// Edit distance computed as the DTW distance of the padded strings.
template <EditMetric M>
Cost ed_via_dtw(const M& m, std::span<const typename M::letter_type> x,
                std::span<const typename M::letter_type> y) {
  using L = typename M::letter_type;
  const auto px = pad(x, m.null());
  const auto py = pad(y, m.null());
  return dtw_quadratic(m, std::span<const L>(px), std::span<const L>(py));
}

template <EditMetric M>
Cost ed_via_dtw(const M& m, const std::vector<typename M::letter_type>& x,
                const std::vector<typename M::letter_type>& y) {
  using L = typename M::letter_type;
  return ed_via_dtw(m, std::span<const L>(x), std::span<const L>(y));
}

/// Length of a longest common subsequence (letters compared with ==).
template <class L>
std::size_t lcs(std::span<const L> x, std::span<const L> y) {
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

template <class L>
std::size_t lcs(const std::vector<L>& x, const std::vector<L>& y) {
  return lcs(std::span<const L>(x), std::span<const L>(y));
}

/// Unit-cost insertion/deletion distance, |x| + |y| - 2 lcs(x, y).
template <class L>
Cost ed_simple(std::span<const L> x, std::span<const L> y) {
  return static_cast<Cost>(x.size() + y.size() - 2 * lcs(x, y));
}

template <class L>
Cost ed_simple(const std::vector<L>& x, const std::vector<L>& y) {
  return ed_simple(std::span<const L>(x), std::span<const L>(y));
}

/// Edit distance over generalized Hamming space via half the indel distance
/// of the padded strings. Results are scaled by the Hamming unit.
inline Cost ed_via_lcs(const NullAugmented<HammingMetric>& m, std::span<const Symbol> x,
                       std::span<const Symbol> y) {
  const auto px = pad(x, m.null());
  const auto py = pad(y, m.null());
  for (auto s : {x, y}) {
    for (Symbol l : s) {
      (void)m.dist(l, l);
      if (l == m.null()) throw std::domain_error("input strings must not contain the null letter");
    }
  }
  const Cost indels = ed_simple(std::span<const Symbol>(px), std::span<const Symbol>(py));
  return indels / 2.0 * m.inner().unit();
}

inline Cost ed_via_lcs(const NullAugmented<HammingMetric>& m, const std::vector<Symbol>& x,
                       const std::vector<Symbol>& y) {
  return ed_via_lcs(m, std::span<const Symbol>(x), std::span<const Symbol>(y));
}

}  // namespace warpdist
