#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "warpdist/approx.hpp"
#include "warpdist/cost.hpp"
#include "warpdist/random.hpp"
#include "warpdist/reductions.hpp"

namespace warpdist {

/// Edit distance DP with every cell |i - j| > band forced to infinity. Never
/// below the edit distance; equal to it when some optimal script uses at most
/// `band` insertions and deletions.
template <EditMetric M>
Cost ed_banded(const M& m, std::span<const typename M::letter_type> x,
               std::span<const typename M::letter_type> y, std::size_t band) {
  const std::size_t rows = x.size();
  const std::size_t cols = y.size();
  if ((rows > cols ? rows - cols : cols - rows) > band) return kInfinity;
  std::vector<Cost> prev(cols + 1, kInfinity), cur(cols + 1, kInfinity);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= std::min(cols, band); ++j) prev[j] = add_cost(prev[j - 1], m.magnitude(y[j - 1]));
  if (band + 1 <= cols) prev[band + 1] = kInfinity;
  for (std::size_t i = 1; i <= rows; ++i) {
    const std::size_t lo = i > band ? i - band : 0;
    const std::size_t hi = std::min(cols, i + band);
    // Cells just outside the band may hold values from an earlier row.
    if (lo >= 1) cur[lo - 1] = kInfinity;
    if (hi + 1 <= cols) cur[hi + 1] = kInfinity;
    const Cost del = m.magnitude(x[i - 1]);
    for (std::size_t j = lo; j <= hi; ++j) {
      Cost best = add_cost(prev[j], del);
      if (j > 0) {
        best = std::min({best, add_cost(cur[j - 1], m.magnitude(y[j - 1])),
                         add_cost(prev[j - 1], m.dist(x[i - 1], y[j - 1]))});
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[cols];
}

template <EditMetric M>
Cost ed_banded(const M& m, const std::vector<typename M::letter_type>& x,
               const std::vector<typename M::letter_type>& y, std::size_t band) {
  using L = typename M::letter_type;
  return ed_banded(m, std::span<const L>(x), std::span<const L>(y), band);
}

/// Keeps exactly the letters whose magnitude exceeds r, in order.
template <EditMetric M>
std::vector<typename M::letter_type> simplify_magnitude(const M& m,
                                                        std::span<const typename M::letter_type> x,
                                                        Cost r) {
  if (!(r >= 0.0)) throw std::domain_error("simplification radius must be nonnegative");
  std::vector<typename M::letter_type> out;
  for (const auto& l : x)
    if (m.magnitude(l) > r) out.push_back(l);
  return out;
}

template <EditMetric M>
std::vector<typename M::letter_type> simplify_magnitude(const M& m,
                                                        const std::vector<typename M::letter_type>& x,
                                                        Cost r) {
  using L = typename M::letter_type;
  return simplify_magnitude(m, std::span<const L>(x), r);
}

struct EditGapVerdict {
  int bit = 1;  // 0: ed < 5nR for certain; 1: ed >= n^(1-eps) R / 15 with high probability
  std::size_t samples_used = 0;
};

inline std::size_t edit_gap_samples(std::size_t n) {
  return n <= 1 ? 1 : static_cast<std::size_t>(std::ceil(4.0 * std::log2(static_cast<double>(n)))) + 1;
}

inline std::size_t edit_band(std::size_t n, double eps) {
  return static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 1.0 - eps) - 1e-9));
}

/// Randomized gap test at scale R. Sample s draws r uniformly from [R, 2R]
/// using stream (seed, stream, s), removes letters of magnitude <= r and runs
/// the banded DP; the verdict is 0 as soon as one sample falls below nR.
template <EditMetric M>
EditGapVerdict ed_gap(const M& m, std::span<const typename M::letter_type> x,
                      std::span<const typename M::letter_type> y, Cost R, double eps,
                      std::uint64_t seed, std::uint64_t stream = 0) {
  using L = typename M::letter_type;
  require_epsilon(eps);
  if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("gap scale must be finite and positive");
  const std::size_t n = std::max(x.size(), y.size());
  EditGapVerdict out;
  if (n == 0) {
    out.bit = 0;
    return out;
  }
  const std::size_t samples = edit_gap_samples(n);
  const std::size_t band = edit_band(n, eps);
  const Cost threshold = static_cast<Cost>(n) * R;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = derive_rng(seed, {stream, static_cast<std::uint64_t>(s)});
    const Cost r = std::uniform_real_distribution<Cost>(R, 2.0 * R)(rng);
    const auto sx = simplify_magnitude(m, x, r);
    const auto sy = simplify_magnitude(m, y, r);
    for (const auto* part : {&sx, &sy})
      for (const auto& l : *part)
        if (m.magnitude(l) < R) throw std::logic_error("simplified letter below the gap scale");
    out.samples_used = s + 1;
    if (ed_banded(m, std::span<const L>(sx), std::span<const L>(sy), band) < threshold) {
      out.bit = 0;
      return out;
    }
  }
  out.bit = 1;
  return out;
}

template <EditMetric M>
EditGapVerdict ed_gap(const M& m, const std::vector<typename M::letter_type>& x,
                      const std::vector<typename M::letter_type>& y, Cost R, double eps,
                      std::uint64_t seed, std::uint64_t stream = 0) {
  using L = typename M::letter_type;
  return ed_gap(m, std::span<const L>(x), std::span<const L>(y), R, eps, seed, stream);
}

/// O(n^eps)-approximation of the weighted edit distance (all magnitudes
/// must be at least 1). Small distances come out exact from the banded DP;
/// otherwise the bracket [n^(1-eps) 2^(i-1) / 15, 5 n 2^i] is returned for
/// the scale 2^i found by bisection on gap verdicts.
template <EditMetric M>
ApproxEstimate ed_approximate(const M& m, std::span<const typename M::letter_type> x,
                              std::span<const typename M::letter_type> y, double eps,
                              std::uint64_t seed) {
  require_epsilon(eps);
  Cost min_mag = kInfinity;
  Cost max_mag = 0.0;
  for (auto s : {x, y}) {
    for (const auto& l : s) {
      const Cost mag = m.magnitude(l);
      if (!(mag >= 1.0)) throw std::domain_error("every letter needs magnitude at least 1");
      min_mag = std::min(min_mag, mag);
      max_mag = std::max(max_mag, mag);
    }
  }
  ApproxEstimate e;
  const std::size_t n = std::max(x.size(), y.size());
  if (n == 0) return e;

  const double nd = static_cast<double>(n);
  const double shrunk = std::pow(nd, 1.0 - eps);
  // ed <= min_mag * n^(1-eps) means at most n^(1-eps) indels, which the band covers.
  const Cost banded = ed_banded(m, x, y, edit_band(n, eps));
  if (banded <= min_mag * shrunk) {
    e.estimate = e.lower = e.upper = banded;
    return e;
  }

  // Scale 2^top >= every magnitude empties both strings, so its verdict is 0
  // without sampling; scale -1 stands for the known lower bound.
  const int top = std::max(0, static_cast<int>(std::ceil(std::log2(max_mag) - 1e-12)));
  int lo = -1;
  int hi = top;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    const auto v = ed_gap(m, x, y, std::ldexp(1.0, mid), eps, seed, static_cast<std::uint64_t>(mid));
    ++e.gap_calls;
    e.samples += v.samples_used;
    (v.bit == 1 ? lo : hi) = mid;
  }
  e.mode = ApproxMode::GapBracketed;
  e.lower = shrunk * std::ldexp(1.0, hi - 1) / 15.0;
  e.upper = 5.0 * nd * std::ldexp(1.0, hi);
  e.estimate = e.lower;
  return e;
}

template <EditMetric M>
ApproxEstimate ed_approximate(const M& m, const std::vector<typename M::letter_type>& x,
                              const std::vector<typename M::letter_type>& y, double eps,
                              std::uint64_t seed) {
  using L = typename M::letter_type;
  return ed_approximate(m, std::span<const L>(x), std::span<const L>(y), eps, seed);
}

}  // namespace warpdist
