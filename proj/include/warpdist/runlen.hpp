#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/metric.hpp"

namespace warpdist {

/// A maximal block of equal consecutive letters.
template <class L>
struct Run {
  L letter;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A string split into maximal runs. `prefix[i]` is the number of letters
/// in runs [0, i), so `prefix.back()` is the string length.
template <class L>
struct RunEncoding {
  std::vector<Run<L>> runs;
  std::vector<std::size_t> prefix{0};

  std::size_t run_count() const noexcept { return runs.size(); }
  std::size_t length() const noexcept { return prefix.back(); }
  /// 1-based run accessors, matching the subproblem indexing.
  const L& letter(std::size_t run) const { return runs[run - 1].letter; }
  std::size_t run_length(std::size_t run) const { return runs[run - 1].length; }
};

template <class L>
RunEncoding<L> encode_runs(std::span<const L> s) {
  RunEncoding<L> enc;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == s[i]) ++j;
    enc.runs.push_back({s[i], j - i});
    enc.prefix.push_back(j);
    i = j;
  }
  return enc;
}

template <class L>
RunEncoding<L> encode_runs(const std::vector<L>& s) {
  return encode_runs(std::span<const L>(s));
}

template <class L>
std::vector<L> decode_runs(const RunEncoding<L>& enc) {
  std::vector<L> out;
  out.reserve(enc.length());
  for (const auto& run : enc.runs) out.insert(out.end(), run.length, run.letter);
  return out;
}

/// True iff `candidate` is obtained from `base` by lengthening runs.
template <class L>
bool is_expansion(std::span<const L> base, std::span<const L> candidate) {
  const auto b = encode_runs(base);
  const auto c = encode_runs(candidate);
  if (b.run_count() != c.run_count()) return false;
  for (std::size_t i = 0; i < b.run_count(); ++i) {
    if (!(b.runs[i].letter == c.runs[i].letter) || c.runs[i].length < b.runs[i].length) return false;
  }
  return true;
}

/// A correspondence stored as its warping path of 0-based index pairs.
using Correspondence = std::vector<std::pair<std::size_t, std::size_t>>;

/// Path starts at (0,0), ends at (n-1,m-1), and each step advances one or
/// both indices by exactly one.
inline bool is_valid_correspondence(const Correspondence& c, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0 || c.empty()) return false;
  if (c.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
  if (c.back() != std::pair<std::size_t, std::size_t>{n - 1, m - 1}) return false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    const auto di = c[k].first - c[k - 1].first;
    const auto dj = c[k].second - c[k - 1].second;
    if (c[k].first < c[k - 1].first || c[k].second < c[k - 1].second) return false;
    if (di > 1 || dj > 1 || di + dj == 0) return false;
  }
  return true;
}

template <Metric M>
Cost correspondence_cost(const M& m, std::span<const typename M::letter_type> x,
                         std::span<const typename M::letter_type> y, const Correspondence& c) {
  if (!is_valid_correspondence(c, x.size(), y.size()))
    throw std::domain_error("invalid correspondence for the given string lengths");
  Cost total = 0.0;
  for (const auto& [i, j] : c) total = add_cost(total, m.dist(x[i], y[j]));
  return total;
}

/// Materializes a correspondence as the pair of equal-length expansions.
template <class L>
std::pair<std::vector<L>, std::vector<L>> expand(std::span<const L> x, std::span<const L> y,
                                                 const Correspondence& c) {
  if (!is_valid_correspondence(c, x.size(), y.size()))
    throw std::domain_error("invalid correspondence for the given string lengths");
  std::pair<std::vector<L>, std::vector<L>> out;
  for (const auto& [i, j] : c) {
    out.first.push_back(x[i]);
    out.second.push_back(y[j]);
  }
  return out;
}

}  // namespace warpdist
