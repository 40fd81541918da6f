#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/metric.hpp"
#include "warpdist/runlen.hpp"

namespace warpdist {

namespace detail {

template <class L>
void require_dtw_inputs(std::span<const L> x, std::span<const L> y) {
  if (x.empty() != y.empty())
    throw std::domain_error("dtw is undefined between an empty and a non-empty string");
}

}  // namespace detail

/// Textbook O(|x||y|) dynamic program.
template <Metric M>
Cost dtw_quadratic(const M& m, std::span<const typename M::letter_type> x,
                   std::span<const typename M::letter_type> y) {
  detail::require_dtw_inputs(x, y);
  if (x.empty()) return 0.0;
  const std::size_t cols = y.size();
  std::vector<Cost> prev(cols), cur(cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Cost best;
      if (i == 0 && j == 0) best = 0.0;
      else if (i == 0) best = cur[j - 1];
      else if (j == 0) best = prev[j];
      else best = std::min({prev[j], prev[j - 1], cur[j - 1]});
      cur[j] = add_cost(best, m.dist(x[i], y[j]));
    }
    std::swap(prev, cur);
  }
  return prev[cols - 1];
}

template <Metric M>
Cost dtw_quadratic(const M& m, const std::vector<typename M::letter_type>& x,
                   const std::vector<typename M::letter_type>& y) {
  using L = typename M::letter_type;
  return dtw_quadratic(m, std::span<const L>(x), std::span<const L>(y));
}

/// Sakoe-Chiba band: only cells with |i - j| <= band are reachable.
/// Returns infinity when the final cell lies outside the band.
template <Metric M>
Cost dtw_banded(const M& m, std::span<const typename M::letter_type> x,
                std::span<const typename M::letter_type> y, std::size_t band) {
  detail::require_dtw_inputs(x, y);
  if (x.empty()) return 0.0;
  const std::size_t rows = x.size();
  const std::size_t cols = y.size();
  std::vector<Cost> prev(cols, kInfinity), cur(cols, kInfinity);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t lo = i > band ? i - band : 0;
    if (lo >= cols) break;
    const std::size_t hi = std::min(cols - 1, i + band);
    if (lo > 0) cur[lo - 1] = kInfinity;
    for (std::size_t j = lo; j <= hi; ++j) {
      Cost best;
      if (i == 0 && j == 0) best = 0.0;
      else if (i == 0) best = cur[j - 1];
      else if (j == 0) best = prev[j];
      else best = std::min({prev[j], prev[j - 1], j > lo ? cur[j - 1] : kInfinity});
      cur[j] = add_cost(best, m.dist(x[i], y[j]));
    }
    if (hi + 1 < cols) cur[hi + 1] = kInfinity;
    std::swap(prev, cur);
    if (i + 1 == rows) return prev[cols - 1];
  }
  return kInfinity;
}

template <Metric M>
Cost dtw_banded(const M& m, const std::vector<typename M::letter_type>& x,
                const std::vector<typename M::letter_type>& y, std::size_t band) {
  using L = typename M::letter_type;
  return dtw_banded(m, std::span<const L>(x), std::span<const L>(y), band);
}

/// Which string plays the "runs" role in a subproblem.
enum class Side : std::uint8_t { XRuns = 0, YRuns = 1 };

/// SP(P, Q, r, q, o): optimal correspondence between the first `runs` runs of
/// the run-role string P and the prefix of the letter-role string Q ending
/// `offset` letters into its `letter_run`-th run, where that last run of Q is
/// not extended. All indices are counts, so 0 is allowed.
struct SubproblemKey {
  Side side = Side::XRuns;
  std::size_t runs = 0;
  std::size_t letter_run = 0;
  std::size_t offset = 0;
};

/// Run-index band implied by a distance bound: every subproblem whose value
/// can be at most `bound` satisfies |r - q| <= 2*ceil(bound/resolution) + 1.
/// Returns `unlimited` when no pruning is possible.
inline std::size_t run_band_for(Cost bound, Cost resolution, std::size_t unlimited) {
  if (!(resolution > 0.0) || !std::isfinite(bound)) return unlimited;
  const double ratio = std::ceil(bound / resolution * (1.0 + 1e-12));
  if (ratio >= static_cast<double>(unlimited)) return unlimited;
  const auto band = 2 * static_cast<std::size_t>(ratio) + 1;
  return std::min(band, unlimited);
}

/// Memoized evaluator of the run-based subproblems with the band relaxation
/// (SP = infinity when |r - q| > band). Evaluation uses an explicit work stack
/// so the recursion depth is independent of string length.
template <Metric M>
class SubproblemSolver {
 public:
  using L = typename M::letter_type;

  SubproblemSolver(const M& m, std::span<const L> x, std::span<const L> y, std::size_t band)
      : m_(m), band_(band) {
    enc_[0] = encode_runs(x);
    enc_[1] = encode_runs(y);
    for (int s = 0; s < 2; ++s) init_side(s);
  }

  /// Largest possible |r - q|; a band at least this wide prunes nothing.
  std::size_t unlimited_band() const {
    return std::max(enc_[0].run_count(), enc_[1].run_count());
  }
  bool pruned() const { return band_ < unlimited_band(); }

  Cost solve(const SubproblemKey& key) {
    validate(key);
    Cost v;
    if (trivial(key, v)) return v;
    evaluate(key);
    return slot(key);
  }

  /// min(SP(x, y, s, t, k), SP(y, x, t, s, j)) with s, t the run counts and
  /// j, k the final run lengths.
  Cost dtw() {
    const auto& ex = enc_[0];
    const auto& ey = enc_[1];
    if (ex.run_count() == 0 && ey.run_count() == 0) return 0.0;
    const SubproblemKey a{Side::XRuns, ex.run_count(), ey.run_count(), ey.runs.back().length};
    const SubproblemKey b{Side::YRuns, ey.run_count(), ex.run_count(), ex.runs.back().length};
    return std::min(solve(a), solve(b));
  }

  std::size_t states_evaluated() const noexcept { return evaluated_; }
  std::size_t band() const noexcept { return band_; }

 private:
  static constexpr Cost kUnset = -1.0;

  struct Storage {
    std::vector<std::size_t> slot_base;  // first slot of letter run q
    std::size_t width = 0;
    bool absolute = true;  // index by r directly rather than by r - q + band
    std::vector<Cost> values;
  };

  static int idx(Side s) { return static_cast<int>(s); }
  static Side other(Side s) { return s == Side::XRuns ? Side::YRuns : Side::XRuns; }

  const RunEncoding<L>& runs_of(Side s) const { return enc_[idx(s)]; }
  const RunEncoding<L>& letters_of(Side s) const { return enc_[1 - idx(s)]; }

  void init_side(int s) {
    const auto& p = enc_[s];
    const auto& q = enc_[1 - s];
    auto& st = store_[s];
    st.slot_base.assign(q.run_count() + 1, 0);
    std::size_t next = 1;  // slot 0 is (q = 0, o = 0)
    for (std::size_t r = 1; r <= q.run_count(); ++r) {
      st.slot_base[r] = next;
      next += q.run_length(r) + 1;
    }
    const std::size_t full = p.run_count() + 1;
    const std::size_t banded = 2 * band_ + 1;
    st.absolute = full <= banded;
    st.width = st.absolute ? full : banded;
    st.values.assign(next * st.width, kUnset);
  }

  void validate(const SubproblemKey& k) const {
    const auto& p = runs_of(k.side);
    const auto& q = letters_of(k.side);
    if (k.runs > p.run_count() || k.letter_run > q.run_count())
      throw std::domain_error("subproblem run index out of range");
    if (k.letter_run == 0 ? k.offset != 0 : k.offset > q.run_length(k.letter_run))
      throw std::domain_error("subproblem offset out of range");
  }

  bool out_of_band(const SubproblemKey& k) const {
    const std::size_t diff = k.runs > k.letter_run ? k.runs - k.letter_run : k.letter_run - k.runs;
    return diff > band_;
  }

  /// Base cases that need no memo entry.
  bool trivial(const SubproblemKey& k, Cost& value) const {
    if (out_of_band(k)) {
      value = kInfinity;
      return true;
    }
    if (k.runs == 0) {
      // (q = 1, o = 0) is also an empty prefix and must cost 0, or nothing
      // ever reaches a finite base case.
      value = (k.letter_run <= 1 && k.offset == 0) ? 0.0 : kInfinity;
      return true;
    }
    if (k.letter_run == 0) {
      value = kInfinity;
      return true;
    }
    return false;
  }

  Cost& slot(const SubproblemKey& k) {
    auto& st = store_[idx(k.side)];
    const std::size_t pos = st.slot_base[k.letter_run] + k.offset;
    const std::size_t col = st.absolute ? k.runs : k.runs + band_ - k.letter_run;
    return st.values[pos * st.width + col];
  }

  Cost lookup(const SubproblemKey& k, bool& missing) {
    Cost v;
    if (trivial(k, v)) return v;
    v = slot(k);
    if (v == kUnset) missing = true;
    return v;
  }

  struct Step {
    SubproblemKey dep[2];
    Cost add[2];
  };

  Step dependencies(const SubproblemKey& k) const {
    const auto& p = runs_of(k.side);
    const auto& q = letters_of(k.side);
    const std::size_t lx = p.run_length(k.runs);
    const Cost d = m_.dist(p.letter(k.runs), q.letter(k.letter_run));
    Step s;
    if (k.offset > 0) {
      s.dep[0] = {k.side, k.runs, k.letter_run, k.offset - 1};
      s.add[0] = d;
      if (lx <= k.offset) {
        s.dep[1] = {k.side, k.runs - 1, k.letter_run, k.offset - lx};
        s.add[1] = scale_cost(d, lx);
      } else {
        s.dep[1] = {other(k.side), k.letter_run - 1, k.runs, lx - k.offset};
        s.add[1] = scale_cost(d, k.offset);
      }
    } else {
      const std::size_t prev = k.letter_run - 1;
      s.dep[0] = {k.side, k.runs, prev, prev == 0 ? 0 : q.run_length(prev)};
      s.add[0] = 0.0;
      s.dep[1] = {other(k.side), prev, k.runs, lx};
      s.add[1] = 0.0;
    }
    return s;
  }

  void evaluate(const SubproblemKey& root) {
    stack_.clear();
    stack_.push_back(root);
    while (!stack_.empty()) {
      const SubproblemKey k = stack_.back();
      Cost& target = slot(k);
      if (target != kUnset) {
        stack_.pop_back();
        continue;
      }
      const Step step = dependencies(k);
      bool missing = false;
      Cost vals[2];
      for (int i = 0; i < 2; ++i) {
        bool dep_missing = false;
        vals[i] = lookup(step.dep[i], dep_missing);
        if (dep_missing) {
          stack_.push_back(step.dep[i]);
          missing = true;
        }
      }
      if (missing) continue;
      // `slot` references stay valid: storage never reallocates after init.
      target = std::min(add_cost(vals[0], step.add[0]), add_cost(vals[1], step.add[1]));
      ++evaluated_;
      stack_.pop_back();
    }
  }

  const M& m_;
  std::size_t band_;
  std::array<RunEncoding<L>, 2> enc_;
  std::array<Storage, 2> store_;
  std::vector<SubproblemKey> stack_;
  std::size_t evaluated_ = 0;
};

/// Exact(dtw) when dtw <= bound, otherwise no value.
struct BoundedResult {
  std::optional<Cost> exact;
  std::size_t states = 0;  // memoized subproblems evaluated
  std::size_t band = 0;    // run-index band used

  bool exceeds_bound() const noexcept { return !exact.has_value(); }
};

/// Threshold-or-exceed has the same contract as the bounded DP.
using ThresholdResult = BoundedResult;

namespace detail {

struct BoundedRun {
  Cost value;
  bool pruned;
  std::size_t states;
  std::size_t band;
};

template <Metric M>
BoundedRun run_bounded(const M& m, std::span<const typename M::letter_type> x,
                       std::span<const typename M::letter_type> y, Cost bound, Cost resolution) {
  const std::size_t unlimited = std::max(x.size(), y.size()) + 1;
  SubproblemSolver<M> solver(m, x, y, run_band_for(bound, resolution, unlimited));
  const Cost value = solver.dtw();
  return {value, solver.pruned(), solver.states_evaluated(), solver.band()};
}

inline void require_bound(Cost bound) {
  if (!(bound >= 0.0)) throw std::domain_error("distance bound must be a nonnegative number");
}

}  // namespace detail

/// O((|x|+|y|) * bound / resolution) DP. `resolution` must lower-bound every
/// nonzero distance between letters of x and y.
template <Metric M>
BoundedResult dtw_bounded(const M& m, std::span<const typename M::letter_type> x,
                          std::span<const typename M::letter_type> y, Cost bound, Cost resolution) {
  detail::require_dtw_inputs(x, y);
  detail::require_bound(bound);
  if (x.empty()) return {0.0, 0, 0};
  const auto run = detail::run_bounded(m, x, y, bound, resolution);
  BoundedResult out;
  out.states = run.states;
  out.band = run.band;
  if (run.value <= bound) out.exact = run.value;
  return out;
}

template <Metric M>
BoundedResult dtw_bounded(const M& m, std::span<const typename M::letter_type> x,
                          std::span<const typename M::letter_type> y, Cost bound) {
  return dtw_bounded(m, x, y, bound, m.resolution(x, y));
}

template <Metric M>
BoundedResult dtw_bounded(const M& m, const std::vector<typename M::letter_type>& x,
                          const std::vector<typename M::letter_type>& y, Cost bound) {
  using L = typename M::letter_type;
  return dtw_bounded(m, std::span<const L>(x), std::span<const L>(y), bound);
}

template <Metric M>
ThresholdResult dtw_threshold_or_exceed(const M& m, std::span<const typename M::letter_type> x,
                                        std::span<const typename M::letter_type> y, Cost threshold,
                                        Cost resolution) {
  return dtw_bounded(m, x, y, threshold, resolution);
}

template <Metric M>
ThresholdResult dtw_threshold_or_exceed(const M& m, std::span<const typename M::letter_type> x,
                                        std::span<const typename M::letter_type> y, Cost threshold) {
  return dtw_bounded(m, x, y, threshold);
}

struct DoublingTrace {
  Cost value = 0.0;
  int probes = 0;
  Cost final_bound = 0.0;
  std::size_t states = 0;  // summed over probes
};

/// Exact DTW in O((|x|+|y|) * dtw / resolution) by probing bounds
/// resolution, 2*resolution, ... until one is met. A probe whose band
/// covers every run is unpruned and therefore exact as well.
template <Metric M>
DoublingTrace dtw_doubling_traced(const M& m, std::span<const typename M::letter_type> x,
                                  std::span<const typename M::letter_type> y) {
  detail::require_dtw_inputs(x, y);
  DoublingTrace trace;
  if (x.empty()) return trace;
  const Cost resolution = m.resolution(x, y);
  Cost bound = resolution > 0.0 ? resolution : 1.0;
  while (true) {
    const auto run = detail::run_bounded(m, x, y, bound, resolution);
    ++trace.probes;
    trace.states += run.states;
    trace.final_bound = bound;
    if (run.value <= bound || !run.pruned) {
      trace.value = run.value;
      return trace;
    }
    bound *= 2.0;
  }
}

template <Metric M>
Cost dtw_doubling(const M& m, std::span<const typename M::letter_type> x,
                  std::span<const typename M::letter_type> y) {
  return dtw_doubling_traced(m, x, y).value;
}

template <Metric M>
Cost dtw_doubling(const M& m, const std::vector<typename M::letter_type>& x,
                  const std::vector<typename M::letter_type>& y) {
  using L = typename M::letter_type;
  return dtw_doubling(m, std::span<const L>(x), std::span<const L>(y));
}

}  // namespace warpdist
