#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "warpdist/cost.hpp"

namespace warpdist {

/// Opaque letter identifier for finite alphabets.
using Symbol = std::uint32_t;

/// Bidirectional map between textual tokens and dense symbol ids.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) {
      if (find(t)) throw std::invalid_argument("duplicate alphabet token '" + t + "'");
      intern(t);
    }
  }

  Symbol intern(std::string_view token) {
    if (auto s = find(token)) return *s;
    const auto id = static_cast<Symbol>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), id);
    return id;
  }

  std::optional<Symbol> find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Symbol at(std::string_view token) const {
    if (auto s = find(token)) return *s;
    throw std::invalid_argument("unknown letter '" + std::string(token) + "'");
  }

  const std::string& token(Symbol s) const {
    if (s >= tokens_.size()) throw std::domain_error("symbol out of alphabet range");
    return tokens_[s];
  }

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

/// A distance oracle over letters of type `letter_type`.
///
/// `resolution(x, y)` must return a lower bound on every nonzero distance
/// between letters occurring in `x` or `y` (0 when there is none). The
/// low-distance DTW band is sized from it.
template <class M>
concept Metric = requires(const M& m, const typename M::letter_type& a,
                          std::span<const typename M::letter_type> s) {
  typename M::letter_type;
  { m.dist(a, a) } -> std::convertible_to<Cost>;
  { m.resolution(s, s) } -> std::convertible_to<Cost>;
};

/// Metrics over a dense symbol range [0, alphabet_size()).
template <class M>
concept FiniteMetric = Metric<M> && std::same_as<typename M::letter_type, Symbol> &&
                       requires(const M& m) {
                         { m.alphabet_size() } -> std::convertible_to<std::size_t>;
                         { m.min_nonzero_distance() } -> std::convertible_to<Cost>;
                         { m.max_distance() } -> std::convertible_to<Cost>;
                       };

/// Generalized Hamming space: distinct letters are `unit` apart.
class HammingMetric {
 public:
  using letter_type = Symbol;

  explicit HammingMetric(std::size_t alphabet_size, Cost unit = 1.0)
      : size_(alphabet_size), unit_(unit) {
    if (!(unit > 0.0) || !std::isfinite(unit))
      throw std::invalid_argument("hamming unit distance must be finite and positive");
  }

  Cost dist(Symbol a, Symbol b) const {
    if (a >= size_ || b >= size_) throw std::domain_error("letter outside hamming alphabet");
    return a == b ? 0.0 : unit_;
  }

  Cost resolution(std::span<const Symbol>, std::span<const Symbol>) const {
    return min_nonzero_distance();
  }

  std::size_t alphabet_size() const noexcept { return size_; }
  Cost unit() const noexcept { return unit_; }
  Cost min_nonzero_distance() const noexcept { return size_ >= 2 ? unit_ : 0.0; }
  Cost max_distance() const noexcept { return size_ >= 2 ? unit_ : 0.0; }
  bool integral() const noexcept { return is_integral_cost(unit_); }

 private:
  std::size_t size_;
  Cost unit_;
};

/// The real line with |a - b|. Letters must be finite doubles.
class RealLineMetric {
 public:
  using letter_type = double;

  Cost dist(double a, double b) const {
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::domain_error("non-finite real letter");
    return a < b ? b - a : a - b;
  }

  /// Smallest gap between distinct values occurring in `x` or `y`.
  Cost resolution(std::span<const double> x, std::span<const double> y) const {
    std::vector<double> values;
    values.reserve(x.size() + y.size());
    values.insert(values.end(), x.begin(), x.end());
    values.insert(values.end(), y.begin(), y.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Cost best = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      const Cost gap = values[i] - values[i - 1];
      if (best == 0.0 || gap < best) best = gap;
    }
    return best;
  }
};

/// Arbitrary finite metric given as a dense distance table.
///
/// The constructor only checks shape and that entries are finite and
/// nonnegative; metric axioms are checked by validate_metric.
class TableMetric {
 public:
  using letter_type = Symbol;

  TableMetric(std::size_t size, std::vector<Cost> row_major) : size_(size), d_(std::move(row_major)) {
    if (d_.size() != size_ * size_) throw std::invalid_argument("distance table is not square");
    for (Cost c : d_) {
      if (!std::isfinite(c) || c < 0.0)
        throw std::invalid_argument("distance table entries must be finite and nonnegative");
    }
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        const Cost c = d_[i * size_ + j];
        if (i != j && c > 0.0 && (min_nonzero_ == 0.0 || c < min_nonzero_)) min_nonzero_ = c;
        max_ = std::max(max_, c);
        integral_ = integral_ && is_integral_cost(c);
      }
    }
  }

  Cost dist(Symbol a, Symbol b) const {
    if (a >= size_ || b >= size_) throw std::domain_error("letter outside table alphabet");
    return d_[static_cast<std::size_t>(a) * size_ + b];
  }

  Cost resolution(std::span<const Symbol>, std::span<const Symbol>) const { return min_nonzero_; }

  std::size_t alphabet_size() const noexcept { return size_; }
  Cost min_nonzero_distance() const noexcept { return min_nonzero_; }
  Cost max_distance() const noexcept { return max_; }
  bool integral() const noexcept { return integral_; }

 private:
  std::size_t size_;
  std::vector<Cost> d_;
  Cost min_nonzero_ = 0.0;
  Cost max_ = 0.0;
  bool integral_ = true;
};

/// A metric whose alphabet contains a designated null letter; the magnitude
/// of a letter (its insertion/deletion cost) is its distance to the null.
template <Metric M>
class NullAugmented {
 public:
  using letter_type = typename M::letter_type;
  using inner_type = M;

  NullAugmented(M inner, letter_type null) : inner_(std::move(inner)), null_(null) {
    (void)inner_.dist(null_, null_);  // rejects a null outside the alphabet
  }

  Cost dist(const letter_type& a, const letter_type& b) const { return inner_.dist(a, b); }
  Cost magnitude(const letter_type& l) const { return inner_.dist(null_, l); }

  Cost resolution(std::span<const letter_type> x, std::span<const letter_type> y) const {
    return inner_.resolution(x, y);
  }

  const letter_type& null() const noexcept { return null_; }
  const M& inner() const noexcept { return inner_; }

  std::size_t alphabet_size() const
    requires FiniteMetric<M>
  {
    return inner_.alphabet_size();
  }
  Cost min_nonzero_distance() const
    requires FiniteMetric<M>
  {
    return inner_.min_nonzero_distance();
  }
  Cost max_distance() const
    requires FiniteMetric<M>
  {
    return inner_.max_distance();
  }

 private:
  M inner_;
  letter_type null_;
};

/// Hamming space over `letters` symbols plus a null at symbol `letters`,
/// every distinct pair (null included) `unit` apart.
inline NullAugmented<HammingMetric> hamming_with_null(std::size_t letters, Cost unit = 1.0) {
  return NullAugmented<HammingMetric>(HammingMetric(letters + 1, unit), static_cast<Symbol>(letters));
}

struct MetricViolation {
  enum class Kind { Identity, Indiscernible, Symmetry, Triangle };
  Kind kind;
  Symbol a = 0;
  Symbol b = 0;
  Symbol c = 0;

  std::string describe() const {
    const auto s = [](Symbol v) { return std::to_string(v); };
    switch (kind) {
      case Kind::Identity: return "d(" + s(a) + "," + s(a) + ") != 0";
      case Kind::Indiscernible: return "d(" + s(a) + "," + s(b) + ") == 0 for distinct letters";
      case Kind::Symmetry: return "d(" + s(a) + "," + s(b) + ") != d(" + s(b) + "," + s(a) + ")";
      case Kind::Triangle:
        return "d(" + s(a) + "," + s(c) + ") > d(" + s(a) + "," + s(b) + ") + d(" + s(b) + "," + s(c) + ")";
    }
    return "unknown violation";
  }
};

namespace detail {

template <class Dist, class Letter>
std::vector<MetricViolation> check_axioms(std::span<const Letter> letters, Dist&& d,
                                          auto&& symbol_of) {
  std::vector<MetricViolation> out;
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(letters[i], letters[i]) != 0.0)
      out.push_back({MetricViolation::Kind::Identity, symbol_of(i), symbol_of(i), 0});
    for (std::size_t j = i + 1; j < n; ++j) {
      const Cost ij = d(letters[i], letters[j]);
      if (ij != d(letters[j], letters[i]))
        out.push_back({MetricViolation::Kind::Symmetry, symbol_of(i), symbol_of(j), 0});
      if (ij == 0.0) out.push_back({MetricViolation::Kind::Indiscernible, symbol_of(i), symbol_of(j), 0});
    }
  }
  // Unordered endpoint pairs, every distinct intermediate.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const Cost ik = d(letters[i], letters[k]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (ik > d(letters[i], letters[j]) + d(letters[j], letters[k]))
          out.push_back({MetricViolation::Kind::Triangle, symbol_of(i), symbol_of(j), symbol_of(k)});
      }
    }
  }
  return out;
}

}  // namespace detail

/// Exhaustive identity/symmetry/triangle check. Empty result means valid.
template <FiniteMetric M>
std::vector<MetricViolation> validate_metric(const M& m) {
  std::vector<Symbol> letters(m.alphabet_size());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Symbol>(i);
  return detail::check_axioms<>(std::span<const Symbol>(letters),
                                [&](Symbol a, Symbol b) { return m.dist(a, b); },
                                [&](std::size_t i) { return letters[i]; });
}

/// Real-line check over the distinct points of a sample; reported symbols
/// index the sorted distinct points.
inline std::vector<MetricViolation> validate_metric(const RealLineMetric& m,
                                                    std::span<const double> sample) {
  std::vector<double> points(sample.begin(), sample.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return detail::check_axioms<>(std::span<const double>(points), [&](double a, double b) { return m.dist(a, b); },
                                [](std::size_t i) { return static_cast<Symbol>(i); });
}

}  // namespace warpdist
