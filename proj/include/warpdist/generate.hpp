#pragma once

// Seeded instance generators shared by the tests, the acceptance run and the
// `gen`/`bench` subcommands.

#include <algorithm>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "warpdist/metric.hpp"
#include "warpdist/random.hpp"
#include "warpdist/tree.hpp"

namespace warpdist::gen {

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Symbol> random_symbols(Rng& rng, std::size_t length, std::size_t alphabet) {
  if (alphabet == 0) throw std::domain_error("alphabet must be non-empty");
  std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(alphabet - 1));
  std::vector<Symbol> s(length);
  for (auto& l : s) l = pick(rng);
  return s;
}

/// Random string built from runs, so run-based algorithms see real structure.
inline std::vector<Symbol> random_runs(Rng& rng, std::size_t length, std::size_t alphabet,
                                       std::size_t max_run) {
  std::vector<Symbol> s;
  s.reserve(length);
  std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(alphabet - 1));
  while (s.size() < length) {
    const std::size_t run = std::min(length - s.size(), uniform_size(rng, 1, max_run));
    s.insert(s.end(), run, pick(rng));
  }
  return s;
}

/// Integer-valued reals in [0, span].
inline std::vector<double> random_integer_reals(Rng& rng, std::size_t length, int span) {
  std::uniform_int_distribution<int> pick(0, span);
  std::vector<double> s(length);
  for (auto& v : s) v = pick(rng);
  return s;
}

/// A copy of x with `edits` random positions replaced by other letters and
/// some runs stretched, keeping the DTW distance small.
inline std::vector<Symbol> perturb(Rng& rng, const std::vector<Symbol>& x, std::size_t alphabet,
                                   std::size_t edits) {
  std::vector<Symbol> y;
  y.reserve(x.size() + x.size() / 4);
  std::bernoulli_distribution stretch(0.1);
  for (Symbol l : x) {
    y.push_back(l);
    if (stretch(rng)) y.push_back(l);
  }
  if (y.empty() || alphabet < 2) return y;
  for (std::size_t k = 0; k < edits; ++k) {
    auto& l = y[uniform_size(rng, 0, y.size() - 1)];
    l = static_cast<Symbol>((l + 1 + uniform_size(rng, 0, alphabet - 2)) % alphabet);
  }
  return y;
}

/// Random well-separated tree: node v > 0 hangs under a uniformly chosen
/// earlier node, with an integer weight no larger than its parent's edge.
inline WellSeparatedTree random_tree(Rng& rng, std::size_t nodes, int max_weight) {
  if (nodes == 0) throw std::domain_error("tree needs at least one node");
  if (max_weight < 1) throw std::domain_error("max weight must be at least 1");
  std::vector<Symbol> parent(nodes, 0);
  std::vector<Cost> weight(nodes, 0.0);
  for (std::size_t v = 1; v < nodes; ++v) {
    const auto p = static_cast<Symbol>(uniform_size(rng, 0, v - 1));
    const int cap = p == 0 ? max_weight : static_cast<int>(weight[p]);
    parent[v] = p;
    weight[v] = std::uniform_int_distribution<int>(1, cap)(rng);
  }
  return WellSeparatedTree(std::move(parent), std::move(weight));
}

/// The family where a diagonal band fails: x = a b^(n-1), y = a^(n-1) b,
/// with `mismatches` interior letters of x replaced by c. Letters a=0, b=1,
/// c=2; under the unit metric dtw equals the number of replacements.
inline std::pair<std::vector<Symbol>, std::vector<Symbol>> band_adversarial(std::size_t n,
                                                                            std::size_t mismatches) {
  if (n < 2) throw std::domain_error("band-adversarial strings need n >= 2");
  if (mismatches > n - 2) throw std::domain_error("too many mismatches for the string length");
  std::vector<Symbol> x(n, 1), y(n, 0);
  x[0] = 0;
  y[n - 1] = 1;
  // Spread replacements evenly through the interior.
  for (std::size_t k = 0; k < mismatches; ++k) x[1 + k * (n - 2) / mismatches] = 2;
  return {x, y};
}

}  // namespace warpdist::gen
