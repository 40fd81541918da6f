#pragma once

#include <string_view>
#include <vector>

#include "warpdist/metric.hpp"

namespace testing_support {

/// "abca" -> {0, 1, 2, 0}
inline std::vector<warpdist::Symbol> sym(std::string_view s) {
  std::vector<warpdist::Symbol> out;
  for (char c : s) out.push_back(static_cast<warpdist::Symbol>(c - 'a'));
  return out;
}

/// Every string of length `len` over `alphabet` letters, in lexicographic order.
inline std::vector<std::vector<warpdist::Symbol>> all_strings(std::size_t len, std::size_t alphabet) {
  std::vector<std::vector<warpdist::Symbol>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<warpdist::Symbol>> next;
    for (const auto& s : out) {
      for (warpdist::Symbol l = 0; l < alphabet; ++l) {
        next.push_back(s);
        next.back().push_back(l);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Every string of length 1..max_len.
inline std::vector<std::vector<warpdist::Symbol>> strings_up_to(std::size_t max_len, std::size_t alphabet) {
  std::vector<std::vector<warpdist::Symbol>> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto part = all_strings(len, alphabet);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace testing_support
