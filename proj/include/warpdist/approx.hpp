#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "warpdist/cost.hpp"

namespace warpdist {

enum class ApproxMode { ExactSmall, GapBracketed };

inline std::string_view to_string(ApproxMode mode) {
  return mode == ApproxMode::ExactSmall ? "exact-small" : "gap-bracketed";
}

/// Result of an approximation run. For ExactSmall, estimate == lower == upper
/// is the exact distance; otherwise the distance lies in [lower, upper].
struct ApproxEstimate {
  Cost estimate = 0.0;
  ApproxMode mode = ApproxMode::ExactSmall;
  Cost lower = 0.0;
  Cost upper = 0.0;
  int gap_calls = 0;
  std::size_t samples = 0;  // randomized gap samples drawn (edit distance only)
};

inline void require_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("epsilon must lie strictly between 0 and 1");
}

}  // namespace warpdist
