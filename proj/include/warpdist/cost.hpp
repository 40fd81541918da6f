#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace warpdist {

/// Nonnegative extended real. Infinity is the "no correspondence" sentinel.
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

inline bool is_infinite(Cost c) noexcept { return c == kInfinity; }

/// Saturating addition: infinity absorbs, finite overflow throws.
inline Cost add_cost(Cost a, Cost b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  const Cost sum = a + b;
  if (!std::isfinite(sum)) throw std::overflow_error("cost overflow in addition");
  return sum;
}

/// `c * count` with the same saturation rules as add_cost.
inline Cost scale_cost(Cost c, std::uint64_t count) {
  if (count == 0) return 0.0;
  if (c == kInfinity) return kInfinity;
  const Cost product = c * static_cast<Cost>(count);
  if (!std::isfinite(product)) throw std::overflow_error("cost overflow in scaling");
  return product;
}

/// True when `c` is a finite whole number representable exactly in a double.
inline bool is_integral_cost(Cost c) noexcept {
  return std::isfinite(c) && std::floor(c) == c && std::fabs(c) < 9007199254740992.0;
}

}  // namespace warpdist
