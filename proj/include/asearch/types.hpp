#pragma once

#include <cstdint>

namespace asearch {

/// A value held by one variable of a permutation configuration.
using Value = std::int32_t;

/// Exact integer cost. Every benchmark cost is integral, so the solver never
/// touches floating point when comparing moves.
using Cost = std::int64_t;

}  // namespace asearch
