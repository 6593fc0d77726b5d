#pragma once

#include "delannoy/eval_point.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace delannoy {

/// Deterministic pseudo-random rationals p/q with |p| <= 15, 1 <= q <= 8.
/// Distinct points, drawn in a fixed order for a given seed; points for
/// which `admissible` is false are rejected.
std::vector<EvalPoint> sample_points(unsigned count, std::uint64_t seed,
                                     const std::function<bool(const EvalPoint&)>& admissible);

/// Points away from every excluded parameter set used in the library:
/// r not in {-1/2, -1, -3/2, ...} and x != -1/2.
std::vector<EvalPoint> sample_generic_points(unsigned count, std::uint64_t seed);

} // namespace delannoy
