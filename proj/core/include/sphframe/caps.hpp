#pragma once

#include <span>

#include "sphframe/quadrature.hpp"

namespace sphframe {

/// Integral over S^2 (normalized measure) of
///     g(x)^p,   g(x) = max_i values[i] * chi_{caps[i]}(x),
/// for nonnegative values and p in (0, infinity).
///
/// Along each latitude circle the caps cut exact arcs, so the longitude
/// integral of the piecewise-constant max is computed exactly by an arc
/// sweep; the remaining theta integral is split at every cap-tangency
/// latitude and evaluated with Gauss-Legendre after a substitution that
/// absorbs the square-root behavior at the splits. For a single cap the
/// result matches the exact cap measure to ~1e-12; overlapping
/// arrangements are resolved to far better than the tolerances of the
/// ensemble experiments that use this.
double cap_union_lp_pow(std::span<const Cap> caps, std::span<const double> values, double p);

}  // namespace sphframe
