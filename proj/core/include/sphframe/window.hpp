#pragma once

#include <span>

namespace sphframe {

/// Smooth dyadic window phi supported in [1/2, 2] with
/// sum_j phi(2^{-j} x)^2 = 1 for every x > 0.
///
/// Built from the classical bump step: h(v) = exp(-1/v) for v > 0,
/// s(x) = h(u)/(h(u)+h(1-u)) on the transition (1/2, 1) with u = 2x-1,
/// s = 0 below and 1 above. Then phi(x) = sqrt(s(x) - s(x/2)), which makes
/// the dyadic partition telescope exactly.
class Window {
public:
    /// The smooth step s: 0 for x <= 1/2, 1 for x >= 1, C-infinity in between.
    static double step(double x);

    /// phi(x) = sqrt(max(s(x) - s(x/2), 0)); negative arguments use |x|.
    /// Identically zero outside (1/2, 2).
    static double phi(double x);
};

struct PartitionReport {
    double max_deviation = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Max over xs of |sum_j phi(2^{-j} x)^2 - 1|, summing only the few levels
/// whose dyadic band contains x. All xs must be > 0.
PartitionReport check_partition(std::span<const double> xs, double tol);

}  // namespace sphframe
