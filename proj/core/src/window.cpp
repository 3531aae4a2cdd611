#include "sphframe/window.hpp"

#include <cmath>
#include <stdexcept>

namespace sphframe {

namespace {

// exp(-1/v) for v > 0, clamped to 0 for v < 1e-8 to avoid underflow noise.
double bump(double v) {
    if (v < 1e-8) return 0.0;
    return std::exp(-1.0 / v);
}

}  // namespace

double Window::step(double x) {
    if (x <= 0.5) return 0.0;
    if (x >= 1.0) return 1.0;
    const double u = 2.0 * x - 1.0;
    const double a = bump(u);
    const double b = bump(1.0 - u);
    return a / (a + b);
}

double Window::phi(double x) {
    x = std::abs(x);
    if (x <= 0.5 || x >= 2.0) return 0.0;
    const double diff = step(x) - step(0.5 * x);
    return diff > 0.0 ? std::sqrt(diff) : 0.0;
}

PartitionReport check_partition(std::span<const double> xs, double tol) {
    PartitionReport rep;
    rep.tol = tol;
    for (double x : xs) {
        if (!(x > 0.0)) throw std::domain_error("check_partition: xs must be positive");
        // phi(2^{-j} x) != 0 needs 2^{-j} x in (1/2, 2), i.e. j within one of
        // log2(x); sum three levels around it to be safe.
        const int j0 = static_cast<int>(std::floor(std::log2(x)));
        double sum = 0.0;
        for (int j = j0 - 1; j <= j0 + 1; ++j) {
            const double v = Window::phi(std::ldexp(x, -j));
            sum += v * v;
        }
        const double dev = std::abs(sum - 1.0);
        if (dev > rep.max_deviation) rep.max_deviation = dev;
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace sphframe
