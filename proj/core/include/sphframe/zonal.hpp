#pragma once

#include <span>

#include "sphframe/gegenbauer.hpp"
#include "sphframe/quadrature.hpp"

namespace sphframe {

/// Weighted zonal-kernel sums
///     S(x) = sum_i alpha_i K(x . y_i)
/// for a polynomial kernel K = sum_k c_k P_k. These sums are the single
/// computational primitive behind evaluation, band-pass filtering, frame
/// analysis and synthesis.
///
/// Two evaluation paths:
///  - direct: pairwise Clenshaw over all (target, source) pairs. Works for
///    any node set; kept as the reference implementation.
///  - ring: for sources laid out on iso-latitude rings (product rules).
///    With x, y decomposed as x.y = u_t u_s + s_t s_b cos(chi - phi_m),
///    psi -> K(A + B cos psi) is an even trigonometric polynomial of
///    degree deg K, recovered exactly from deg K + 1 samples; the
///    longitude sum then factorizes through per-ring Fourier sums. The two
///    paths agree to rounding error; the ring path is asymptotically
///    cheaper by the ring size.

void zonal_sum_direct(const KernelSeries& K, std::span<const Vec3> src,
                      std::span<const double> alpha, std::span<const Vec3> targets,
                      std::span<double> out, bool accumulate = false);

void zonal_sum_ring(const KernelSeries& K, const CubatureRule& src,
                    std::span<const double> alpha, std::span<const Vec3> targets,
                    std::span<double> out, bool accumulate = false);

/// Ring-structured source and ring-structured targets; `out` is aligned
/// with the target rule's node layout.
void zonal_sum_ring_grid(const KernelSeries& K, const CubatureRule& src,
                         std::span<const double> alpha, const CubatureRule& target,
                         std::span<double> out, bool accumulate = false);

/// Dispatch on the source layout (ring path for product rules).
void zonal_sum(const KernelSeries& K, const CubatureRule& src, std::span<const double> alpha,
               std::span<const Vec3> targets, std::span<double> out, bool accumulate = false);

void zonal_sum_grid(const KernelSeries& K, const CubatureRule& src,
                    std::span<const double> alpha, const CubatureRule& target,
                    std::span<double> out, bool accumulate = false);

}  // namespace sphframe
