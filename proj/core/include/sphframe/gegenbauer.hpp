#pragma once

#include <vector>

namespace sphframe {

/// Maximum supported polynomial degree for kernel evaluation.
inline constexpr int kMaxKernelDegree = 4096;

/// A zonal kernel on the sphere S^{d-1}, written as a finite series
/// sum_k coeffs[k] * P_k(t), where P_k is the normalized ultraspherical
/// kernel of degree k: P_k(t) = ((2k+d-2)/(d-2)) * C_k^{(d-2)/2}(t).
/// P_k(x.y) is the reproducing kernel of the degree-k spherical
/// harmonics with respect to the normalized surface measure, and
/// P_k(1) = dim H_k (= 2k+1 when d = 3).
struct KernelSeries {
    int dim = 3;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Evaluate P_k(t) for dimension d >= 3, |t| <= 1.
/// Uses the forward three-term ultraspherical recurrence, which is stable
/// on [-1, 1]. Throws std::domain_error for d < 3, k < 0, |t| > 1 + 1e-12,
/// or k beyond kMaxKernelDegree.
double eval_Pk(int d, int k, double t);

/// Evaluate the i-th t-derivative of P_k, i in {0, 1}.
/// i = 1 uses the order-raising identity d/dt C_k^l = 2l C_{k-1}^{l+1}.
/// Throws std::invalid_argument for i >= 2.
double eval_Pk_deriv(int d, int k, double t, int i);

/// Evaluate sum_k coeffs[k] * P_k(t) by a backward Clenshaw recurrence on
/// the ultraspherical family. Matches term-by-term summation to ~1e-12
/// relative for moderate degrees.
double eval_kernel_series(const KernelSeries& s, double t);

/// Coefficients of the reproducing kernel K_L = sum_{k<=L} P_k of the
/// polynomial space Pi_L.
KernelSeries reproducing_kernel(int d, int L);

/// Kernel with a single unit coefficient at degree k (the projector kernel).
KernelSeries degree_projector_kernel(int d, int k);

}  // namespace sphframe
