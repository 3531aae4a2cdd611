#include "sphframe/gegenbauer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphframe {

namespace {

void check_args(int d, int k, double t) {
    if (d < 3) throw std::domain_error("eval_Pk: dimension must be >= 3, got " + std::to_string(d));
    if (k < 0) throw std::domain_error("eval_Pk: degree must be >= 0, got " + std::to_string(k));
    if (k > kMaxKernelDegree)
        throw std::domain_error("eval_Pk: degree " + std::to_string(k) + " exceeds cap " +
                                std::to_string(kMaxKernelDegree));
    if (std::abs(t) > 1.0 + 1e-12)
        throw std::domain_error("eval_Pk: |t| must be <= 1, got t = " + std::to_string(t));
}

double clamp1(double t) { return t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t); }

// Ultraspherical C_k^lambda(t) by the forward recurrence
//   k C_k = 2(k+lambda-1) t C_{k-1} - (k+2lambda-2) C_{k-2}.
double gegenbauer(double lambda, int k, double t) {
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * lambda * t;
    for (int m = 2; m <= k; ++m) {
        double next = (2.0 * (m + lambda - 1.0) * t * cur - (m + 2.0 * lambda - 2.0) * prev) / m;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

double eval_Pk(int d, int k, double t) {
    check_args(d, k, t);
    t = clamp1(t);
    const double lambda = 0.5 * (d - 2);
    const double scale = static_cast<double>(2 * k + d - 2) / (d - 2);
    return scale * gegenbauer(lambda, k, t);
}

double eval_Pk_deriv(int d, int k, double t, int i) {
    if (i < 0 || i > 1)
        throw std::invalid_argument("eval_Pk_deriv: only derivative orders 0 and 1 are supported");
    if (i == 0) return eval_Pk(d, k, t);
    check_args(d, k, t);
    t = clamp1(t);
    if (k == 0) return 0.0;
    // d/dt C_k^l = 2l C_{k-1}^{l+1}; with l = (d-2)/2 the prefactor 2l = d-2
    // cancels the 1/(d-2) in the P_k normalization.
    const double lambda = 0.5 * (d - 2);
    return static_cast<double>(2 * k + d - 2) * gegenbauer(lambda + 1.0, k - 1, t);
}

double eval_kernel_series(const KernelSeries& s, double t) {
    if (s.coeffs.empty()) return 0.0;
    const int d = s.dim;
    const int L = s.degree();
    check_args(d, L, t);
    t = clamp1(t);
    const double lambda = 0.5 * (d - 2);

    // Clenshaw over C_k^lambda with a_k = coeffs[k] * (2k+d-2)/(d-2).
    // Recurrence coefficients: C_k = A_k(t) C_{k-1} + B_k C_{k-2},
    // A_k = 2(k+lambda-1)t/k, B_k = -(k+2lambda-2)/k.
    double b1 = 0.0, b2 = 0.0;
    for (int k = L; k >= 1; --k) {
        const double a_k = s.coeffs[static_cast<std::size_t>(k)] * (2.0 * k + d - 2.0) / (d - 2.0);
        const double A_next = 2.0 * (k + lambda) * t / (k + 1.0);
        const double B_next2 = -(k + 2.0 * lambda) / (k + 2.0);
        const double b = a_k + A_next * b1 + B_next2 * b2;
        b2 = b1;
        b1 = b;
    }
    const double a_0 = s.coeffs[0];
    // S = a_0 + A_1(t) b_1 + B_2 b_2, with C_0 = 1.
    return a_0 + (2.0 * lambda * t) * b1 - (2.0 * lambda / 2.0) * b2;
}

KernelSeries reproducing_kernel(int d, int L) {
    if (L < 0) throw std::domain_error("reproducing_kernel: negative degree");
    KernelSeries s;
    s.dim = d;
    s.coeffs.assign(static_cast<std::size_t>(L) + 1, 1.0);
    return s;
}

KernelSeries degree_projector_kernel(int d, int k) {
    if (k < 0) throw std::domain_error("degree_projector_kernel: negative degree");
    KernelSeries s;
    s.dim = d;
    s.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
    s.coeffs.back() = 1.0;
    return s;
}

}  // namespace sphframe
