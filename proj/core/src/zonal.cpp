#include "sphframe/zonal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sphframe/parallel.hpp"

namespace sphframe {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(std::span<const double> alpha, std::size_t n_src, std::span<double> out,
                 std::size_t n_tgt) {
    if (alpha.size() != n_src) throw std::invalid_argument("zonal_sum: alpha/source size mismatch");
    if (out.size() != n_tgt) throw std::invalid_argument("zonal_sum: out/target size mismatch");
}

// Per-ring Fourier sums of the source data:
//   C[q] = sum_m alpha_m cos(q phi_m),  S[q] = sum_m alpha_m sin(q phi_m).
struct RingFourier {
    std::vector<double> C, S;
};

std::vector<RingFourier> ring_fourier(const CubatureRule& src, std::span<const double> alpha,
                                      int D) {
    std::vector<RingFourier> out(src.rings.size());
    for (std::size_t b = 0; b < src.rings.size(); ++b) {
        const RingInfo& ring = src.rings[b];
        auto& rf = out[b];
        rf.C.assign(static_cast<std::size_t>(D) + 1, 0.0);
        rf.S.assign(static_cast<std::size_t>(D) + 1, 0.0);
        for (int m = 0; m < ring.count; ++m) {
            const double a = alpha[ring.offset + static_cast<std::size_t>(m)];
            if (a == 0.0) continue;
            const double phi = 2.0 * kPi * m / ring.count;
            const double cr = std::cos(phi), sr = std::sin(phi);
            double c = 1.0, s = 0.0;
            for (int q = 0; q <= D; ++q) {
                rf.C[static_cast<std::size_t>(q)] += a * c;
                rf.S[static_cast<std::size_t>(q)] += a * s;
                const double cn = c * cr - s * sr;
                s = c * sr + s * cr;
                c = cn;
            }
        }
    }
    return out;
}

// Cosine coefficients of psi -> K(A + B cos psi), an even trig polynomial of
// degree D: sample at psi_r = pi r / D and invert by DCT-I. Exact (up to
// rounding) because the sampled function is a polynomial of degree D in
// cos psi. `coef` must have size D + 1.
void kernel_cos_expansion(const KernelSeries& K, int D, double A, double B, double* coef) {
    if (D == 0) {
        coef[0] = eval_kernel_series(K, std::clamp(A, -1.0, 1.0));
        return;
    }
    for (int q = 0; q <= D; ++q) coef[q] = 0.0;
    for (int r = 0; r <= D; ++r) {
        const double psi = kPi * r / D;
        double t = A + B * std::cos(psi);
        t = std::clamp(t, -1.0, 1.0);
        double g = eval_kernel_series(K, t);
        if (r == 0 || r == D) g *= 0.5;
        // accumulate g * cos(q psi) over q by rotation
        const double cr = std::cos(psi), sr = std::sin(psi);
        double c = 1.0, s = 0.0;
        for (int q = 0; q <= D; ++q) {
            coef[q] += g * c;
            const double cn = c * cr - s * sr;
            s = c * sr + s * cr;
            c = cn;
        }
    }
    const double invD = 1.0 / D;
    coef[0] *= invD;
    coef[D] *= invD;
    for (int q = 1; q < D; ++q) coef[q] *= 2.0 * invD;
}

double kernel_degree_guard(const KernelSeries& K) {
    if (K.coeffs.empty()) throw std::invalid_argument("zonal_sum: empty kernel");
    return K.degree();
}

}  // namespace

void zonal_sum_direct(const KernelSeries& K, std::span<const Vec3> src,
                      std::span<const double> alpha, std::span<const Vec3> targets,
                      std::span<double> out, bool accumulate) {
    kernel_degree_guard(K);
    check_sizes(alpha, src.size(), out, targets.size());
    parallel_for(targets.size(), [&](std::size_t t0, std::size_t t1) {
        for (std::size_t t = t0; t < t1; ++t) {
            double acc = 0.0;
            for (std::size_t i = 0; i < src.size(); ++i) {
                if (alpha[i] == 0.0) continue;
                acc += alpha[i] * eval_kernel_series(K, std::clamp(dot(targets[t], src[i]), -1.0, 1.0));
            }
            out[t] = accumulate ? out[t] + acc : acc;
        }
    });
}

void zonal_sum_ring(const KernelSeries& K, const CubatureRule& src,
                    std::span<const double> alpha, std::span<const Vec3> targets,
                    std::span<double> out, bool accumulate) {
    const int D = static_cast<int>(kernel_degree_guard(K));
    check_sizes(alpha, src.size(), out, targets.size());
    if (src.rings.empty()) {
        zonal_sum_direct(K, src.nodes, alpha, targets, out, accumulate);
        return;
    }
    const auto rf = ring_fourier(src, alpha, D);

    parallel_for(targets.size(), [&](std::size_t t0, std::size_t t1) {
        std::vector<double> coef(static_cast<std::size_t>(D) + 1);
        std::vector<double> X(static_cast<std::size_t>(D) + 1);
        std::vector<double> Y(static_cast<std::size_t>(D) + 1);
        for (std::size_t t = t0; t < t1; ++t) {
            const Vec3& x = targets[t];
            const double st = std::hypot(x[0], x[1]);
            const double ut = x[2];
            const double chi = (st == 0.0) ? 0.0 : std::atan2(x[1], x[0]);
            std::fill(X.begin(), X.end(), 0.0);
            std::fill(Y.begin(), Y.end(), 0.0);
            for (std::size_t b = 0; b < src.rings.size(); ++b) {
                const RingInfo& ring = src.rings[b];
                kernel_cos_expansion(K, D, ut * ring.cos_theta, st * ring.sin_theta, coef.data());
                const auto& C = rf[b].C;
                const auto& S = rf[b].S;
                for (int q = 0; q <= D; ++q) {
                    X[static_cast<std::size_t>(q)] += coef[static_cast<std::size_t>(q)] * C[static_cast<std::size_t>(q)];
                    Y[static_cast<std::size_t>(q)] += coef[static_cast<std::size_t>(q)] * S[static_cast<std::size_t>(q)];
                }
            }
            // sum_q X_q cos(q chi) + Y_q sin(q chi)
            const double cr = std::cos(chi), sr = std::sin(chi);
            double c = 1.0, s = 0.0, acc = 0.0;
            for (int q = 0; q <= D; ++q) {
                acc += X[static_cast<std::size_t>(q)] * c + Y[static_cast<std::size_t>(q)] * s;
                const double cn = c * cr - s * sr;
                s = c * sr + s * cr;
                c = cn;
            }
            out[t] = accumulate ? out[t] + acc : acc;
        }
    });
}

void zonal_sum_ring_grid(const KernelSeries& K, const CubatureRule& src,
                         std::span<const double> alpha, const CubatureRule& target,
                         std::span<double> out, bool accumulate) {
    const int D = static_cast<int>(kernel_degree_guard(K));
    check_sizes(alpha, src.size(), out, target.size());
    if (src.rings.empty() || target.rings.empty()) {
        zonal_sum_direct(K, src.nodes, alpha, target.nodes, out, accumulate);
        return;
    }
    const auto rf = ring_fourier(src, alpha, D);

    parallel_for(target.rings.size(), [&](std::size_t a0, std::size_t a1) {
        std::vector<double> coef(static_cast<std::size_t>(D) + 1);
        std::vector<double> X(static_cast<std::size_t>(D) + 1);
        std::vector<double> Y(static_cast<std::size_t>(D) + 1);
        for (std::size_t a = a0; a < a1; ++a) {
            const RingInfo& tr = target.rings[a];
            std::fill(X.begin(), X.end(), 0.0);
            std::fill(Y.begin(), Y.end(), 0.0);
            for (std::size_t b = 0; b < src.rings.size(); ++b) {
                const RingInfo& ring = src.rings[b];
                kernel_cos_expansion(K, D, tr.cos_theta * ring.cos_theta,
                                     tr.sin_theta * ring.sin_theta, coef.data());
                const auto& C = rf[b].C;
                const auto& S = rf[b].S;
                for (int q = 0; q <= D; ++q) {
                    X[static_cast<std::size_t>(q)] += coef[static_cast<std::size_t>(q)] * C[static_cast<std::size_t>(q)];
                    Y[static_cast<std::size_t>(q)] += coef[static_cast<std::size_t>(q)] * S[static_cast<std::size_t>(q)];
                }
            }
            const double dphi = 2.0 * kPi / tr.count;
            // chi_n = n * dphi; rotate (cos q chi, sin q chi) across q per node.
            for (int n = 0; n < tr.count; ++n) {
                const double chi = n * dphi;
                const double cq = std::cos(chi), sq = std::sin(chi);
                double c = 1.0, s = 0.0, acc = 0.0;
                for (int q = 0; q <= D; ++q) {
                    acc += X[static_cast<std::size_t>(q)] * c + Y[static_cast<std::size_t>(q)] * s;
                    const double cn = c * cq - s * sq;
                    s = c * sq + s * cq;
                    c = cn;
                }
                const std::size_t idx = tr.offset + static_cast<std::size_t>(n);
                out[idx] = accumulate ? out[idx] + acc : acc;
            }
        }
    });
}

void zonal_sum(const KernelSeries& K, const CubatureRule& src, std::span<const double> alpha,
               std::span<const Vec3> targets, std::span<double> out, bool accumulate) {
    if (src.kind == RuleKind::product && !src.rings.empty())
        zonal_sum_ring(K, src, alpha, targets, out, accumulate);
    else
        zonal_sum_direct(K, src.nodes, alpha, targets, out, accumulate);
}

void zonal_sum_grid(const KernelSeries& K, const CubatureRule& src,
                    std::span<const double> alpha, const CubatureRule& target,
                    std::span<double> out, bool accumulate) {
    if (src.kind == RuleKind::product && !src.rings.empty() && !target.rings.empty())
        zonal_sum_ring_grid(K, src, alpha, target, out, accumulate);
    else
        zonal_sum_direct(K, src.nodes, alpha, target.nodes, out, accumulate);
}

}  // namespace sphframe
