// Test-only oracle: real orthonormal spherical harmonics on S^2 via
// fully-normalized associated Legendre recurrences. The library itself never
// forms a harmonic basis (it works through zonal kernels), which makes this
// an independent check of cubature exactness and projections.
#pragma once

#include <cmath>
#include <vector>

#include "sphframe/quadrature.hpp"

namespace sh_oracle {

// All P-bar_l^m(cos theta) for l <= L, m <= l, normalized so that the real
// harmonics below are orthonormal for the normalized surface measure.
// Layout: plm[l*(l+1)/2 + m].
inline void assoc_legendre_bar(int L, double ct, double st, std::vector<double>& plm) {
    plm.assign(static_cast<std::size_t>(L + 1) * (L + 2) / 2, 0.0);
    auto at = [&plm](int l, int m) -> double& {
        return plm[static_cast<std::size_t>(l) * (l + 1) / 2 + m];
    };
    at(0, 0) = 1.0;
    for (int m = 1; m <= L; ++m)
        at(m, m) = st * std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * at(m - 1, m - 1);
    for (int m = 0; m < L; ++m) at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * ct * at(m, m);
    for (int m = 0; m <= L; ++m) {
        for (int l = m + 2; l <= L; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
            const double b = std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) /
                                       (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
            at(l, m) = a * (ct * at(l - 1, m) - b * at(l - 2, m));
        }
    }
}

// Index of the real harmonic (l, m), m in [-l, l], within a flat [0, (L+1)^2)
// layout: l^2 + (m + l).
inline std::size_t index(int l, int m) {
    return static_cast<std::size_t>(l) * l + static_cast<std::size_t>(m + l);
}

// Evaluate every real orthonormal harmonic of degree <= L at a point.
inline void eval_all(int L, const sphframe::Vec3& x, std::vector<double>& out,
                     std::vector<double>& plm_scratch) {
    const double ct = x[2];
    const double st = std::hypot(x[0], x[1]);
    const double phi = (st == 0.0) ? 0.0 : std::atan2(x[1], x[0]);
    assoc_legendre_bar(L, ct, st, plm_scratch);
    out.assign(static_cast<std::size_t>(L + 1) * (L + 1), 0.0);
    const double r2 = std::sqrt(2.0);
    std::vector<double> cm(static_cast<std::size_t>(L) + 1), sm(static_cast<std::size_t>(L) + 1);
    for (int m = 0; m <= L; ++m) {
        cm[static_cast<std::size_t>(m)] = std::cos(m * phi);
        sm[static_cast<std::size_t>(m)] = std::sin(m * phi);
    }
    for (int l = 0; l <= L; ++l) {
        out[index(l, 0)] = plm_scratch[static_cast<std::size_t>(l) * (l + 1) / 2];
        for (int m = 1; m <= l; ++m) {
            const double p = plm_scratch[static_cast<std::size_t>(l) * (l + 1) / 2 + m];
            out[index(l, m)] = r2 * p * cm[static_cast<std::size_t>(m)];
            out[index(l, -m)] = r2 * p * sm[static_cast<std::size_t>(m)];
        }
    }
}

// Discrete integrals sum_i w_i Y_{l,m}(xi_i) of all harmonics of degree <= L.
inline std::vector<double> rule_moments(const sphframe::CubatureRule& rule, int L) {
    std::vector<double> sums(static_cast<std::size_t>(L + 1) * (L + 1), 0.0);
    std::vector<double> vals, plm;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        eval_all(L, rule.nodes[i], vals, plm);
        for (std::size_t q = 0; q < sums.size(); ++q) sums[q] += rule.weights[i] * vals[q];
    }
    return sums;
}

}  // namespace sh_oracle
