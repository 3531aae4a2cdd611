#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphframe/gegenbauer.hpp"
#include "sphframe/quadrature.hpp"
#include "sphframe/rng.hpp"

using namespace sphframe;

namespace {

// Explicit Legendre polynomial for the d = 3 oracle: P_k = (2k+1) L_k.
double legendre(int k, double t) {
    double p0 = 1.0, p1 = t;
    if (k == 0) return p0;
    for (int m = 2; m <= k; ++m) {
        const double p2 = ((2.0 * m - 1.0) * t * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace

TEST_CASE("degree-0 kernel is the constant 1") {
    CHECK(eval_Pk(3, 0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_Pk(5, 0, -0.2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("P_k(1) equals 2k+1 for d = 3") {
    CHECK(eval_Pk(3, 5, 1.0) == doctest::Approx(11.0).epsilon(1e-14));
    for (int k = 0; k <= 64; ++k)
        CHECK(eval_Pk(3, k, 1.0) == doctest::Approx(2.0 * k + 1.0).epsilon(1e-12));
}

TEST_CASE("d = 3 kernels are scaled Legendre polynomials") {
    CHECK(eval_Pk(3, 2, 0.0) == doctest::Approx(-2.5).epsilon(1e-15));
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = static_cast<int>(rng.next_below(40));
        const double t = rng.uniform(-1.0, 1.0);
        CHECK(eval_Pk(3, k, t) ==
              doctest::Approx((2.0 * k + 1.0) * legendre(k, t)).epsilon(1e-12));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_Pk(2, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(eval_Pk(3, 1, 1.1), std::domain_error);
    CHECK_THROWS_AS(eval_Pk(3, -1, 0.5), std::domain_error);
    CHECK_THROWS_AS(eval_Pk(3, kMaxKernelDegree + 1, 0.5), std::domain_error);
    CHECK_NOTHROW(eval_Pk(3, 3, 1.0 + 5e-13));  // tolerated rounding slop
}

TEST_CASE("derivatives: order 0 is identity, order 1 matches finite differences") {
    CHECK(eval_Pk_deriv(3, 0, 0.2, 1) == 0.0);
    CHECK(eval_Pk_deriv(3, 1, 0.5, 1) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(eval_Pk_deriv(3, 2, 0.5, 0) == doctest::Approx(eval_Pk(3, 2, 0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(eval_Pk_deriv(3, 2, 0.5, 2), std::invalid_argument);

    const double h = 1e-6;
    for (int k : {2, 5, 11}) {
        for (double t : {-0.6, 0.05, 0.7}) {
            const double fd = (eval_Pk(3, k, t + h) - eval_Pk(3, k, t - h)) / (2 * h);
            CHECK(eval_Pk_deriv(3, k, t, 1) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("Clenshaw series agrees with term-by-term summation") {
    Rng rng(13);
    for (int d : {3, 4, 6}) {
        KernelSeries s;
        s.dim = d;
        s.coeffs.resize(65);
        for (auto& c : s.coeffs) c = rng.uniform(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const double t = rng.uniform(-1.0, 1.0);
            double naive = 0.0;
            for (int k = 0; k <= 64; ++k) naive += s.coeffs[static_cast<std::size_t>(k)] * eval_Pk(d, k, t);
            CHECK(eval_kernel_series(s, t) == doctest::Approx(naive).epsilon(1e-12));
        }
    }
}

TEST_CASE("series of all-ones coefficients sums dim H_k at t = 1") {
    for (int L : {4, 10, 32}) {
        const KernelSeries s = reproducing_kernel(3, L);
        CHECK(eval_kernel_series(s, 1.0) ==
              doctest::Approx(static_cast<double>(L + 1) * (L + 1)).epsilon(1e-12));
    }
    KernelSeries one;
    one.coeffs = {1.0};
    CHECK(eval_kernel_series(one, 0.37) == doctest::Approx(1.0));
    KernelSeries linear;
    linear.dim = 3;
    linear.coeffs = {0.0, 1.0};
    CHECK(eval_kernel_series(linear, 0.3) == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("kernels are bounded by their value at 1") {
    for (int k = 1; k <= 64; ++k) {
        const double peak = eval_Pk(3, k, 1.0);
        for (int i = 0; i <= 10000; ++i) {
            const double t = -1.0 + 2.0 * i / 10000.0;
            CHECK(std::abs(eval_Pk(3, k, t)) <= peak * (1.0 + 1e-13));
        }
    }
}

TEST_CASE("weighted orthogonality on [-1,1] for d = 3") {
    // 129-point Gauss rule integrates P_k P_m exactly for k, m <= 32 (d = 3
    // weight is constant); cross integrals must vanish.
    std::vector<double> gx, gw;
    gauss_legendre(129, gx, gw);
    for (int k = 0; k <= 32; k += 3) {
        for (int m = k + 1; m <= 32; m += 5) {
            double s = 0.0;
            for (std::size_t i = 0; i < gx.size(); ++i)
                s += gw[i] * eval_Pk(3, k, gx[i]) * eval_Pk(3, m, gx[i]);
            CHECK(std::abs(s) < 1e-10);
        }
    }
}
