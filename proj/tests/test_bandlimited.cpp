#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "sh_oracle.hpp"
#include "sphframe/bandlimited.hpp"
#include "sphframe/rng.hpp"

using namespace sphframe;

namespace {

double sup_diff_at(const BandlimitedFunction& a, const BandlimitedFunction& b,
                   std::span<const Vec3> pts) {
    const auto av = a.eval_at(pts);
    const auto bv = b.eval_at(pts);
    double m = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
    return m;
}

double sup_abs_at(const BandlimitedFunction& f, std::span<const Vec3> pts) {
    const auto v = f.eval_at(pts);
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("constants evaluate to themselves everywhere") {
    const auto f = make_bandlimited(0, [](const Vec3&) { return 3.25; });
    for (const auto& x : random_unit_vectors(20, 1))
        CHECK(f.eval_at(x) == doctest::Approx(3.25).epsilon(1e-13));
    const auto g = make_bandlimited(5, [](const Vec3&) { return -0.4; });
    for (const auto& x : random_unit_vectors(20, 2))
        CHECK(g.eval_at(x) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("coordinate function evaluates exactly") {
    const auto f = make_bandlimited(1, [](const Vec3& x) { return x[2]; });
    CHECK(f.eval_at(Vec3{0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-13));
    for (const auto& x : random_unit_vectors(50, 3))
        CHECK(f.eval_at(x) == doctest::Approx(x[2]).epsilon(1e-12));
}

TEST_CASE("samples reproduce at carrier nodes") {
    const auto f = random_polynomial(16, 11);
    const auto& carrier = f.carrier();
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < carrier.size(); i += 13) {
        worst = std::max(worst, std::abs(f.eval_at(carrier.nodes[i]) - f.samples()[i]));
        scale = std::max(scale, std::abs(f.samples()[i]));
    }
    CHECK(worst / scale < 1e-10);
}

TEST_CASE("non-unit evaluation points are rejected") {
    const auto f = random_polynomial(4, 1);
    CHECK_THROWS_AS(f.eval_at(Vec3{0.5, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("degree projections") {
    SUBCASE("constants project to degree 0 and vanish above") {
        const auto f = make_bandlimited(6, [](const Vec3&) { return 2.0; });
        const auto p0 = project_degree(f, 0);
        const auto pts = random_unit_vectors(20, 5);
        for (const auto& x : pts) CHECK(p0.eval_at(x) == doctest::Approx(2.0).epsilon(1e-12));
        const auto p3 = project_degree(f, 3);
        CHECK(sup_abs_at(p3, pts) < 1e-12);
    }
    SUBCASE("projection is idempotent on a pure harmonic") {
        const auto Y = zonal_harmonic(5, Vec3{0.6, 0.0, 0.8});
        const auto p5 = project_degree(Y, 5);
        const auto pts = random_unit_vectors(30, 6);
        CHECK(sup_diff_at(Y, p5, pts) < 1e-10 * eval_Pk(3, 5, 1.0));
    }
    SUBCASE("projection extracts a mixed function's pieces") {
        const Vec3 e1{0.0, 0.0, 1.0}, e3{0.8, 0.6, 0.0};
        const auto f = make_bandlimited(3, [&](const Vec3& x) {
            return 0.7 * eval_Pk(3, 1, dot(x, e1)) + 1.3 * eval_Pk(3, 3, dot(x, e3));
        });
        const auto p3 = project_degree(f, 3);
        const auto pts = random_unit_vectors(30, 7);
        const auto want = make_bandlimited(3, [&](const Vec3& x) {
            return 1.3 * eval_Pk(3, 3, dot(x, e3));
        });
        CHECK(sup_diff_at(p3, want, pts) < 1e-11 * 7.0);
    }
    SUBCASE("projections sum back to the function") {
        const auto f = random_polynomial(8, 21);
        const auto pts = random_unit_vectors(40, 8);
        const auto fv = f.eval_at(pts);
        std::vector<double> acc(pts.size(), 0.0);
        for (int k = 0; k <= 8; ++k) {
            const auto pk = project_degree(f, k);
            const auto pv = pk.eval_at(pts);
            for (std::size_t i = 0; i < pts.size(); ++i) acc[i] += pv[i];
        }
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            worst = std::max(worst, std::abs(acc[i] - fv[i]));
            scale = std::max(scale, std::abs(fv[i]));
        }
        CHECK(worst / scale < 1e-10);
    }
}

TEST_CASE("band-pass operators") {
    SUBCASE("j = 0 gives the mean") {
        const auto f = random_polynomial(6, 31);
        const auto s0 = sigma_j(f, 0);
        for (const auto& x : random_unit_vectors(10, 9))
            CHECK(s0.eval_at(x) == doctest::Approx(f.mean()).epsilon(1e-12));
    }
    SUBCASE("harmonics are multiplied by the window value") {
        for (int m : {1, 5, 12, 32}) {
            const auto Y = zonal_harmonic(m, Vec3{0.28, -0.96, 0.0});
            const double sup = eval_Pk(3, m, 1.0);
            const auto pts = random_unit_vectors(25, 10 + static_cast<std::uint64_t>(m));
            const auto Yv = Y.eval_at(pts);
            for (int j = 0; j <= 7; ++j) {
                const double mult = Window::phi(m / std::ldexp(1.0, j - 1));
                const auto sv = sigma_j_at(Y, j, pts);
                for (std::size_t i = 0; i < pts.size(); ++i)
                    CHECK(std::abs(sv[i] - mult * Yv[i]) < 1e-10 * sup);
            }
        }
    }
    SUBCASE("functions below the band map to zero") {
        const auto f = random_polynomial(3, 41);
        const auto s5 = sigma_j(f, 5);  // band starts above degree 8
        CHECK(sup_abs_at(s5, random_unit_vectors(20, 11)) < 1e-11);
    }
    SUBCASE("band kernel coefficient layout") {
        const auto G1 = band_kernel(3, 1);
        REQUIRE(G1.coeffs.size() == 3);
        CHECK(G1.coeffs[0] == 0.0);  // phi(0) = 0
        CHECK(G1.coeffs[1] == doctest::Approx(1.0));
        CHECK(G1.coeffs[2] == 0.0);  // phi(2) = 0
        const auto G0 = band_kernel(3, 0);
        REQUIRE(G0.coeffs.size() == 1);
        CHECK(G0.coeffs[0] == 1.0);
    }
}

TEST_CASE("littlewood-paley reproduction") {
    SUBCASE("constants need only level 0") {
        const auto f = make_bandlimited(0, [](const Vec3&) { return 1.0; });
        const auto rec = reproduce(f, 1);
        for (const auto& x : random_unit_vectors(10, 12))
            CHECK(rec.eval_at(x) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("random polynomials reproduce to 1e-9") {
        for (std::uint64_t seed : {100u, 101u}) {
            const auto f = random_polynomial(16, seed);
            const auto rec = reproduce(f, 6);
            const auto pts = random_unit_vectors(100, seed + 7);
            const double sup = sup_abs_at(f, pts);
            CHECK(sup_diff_at(rec, f, pts) < 1e-9 * sup);
        }
    }
    SUBCASE("degree-32 polynomials at J = 7") {
        for (std::uint64_t seed : {200u, 201u, 202u}) {
            const auto f = random_polynomial(32, seed);
            const auto rec = reproduce(f, 7);
            const auto pts = random_unit_vectors(100, seed + 9);
            const double sup = sup_abs_at(f, pts);
            CHECK(sup_diff_at(rec, f, pts) < 1e-9 * sup);
        }
    }
    SUBCASE("two-level window weights sum to one on a boundary harmonic") {
        const int m = 12;  // hits the bands of j = 4 and j = 5
        const double w4 = Window::phi(m / std::ldexp(1.0, 3));
        const double w5 = Window::phi(m / std::ldexp(1.0, 4));
        CHECK(w4 * w4 + w5 * w5 == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("insufficient J is rejected") {
        const auto f = random_polynomial(16, 1);
        CHECK_THROWS_AS(reproduce(f, 4), std::invalid_argument);
    }
}

TEST_CASE("parseval across the dyadic blocks") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        const auto f = random_polynomial(24, seed);
        const double l2 = lp_norm(f, 2.0, f.carrier());
        double blocks = 0.0;
        for (int j = 0; j <= 7; ++j) {
            const auto g = sigma_j(f, j);
            const double n = lp_norm(g, 2.0, g.carrier());
            blocks += n * n;
        }
        CHECK(blocks == doctest::Approx(l2 * l2).epsilon(1e-9));
    }
}

TEST_CASE("lp norms") {
    SUBCASE("constants have norm |c| for every p") {
        const auto f = make_bandlimited(2, [](const Vec3&) { return -1.7; });
        const auto ref = product_rule_cached(16);
        for (double p : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()})
            CHECK(lp_norm(f, p, *ref) == doctest::Approx(1.7).epsilon(1e-12));
    }
    SUBCASE("unit-normalized zonal harmonics have unit L2 norm") {
        for (int m : {1, 7, 20}) {
            const auto Y = zonal_harmonic(m, Vec3{0.0, 1.0, 0.0}, /*unit_l2=*/true);
            CHECK(lp_norm(Y, 2.0, Y.carrier()) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    SUBCASE("sup norm of the coordinate function") {
        // The grid max underestimates the true sup by ~theta_min^2/2; the
        // degree-64 rule's polar gap puts that near 2.6e-3.
        const auto f = make_bandlimited(1, [](const Vec3& x) { return x[2]; });
        const double got = lp_norm(f, INFINITY, *product_rule_cached(64));
        CHECK(got == doctest::Approx(1.0).epsilon(5e-3));
        CHECK(got <= 1.0);
    }
    SUBCASE("homogeneity") {
        const auto f = random_polynomial(6, 77);
        const auto g = make_bandlimited(6, [&](const Vec3& x) { return 3.0 * f.eval_at(x); });
        const auto ref = product_rule_cached(24);
        for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()})
            CHECK(lp_norm(g, p, *ref) == doctest::Approx(3.0 * lp_norm(f, p, *ref)).epsilon(1e-11));
    }
}

TEST_CASE("projection matches the harmonic-basis oracle") {
    // Y_k f reconstructed from the oracle basis must match project_degree.
    const int L = 6, k = 4;
    const auto f = random_polynomial(L, 55);
    const auto pk = project_degree(f, k);
    // oracle: expand f in real harmonics on the carrier, keep degree k
    const auto& carrier = f.carrier();
    std::vector<double> coef(static_cast<std::size_t>(2 * k + 1), 0.0);
    std::vector<double> vals, plm;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        sh_oracle::eval_all(k, carrier.nodes[i], vals, plm);
        for (int m = -k; m <= k; ++m)
            coef[static_cast<std::size_t>(m + k)] +=
                carrier.weights[i] * f.samples()[i] * vals[sh_oracle::index(k, m)];
    }
    const auto pts = random_unit_vectors(25, 56);
    for (const auto& x : pts) {
        sh_oracle::eval_all(k, x, vals, plm);
        double want = 0.0;
        for (int m = -k; m <= k; ++m)
            want += coef[static_cast<std::size_t>(m + k)] * vals[sh_oracle::index(k, m)];
        CHECK(pk.eval_at(x) == doctest::Approx(want).epsilon(1e-10));
    }
}
