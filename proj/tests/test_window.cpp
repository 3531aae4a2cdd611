#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphframe/rng.hpp"
#include "sphframe/window.hpp"

using namespace sphframe;

TEST_CASE("step endpoints and symmetry") {
    CHECK(Window::step(0.25) == 0.0);
    CHECK(Window::step(0.5) == 0.0);
    CHECK(Window::step(1.0) == 1.0);
    CHECK(Window::step(3.0) == 1.0);
    CHECK(Window::step(0.75) == doctest::Approx(0.5).epsilon(1e-15));
    // s(x) + s(1.5 - x) = 1 on the transition (midpoint symmetry of h-quotient)
    for (double x : {0.55, 0.6, 0.8, 0.9, 0.95})
        CHECK(Window::step(x) + Window::step(1.5 - x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("step is nondecreasing") {
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double s = Window::step(0.4 + 0.7 * i / 10000.0);
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("phi support is exact") {
    CHECK(Window::phi(0.4) == 0.0);
    CHECK(Window::phi(0.5) == 0.0);
    CHECK(Window::phi(2.0) == 0.0);
    CHECK(Window::phi(5.0) == 0.0);
    CHECK(Window::phi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(Window::phi(-1.0) == doctest::Approx(1.0).epsilon(1e-15));  // phi(|x|)
    for (double x : {0.6, 0.8, 1.0, 1.3, 1.9}) {
        CHECK(Window::phi(x) > 0.0);
        CHECK(Window::phi(x) <= 1.0);
    }
}

TEST_CASE("dyadic partition of unity") {
    SUBCASE("single points") {
        std::vector<double> xs = {1.0};
        CHECK(check_partition(xs, 1e-12).pass);
        xs = {1.7 / 32.0};  // dyadic dilation invariance
        CHECK(check_partition(xs, 1e-12).pass);
    }
    SUBCASE("log-spaced sweep") {
        std::vector<double> xs;
        for (int i = 0; i < 1000; ++i) xs.push_back(0.01 * std::pow(1e4, i / 999.0));
        const auto rep = check_partition(xs, 1e-12);
        CHECK(rep.pass);
        CHECK(rep.max_deviation < 1e-12);
    }
    SUBCASE("random points vs full-window summation oracle") {
        Rng rng(3);
        std::vector<double> xs;
        for (int i = 0; i < 10000; ++i) xs.push_back(rng.uniform(1e-3, 1e3));
        CHECK(check_partition(xs, 1e-12).pass);
        for (int i = 0; i < 100; ++i) {
            const double x = xs[static_cast<std::size_t>(i) * 97 % xs.size()];
            double direct = 0.0;
            for (int j = -25; j <= 25; ++j) {
                const double v = Window::phi(std::ldexp(x, -j));
                direct += v * v;
            }
            CHECK(direct == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("rejects nonpositive inputs") {
        std::vector<double> xs = {-1.0};
        CHECK_THROWS_AS(check_partition(xs, 1e-12), std::domain_error);
    }
}

TEST_CASE("finite-difference derivatives stay bounded at the support edges") {
    const double h = 1e-4;
    for (double x0 : {0.5, 2.0}) {
        for (int i = -30; i <= 30; ++i) {
            const double x = x0 + i * h;
            if (x <= h) continue;
            const double d1 = (Window::phi(x + h) - Window::phi(x - h)) / (2 * h);
            const double d2 =
                (Window::phi(x + h) - 2 * Window::phi(x) + Window::phi(x - h)) / (h * h);
            CHECK(std::abs(d1) < 50.0);
            CHECK(std::abs(d2) < 5e3);
        }
    }
}
