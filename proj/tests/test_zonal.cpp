#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphframe/bandlimited.hpp"
#include "sphframe/rng.hpp"
#include "sphframe/zonal.hpp"

using namespace sphframe;

namespace {

std::vector<double> random_alpha(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> a(n);
    for (auto& x : a) x = rng.uniform(-1.0, 1.0);
    return a;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(std::span<const double> a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("ring factorization matches the pairwise reference") {
    // The ring path is an exact algebraic identity; only rounding may differ.
    for (int j : {1, 3, 5}) {
        const KernelSeries K = band_kernel(3, j);
        const auto src = product_rule_cached(3 * (1 << j) / 2);
        const auto alpha = random_alpha(src->size(), 17 + static_cast<std::uint64_t>(j));

        SUBCASE("arbitrary targets") {
            const auto targets = random_unit_vectors(53, 99);
            std::vector<double> ring(targets.size()), direct(targets.size());
            zonal_sum_ring(K, *src, alpha, targets, ring);
            zonal_sum_direct(K, src->nodes, alpha, targets, direct);
            const double scale = std::max(max_abs(direct), 1.0);
            CHECK(max_abs_diff(ring, direct) / scale < 1e-11);
        }
        SUBCASE("grid targets") {
            const auto tgt = product_rule_cached(24);
            std::vector<double> ring(tgt->size()), direct(tgt->size());
            zonal_sum_ring_grid(K, *src, alpha, *tgt, ring);
            zonal_sum_direct(K, src->nodes, alpha, tgt->nodes, direct);
            const double scale = std::max(max_abs(direct), 1.0);
            CHECK(max_abs_diff(ring, direct) / scale < 1e-11);
        }
    }
}

TEST_CASE("reproducing kernel through the ring path") {
    const KernelSeries K = reproducing_kernel(3, 20);
    const auto src = product_rule_cached(40);
    const auto alpha = random_alpha(src->size(), 4);
    const auto targets = random_unit_vectors(31, 6);
    std::vector<double> ring(targets.size()), direct(targets.size());
    zonal_sum_ring(K, *src, alpha, targets, ring);
    zonal_sum_direct(K, src->nodes, alpha, targets, direct);
    CHECK(max_abs_diff(ring, direct) / std::max(max_abs(direct), 1.0) < 1e-11);
}

TEST_CASE("constant kernel short-circuit") {
    KernelSeries K;
    K.dim = 3;
    K.coeffs = {2.0};
    const auto src = product_rule_cached(8);
    const auto alpha = random_alpha(src->size(), 12);
    double want = 0.0;
    for (double a : alpha) want += 2.0 * a;
    const auto targets = random_unit_vectors(5, 1);
    std::vector<double> out(targets.size());
    zonal_sum_ring(K, *src, alpha, targets, out);
    for (double v : out) CHECK(v == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("accumulate adds on top of existing values") {
    const KernelSeries K = band_kernel(3, 2);
    const auto src = product_rule_cached(10);
    const auto alpha = random_alpha(src->size(), 3);
    const auto targets = random_unit_vectors(7, 2);
    std::vector<double> base(targets.size(), 1.5), once(targets.size());
    zonal_sum_ring(K, *src, alpha, targets, once);
    zonal_sum_ring(K, *src, alpha, targets, base, /*accumulate=*/true);
    for (std::size_t i = 0; i < targets.size(); ++i)
        CHECK(base[i] == doctest::Approx(1.5 + once[i]).epsilon(1e-13));
}

TEST_CASE("poles and zero-measure rings are handled") {
    // Level-0-style source: a single node at the north pole.
    CubatureRule polar;
    polar.dim = 3;
    polar.degree = 0;
    polar.kind = RuleKind::product;
    polar.nodes = {Vec3{0.0, 0.0, 1.0}};
    polar.weights = {1.0};
    polar.rings = {RingInfo{1.0, 0.0, 1, 0, 1.0}};
    const KernelSeries K = band_kernel(3, 3);
    std::vector<double> alpha = {0.7};
    const std::vector<Vec3> targets = {Vec3{0.0, 0.0, 1.0}, Vec3{1.0, 0.0, 0.0},
                                       Vec3{0.0, 0.0, -1.0}};
    std::vector<double> ring(targets.size()), direct(targets.size());
    zonal_sum_ring(K, polar, alpha, targets, ring);
    zonal_sum_direct(K, polar.nodes, alpha, targets, direct);
    CHECK(max_abs_diff(ring, direct) < 1e-11);
}

TEST_CASE("size mismatches are rejected") {
    const KernelSeries K = band_kernel(3, 2);
    const auto src = product_rule_cached(8);
    std::vector<double> alpha(src->size() + 1, 0.0);
    const auto targets = random_unit_vectors(3, 1);
    std::vector<double> out(targets.size());
    CHECK_THROWS_AS(zonal_sum_ring(K, *src, alpha, targets, out), std::invalid_argument);
}
