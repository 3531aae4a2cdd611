#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace sphframe {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Geodesic distance arccos(x.y) on the unit sphere.
double geodesic(const Vec3& a, const Vec3& b);

enum class RuleKind { product, scattered };

/// One iso-latitude ring of a product rule: `count` equally spaced
/// longitudes at colatitude theta, each node carrying `node_weight`.
/// Nodes of ring r occupy indices [offset, offset + count).
struct RingInfo {
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    int count = 0;
    std::size_t offset = 0;
    double node_weight = 0.0;
};

/// A positive cubature rule on S^2: nodes, nonnegative weights summing to 1
/// (normalized measure), exact on spherical polynomials up to `degree`.
/// Product rules additionally expose their ring layout, which the zonal
/// evaluation engine exploits; scattered rules have an empty `rings`.
struct CubatureRule {
    int dim = 3;
    int degree = 0;
    RuleKind kind = RuleKind::product;
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    std::vector<RingInfo> rings;

    std::size_t size() const { return nodes.size(); }

    /// Largest N^{d-1} * weight over the rule (the empirical constant in the
    /// weight bound; reported, never asserted).
    double max_scaled_weight() const;
};

/// A spherical cap B(center, radius) with its normalized measure.
struct Cap {
    Vec3 center{0.0, 0.0, 1.0};
    double radius = 0.0;
    double measure = 0.0;

    bool contains(const Vec3& x) const { return geodesic(center, x) <= radius; }
};

Cap make_cap(const Vec3& center, double radius, int dim = 3);

/// Normalized measure of a cap of radius r in S^{d-1}; closed form for
/// d = 3, 1-D quadrature of sin^{d-2} otherwise. Requires 0 < r <= pi.
double cap_measure(int d, double r);

/// Gauss-Legendre (polar) x equiangular (azimuthal) product rule on S^2,
/// exact on Pi_N. ceil((N+1)/2) latitudes, N+1 longitudes, weights
/// normalized to sum exactly 1. Only d = 3 is supported.
CubatureRule build_product_rule(int d, int N);

/// Gauss-Legendre nodes/weights on [-1, 1] (weights sum to 2).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Shared, memoized product rules keyed by degree (d = 3). Rules are
/// immutable after construction and safe to share across threads.
std::shared_ptr<const CubatureRule> product_rule_cached(int N);

/// Weighted discrete L^p functional of samples on a rule:
///   ( N^{-(d-1)} sum_k (N^{d-1} a_k)^t |f_k|^p )^{1/p}   for p < infinity,
///   max_k (N^{d-1} a_k)^t |f_k|                          for p = infinity,
/// with the convention 0^0 = 1. Rules of degree 0 are treated as N = 1.
double discrete_norm(std::span<const double> values, const CubatureRule& rule, double p, double t);

/// Fibonacci-spiral point set, a convenient quasi-uniform test family for
/// the scattered-weight solver.
std::vector<Vec3> fibonacci_points(int n);

/// dim Pi_N on S^{d-1} ( = (N+1)^2 for d = 3 ).
long dim_Pi(int d, int N);

struct ScatteredResult {
    std::optional<CubatureRule> rule;  // empty = infeasible
    double residual = 0.0;             // max moment residual actually achieved
};

/// Solve for nonnegative weights making the given nodes a cubature rule
/// exact on Pi_N, by nonnegative least squares on the moment system
/// (zonal kernel columns against auxiliary centers). Accepts iff the
/// max moment residual is <= 1e-9; duplicate nodes are merged first.
ScatteredResult build_scattered_rule(std::span<const Vec3> points, int d, int N);

class BandlimitedFunction;  // defined in bandlimited.hpp

/// Ratio discrete_norm(samples of f on rule) / continuous L^p norm of f,
/// the empirical two-sided equivalence constant probe. The continuous norm
/// uses an internally built fine reference rule.
double mz_ratio(const BandlimitedFunction& f, const CubatureRule& rule, double p, double t);

}  // namespace sphframe
