#include "sphframe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphframe {

namespace {
constexpr double kPi = std::numbers::pi;
}

double geodesic(const Vec3& a, const Vec3& b) {
    double c = dot(a, b);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

double CubatureRule::max_scaled_weight() const {
    const double n_eff = std::max(degree, 1);
    const double scale = std::pow(n_eff, dim - 1);
    double m = 0.0;
    for (double w : weights) m = std::max(m, scale * w);
    return m;
}

Cap make_cap(const Vec3& center, double radius, int dim) {
    Cap c;
    c.center = center;
    c.radius = radius;
    c.measure = cap_measure(dim, radius);
    return c;
}

double cap_measure(int d, double r) {
    if (d < 3) throw std::domain_error("cap_measure: dimension must be >= 3");
    if (!(r > 0.0) || r > kPi + 1e-15)
        throw std::domain_error("cap_measure: radius must lie in (0, pi]");
    r = std::min(r, kPi);
    if (d == 3) return 0.5 * (1.0 - std::cos(r));
    // Normalized measure = int_0^r sin^{d-2} / int_0^pi sin^{d-2}.
    auto integral = [d](double a, double b) {
        static std::vector<double> gx, gw;
        if (gx.empty()) gauss_legendre(64, gx, gw);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < gx.size(); ++i)
            s += gw[i] * std::pow(std::sin(mid + half * gx[i]), d - 2);
        return half * s;
    };
    return integral(0.0, r) / integral(0.0, kPi);
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::domain_error("gauss_legendre: need at least one node");
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    // Newton iteration on P_n with the usual Chebyshev-flavored initial guess.
    for (int i = 0; i < n; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        // One fixed polishing pass keeps node extraction deterministic.
        {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            t -= p1 / dp;
        }
        x[static_cast<std::size_t>(n - 1 - i)] = t;  // ascending order
        w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

CubatureRule build_product_rule(int d, int N) {
    if (d != 3)
        throw std::domain_error("build_product_rule: only d = 3 is supported, got d = " +
                                std::to_string(d));
    if (N < 0) throw std::domain_error("build_product_rule: negative degree");

    const int n_lat = (N + 2) / 2;  // ceil((N+1)/2)
    const int n_lon = N + 1;
    const std::size_t total = static_cast<std::size_t>(n_lat) * static_cast<std::size_t>(n_lon);
    if (total > 10'000'000)
        throw std::length_error("build_product_rule: node count " + std::to_string(total) +
                                " exceeds the 1e7 resource cap");

    std::vector<double> gx, gw;
    gauss_legendre(n_lat, gx, gw);

    CubatureRule rule;
    rule.dim = 3;
    rule.degree = N;
    rule.kind = RuleKind::product;
    rule.nodes.reserve(total);
    rule.weights.reserve(total);
    rule.rings.reserve(static_cast<std::size_t>(n_lat));

    double wsum = 0.0;
    // North-to-south ring order; longitudes phi_m = 2 pi m / n_lon.
    for (int r = n_lat - 1; r >= 0; --r) {
        const double u = gx[static_cast<std::size_t>(r)];
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        const double wn = gw[static_cast<std::size_t>(r)] / (2.0 * n_lon);
        RingInfo ring;
        ring.cos_theta = u;
        ring.sin_theta = s;
        ring.count = n_lon;
        ring.offset = rule.nodes.size();
        ring.node_weight = wn;
        rule.rings.push_back(ring);
        for (int m = 0; m < n_lon; ++m) {
            const double phi = 2.0 * kPi * m / n_lon;
            rule.nodes.push_back(Vec3{s * std::cos(phi), s * std::sin(phi), u});
            rule.weights.push_back(wn);
            wsum += wn;
        }
    }
    // Normalize the total mass to exactly 1.
    const double inv = 1.0 / wsum;
    for (auto& w : rule.weights) w *= inv;
    for (auto& ring : rule.rings) ring.node_weight *= inv;
    return rule;
}

std::shared_ptr<const CubatureRule> product_rule_cached(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CubatureRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto rule = std::make_shared<const CubatureRule>(build_product_rule(3, N));
    cache.emplace(N, rule);
    return rule;
}

double discrete_norm(std::span<const double> values, const CubatureRule& rule, double p, double t) {
    if (values.size() != rule.size())
        throw std::invalid_argument("discrete_norm: " + std::to_string(values.size()) +
                                    " values vs " + std::to_string(rule.size()) + " nodes");
    if (!(p > 0.0)) throw std::domain_error("discrete_norm: p must be positive (or infinity)");
    if (t < 0.0) throw std::domain_error("discrete_norm: t must be >= 0");

    const double n_eff = std::max(rule.degree, 1);
    const double scale = std::pow(n_eff, rule.dim - 1);
    auto scaled_weight_pow = [&](double a) {
        const double base = scale * a;
        if (t == 0.0) return 1.0;  // 0^0 = 1 convention
        return std::pow(base, t);
    };

    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            m = std::max(m, scaled_weight_pow(rule.weights[i]) * std::abs(values[i]));
        return m;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += scaled_weight_pow(rule.weights[i]) * std::pow(std::abs(values[i]), p);
    return std::pow(sum / scale, 1.0 / p);
}

std::vector<Vec3> fibonacci_points(int n) {
    if (n < 1) throw std::domain_error("fibonacci_points: need n >= 1");
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * kPi * std::fmod(i / golden, 1.0);
        pts.push_back(Vec3{s * std::cos(phi), s * std::sin(phi), z});
    }
    return pts;
}

long dim_Pi(int d, int N) {
    if (d == 3) return static_cast<long>(N + 1) * (N + 1);
    // dim Pi_N = C(N+d-1, d-1) + C(N+d-2, d-1)
    auto binom = [](long n, long k) {
        double r = 1.0;
        for (long i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
        return static_cast<long>(std::llround(r));
    };
    return binom(N + d - 1, d - 1) + binom(N + d - 2, d - 1);
}

}  // namespace sphframe
