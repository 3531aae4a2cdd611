#include "sphframe/bandlimited.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sphframe/rng.hpp"
#include "sphframe/zonal.hpp"

namespace sphframe {

namespace {

void check_unit(const Vec3& x) {
    const double n2 = dot(x, x);
    if (std::abs(n2 - 1.0) > 2.5e-12)
        throw std::domain_error("evaluation point must lie on the unit sphere");
}

int band_degree(int j) { return 1 << j; }

int band_low(int j) { return j >= 2 ? (1 << (j - 2)) : 0; }

}  // namespace

BandlimitedFunction::BandlimitedFunction(int dim, int degree,
                                         std::shared_ptr<const CubatureRule> carrier,
                                         std::vector<double> samples)
    : dim_(dim), degree_(degree), carrier_(std::move(carrier)), samples_(std::move(samples)) {
    if (dim_ != 3) throw std::domain_error("BandlimitedFunction: only d = 3 is supported");
    if (degree_ < 0) throw std::domain_error("BandlimitedFunction: negative degree");
    if (!carrier_) throw std::invalid_argument("BandlimitedFunction: null carrier");
    if (carrier_->degree < 2 * degree_)
        throw std::invalid_argument("BandlimitedFunction: carrier exactness " +
                                    std::to_string(carrier_->degree) + " < 2 * degree " +
                                    std::to_string(degree_));
    if (samples_.size() != carrier_->size())
        throw std::invalid_argument("BandlimitedFunction: samples/carrier size mismatch");
}

std::vector<double> BandlimitedFunction::weighted_samples() const {
    std::vector<double> alpha(samples_.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = carrier_->weights[i] * samples_[i];
    return alpha;
}

double BandlimitedFunction::eval_at(const Vec3& x) const {
    check_unit(x);
    const Vec3 xs[1] = {x};
    double out[1];
    zonal_sum(reproducing_kernel(dim_, degree_), *carrier_, weighted_samples(),
              std::span<const Vec3>(xs, 1), std::span<double>(out, 1));
    return out[0];
}

std::vector<double> BandlimitedFunction::eval_at(std::span<const Vec3> xs) const {
    for (const auto& x : xs) check_unit(x);
    std::vector<double> out(xs.size());
    zonal_sum(reproducing_kernel(dim_, degree_), *carrier_, weighted_samples(), xs, out);
    return out;
}

std::vector<double> BandlimitedFunction::eval_on_grid(const CubatureRule& rule) const {
    std::vector<double> out(rule.size());
    zonal_sum_grid(reproducing_kernel(dim_, degree_), *carrier_, weighted_samples(), rule, out);
    return out;
}

double BandlimitedFunction::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) s += carrier_->weights[i] * samples_[i];
    return s;
}

BandlimitedFunction resample(const BandlimitedFunction& f,
                             std::shared_ptr<const CubatureRule> rule) {
    auto values = f.eval_on_grid(*rule);
    return BandlimitedFunction(f.dim(), f.degree(), std::move(rule), std::move(values));
}

BandlimitedFunction project_degree(const BandlimitedFunction& f, int k) {
    if (k < 0 || k > f.degree())
        throw std::domain_error("project_degree: k must lie in [0, deg f]");
    auto carrier = product_rule_cached(2 * k);
    std::vector<double> values(carrier->size());
    zonal_sum_grid(degree_projector_kernel(f.dim(), k), f.carrier(), f.weighted_samples(),
                   *carrier, values);
    return BandlimitedFunction(f.dim(), k, std::move(carrier), std::move(values));
}

KernelSeries band_kernel(int d, int j, const Window& win) {
    if (j < 0) throw std::domain_error("band_kernel: j must be >= 0");
    KernelSeries s;
    s.dim = d;
    if (j == 0) {
        s.coeffs = {1.0};
        return s;
    }
    const int hi = band_degree(j);
    s.coeffs.assign(static_cast<std::size_t>(hi) + 1, 0.0);
    const double mid = std::ldexp(1.0, j - 1);  // 2^{j-1}
    for (int k = band_low(j); k <= hi; ++k)
        s.coeffs[static_cast<std::size_t>(k)] = win.phi(k / mid);
    return s;
}

namespace {

// sigma_j f vanishes identically when the window is zero on [0, deg f]:
// phi(k / 2^{j-1}) != 0 needs k > 2^{j-2}.
bool sigma_is_zero(int deg_f, int j) {
    if (j == 0) return false;
    return 2.0 * deg_f <= std::ldexp(1.0, j - 1);
}

// Carrier exact enough to integrate f * G_j(x .): degree >= deg f + 2^j.
const BandlimitedFunction& lift_for_band(const BandlimitedFunction& f, int j,
                                         BandlimitedFunction& storage) {
    const int needed = f.degree() + band_degree(j);
    if (f.carrier().degree >= needed) return f;
    storage = resample(f, product_rule_cached(needed));
    return storage;
}

}  // namespace

std::vector<double> sigma_j_at(const BandlimitedFunction& f, int j, std::span<const Vec3> xs,
                               const Window& win) {
    if (sigma_is_zero(f.degree(), j)) return std::vector<double>(xs.size(), 0.0);
    BandlimitedFunction lifted;
    const BandlimitedFunction& g = lift_for_band(f, j, lifted);
    std::vector<double> out(xs.size());
    zonal_sum(band_kernel(f.dim(), j, win), g.carrier(), g.weighted_samples(), xs, out);
    return out;
}

std::vector<double> sigma_j_on_grid(const BandlimitedFunction& f, int j, const CubatureRule& rule,
                                    const Window& win) {
    if (sigma_is_zero(f.degree(), j)) return std::vector<double>(rule.size(), 0.0);
    BandlimitedFunction lifted;
    const BandlimitedFunction& g = lift_for_band(f, j, lifted);
    std::vector<double> out(rule.size());
    zonal_sum_grid(band_kernel(f.dim(), j, win), g.carrier(), g.weighted_samples(), rule, out);
    return out;
}

BandlimitedFunction sigma_j(const BandlimitedFunction& f, int j, const Window& win) {
    if (j < 0) throw std::domain_error("sigma_j: j must be >= 0");
    const int out_degree = band_degree(j);
    auto carrier = product_rule_cached(2 * out_degree);
    if (sigma_is_zero(f.degree(), j)) {
        return BandlimitedFunction(f.dim(), out_degree, std::move(carrier),
                                   std::vector<double>(carrier->size(), 0.0));
    }
    auto values = sigma_j_on_grid(f, j, *carrier, win);
    return BandlimitedFunction(f.dim(), out_degree, std::move(carrier), std::move(values));
}

BandlimitedFunction reproduce(const BandlimitedFunction& f, int J, const Window& win) {
    if (J < 0) throw std::domain_error("reproduce: J must be >= 0");
    if (std::ldexp(1.0, J - 1) < f.degree())
        throw std::invalid_argument("reproduce: need 2^{J-1} >= deg f to capture the spectrum");
    const int out_degree = band_degree(J);
    auto carrier = product_rule_cached(2 * out_degree);
    std::vector<double> acc(carrier->size(), 0.0);
    for (int j = 0; j <= J; ++j) {
        if (sigma_is_zero(f.degree(), j)) continue;
        BandlimitedFunction g = sigma_j(f, j, win);
        // g's carrier (exactness 2^{j+1}) integrates g * G_j(x .) exactly.
        zonal_sum_grid(band_kernel(f.dim(), j, win), g.carrier(), g.weighted_samples(), *carrier,
                       acc, /*accumulate=*/true);
    }
    return BandlimitedFunction(f.dim(), out_degree, std::move(carrier), std::move(acc));
}

double lp_norm(const BandlimitedFunction& f, double p, const CubatureRule& reference_rule) {
    if (!(p > 0.0)) throw std::domain_error("lp_norm: p must be positive (or infinity)");
    std::vector<double> values;
    const bool own_carrier = &reference_rule == &f.carrier();
    if (!own_carrier) values = f.eval_on_grid(reference_rule);
    std::span<const double> v = own_carrier ? f.samples() : std::span<const double>(values);

    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += reference_rule.weights[i] * std::pow(std::abs(v[i]), p);
    return std::pow(s, 1.0 / p);
}

BandlimitedFunction random_polynomial(int L, std::uint64_t seed) {
    if (L < 0) throw std::domain_error("random_polynomial: negative degree");
    Rng rng(seed);
    Rng axes = rng.fork("axes");
    Rng coeff = rng.fork("coeffs");
    std::vector<Vec3> e(static_cast<std::size_t>(L) + 1);
    std::vector<double> c(static_cast<std::size_t>(L) + 1);
    for (int m = 0; m <= L; ++m) {
        const double z = axes.uniform(-1.0, 1.0);
        const double phi = axes.uniform(0.0, 2.0 * std::numbers::pi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        e[static_cast<std::size_t>(m)] = Vec3{s * std::cos(phi), s * std::sin(phi), z};
        c[static_cast<std::size_t>(m)] = coeff.uniform(-1.0, 1.0);
    }
    return make_bandlimited(L, [&](const Vec3& x) {
        double acc = 0.0;
        for (int m = 0; m <= L; ++m) {
            const std::size_t mi = static_cast<std::size_t>(m);
            acc += c[mi] * eval_Pk(3, m, std::clamp(dot(x, e[mi]), -1.0, 1.0));
        }
        return acc;
    });
}

BandlimitedFunction zonal_harmonic(int m, const Vec3& axis, bool unit_l2) {
    const double scale = unit_l2 ? 1.0 / std::sqrt(eval_Pk(3, m, 1.0)) : 1.0;
    return make_bandlimited(m, [&](const Vec3& x) {
        return scale * eval_Pk(3, m, std::clamp(dot(x, axis), -1.0, 1.0));
    });
}

std::vector<Vec3> random_unit_vectors(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec3> pts(n);
    for (auto& x : pts) {
        const double z = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        x = Vec3{s * std::cos(phi), s * std::sin(phi), z};
    }
    return pts;
}

}  // namespace sphframe
