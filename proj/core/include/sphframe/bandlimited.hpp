#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sphframe/gegenbauer.hpp"
#include "sphframe/quadrature.hpp"
#include "sphframe/window.hpp"

namespace sphframe {

/// A spherical polynomial of degree <= L, represented by its samples on a
/// positive cubature rule of exactness >= 2L (the carrier). Everything a
/// band-limited function can do -- point evaluation, projection, band-pass
/// filtering, norms -- goes through zonal kernels and the carrier rule; no
/// explicit spherical-harmonic basis is ever formed.
class BandlimitedFunction {
public:
    BandlimitedFunction() = default;

    /// Wrap existing samples. Requires carrier->degree >= 2 * degree.
    BandlimitedFunction(int dim, int degree, std::shared_ptr<const CubatureRule> carrier,
                        std::vector<double> samples);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const CubatureRule& carrier() const { return *carrier_; }
    std::shared_ptr<const CubatureRule> carrier_ptr() const { return carrier_; }
    std::span<const double> samples() const { return samples_; }

    /// f(x) = sum_i w_i f(xi_i) K_L(x . xi_i), exact for members of Pi_L.
    double eval_at(const Vec3& x) const;
    std::vector<double> eval_at(std::span<const Vec3> xs) const;

    /// Values of f at the nodes of another rule.
    std::vector<double> eval_on_grid(const CubatureRule& rule) const;

    /// <f, 1> (exact: the carrier integrates Pi_L).
    double mean() const;

    /// Carrier-weighted alpha_i = w_i f(xi_i), the standard source term for
    /// zonal sums against this function.
    std::vector<double> weighted_samples() const;

private:
    int dim_ = 3;
    int degree_ = 0;
    std::shared_ptr<const CubatureRule> carrier_;
    std::vector<double> samples_;
};

/// Build a function of degree L by sampling `f` on a fresh carrier of
/// exactness 2L. The result is exact iff f really lies in Pi_L.
template <typename F>
BandlimitedFunction make_bandlimited(int L, F&& f) {
    auto carrier = product_rule_cached(std::max(2 * L, 0));
    std::vector<double> samples(carrier->size());
    for (std::size_t i = 0; i < carrier->size(); ++i) samples[i] = f(carrier->nodes[i]);
    return BandlimitedFunction(3, L, std::move(carrier), std::move(samples));
}

/// Re-express f by its samples on `rule` (exact pointwise evaluation).
/// Requires rule.degree >= 2 * f.degree.
BandlimitedFunction resample(const BandlimitedFunction& f,
                             std::shared_ptr<const CubatureRule> rule);

/// The degree projection Y_k f as a band-limited function of degree k.
BandlimitedFunction project_degree(const BandlimitedFunction& f, int k);

/// Band kernel G_j = sum_k phi(k / 2^{j-1}) P_k over k in [floor(2^{j-2}), 2^j];
/// G_0 = 1.
KernelSeries band_kernel(int d, int j, const Window& win = {});

/// sigma_j f = <f, G_j(x .)>, a band-limited function of degree 2^j.
/// Identically zero when deg f <= 2^{j-2} (the window vanishes on the
/// remaining band); in that case a zero function is returned directly.
BandlimitedFunction sigma_j(const BandlimitedFunction& f, int j, const Window& win = {});

/// Values of sigma_j f at arbitrary points / at another rule's nodes.
/// When the carrier's exactness is below deg f + 2^j, the function is first
/// resampled on a finer rule so the defining integrals stay exact.
std::vector<double> sigma_j_at(const BandlimitedFunction& f, int j, std::span<const Vec3> xs,
                               const Window& win = {});
std::vector<double> sigma_j_on_grid(const BandlimitedFunction& f, int j, const CubatureRule& rule,
                                    const Window& win = {});

/// sum_{j=0..J} sigma_j(sigma_j f); equals f whenever 2^{J-1} >= deg f.
/// Throws std::invalid_argument if J is too small for full capture.
BandlimitedFunction reproduce(const BandlimitedFunction& f, int J, const Window& win = {});

/// (sum_i w_i |f(xi_i)|^p)^{1/p} over reference_rule (max for p = infinity).
/// Exact for p = 2 when reference_rule.degree >= 2 deg f.
double lp_norm(const BandlimitedFunction& f, double p, const CubatureRule& reference_rule);

/// Seeded random polynomial f(x) = sum_{m<=L} c_m P_m(x . e_m) with
/// c_m ~ U[-1, 1] and independent uniform axes e_m.
BandlimitedFunction random_polynomial(int L, std::uint64_t seed);

/// The zonal harmonic P_m(x . axis), optionally scaled to unit L2 norm.
BandlimitedFunction zonal_harmonic(int m, const Vec3& axis, bool unit_l2 = false);

/// Seeded uniform points on S^2.
std::vector<Vec3> random_unit_vectors(std::size_t n, std::uint64_t seed);

}  // namespace sphframe
