#include "sphframe/besov.hpp"

#include <cmath>
#include <stdexcept>

#include "sphframe/zonal.hpp"

namespace sphframe {

namespace {

double inv_or_zero(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// ell^p of one level's coefficients (max for p = infinity).
double level_lp(std::span<const double> coeffs, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double c : coeffs) m = std::max(m, std::abs(c));
        return m;
    }
    double s = 0.0;
    for (double c : coeffs)
        if (c != 0.0) s += std::pow(std::abs(c), p);
    return std::pow(s, 1.0 / p);
}

void check_p_ge_1(double p, const char* who) {
    if (!(p >= 1.0))
        throw std::invalid_argument(std::string(who) +
                                    ": p < 1 is not supported (norms are computed in L^p)");
}

void check_params(double alpha, double p, double tau, const char* who) {
    if (!(alpha > 0.0) || !(p > 0.0) || !(tau > 0.0))
        throw std::domain_error(std::string(who) +
                                ": need alpha > 0 and p, tau > 0 (or infinity)");
}

}  // namespace

double coef_besov_norm(const CoefficientTree& tree, const BesovParams& params,
                       const FrameSystem& F) {
    check_params(params.alpha, params.p, params.tau, "coef_besov_norm");
    const int d = F.dim();
    const double expo = (d - 1) * (inv_or_zero(params.p) - 0.5 - params.alpha / (d - 1));
    // Per-level weight 2^{-j * expo}; tau-sum (or max) over levels.
    if (std::isinf(params.tau)) {
        double m = 0.0;
        for (int j = 0; j <= F.jmax(); ++j) {
            const double lvl = level_lp(tree.levels[static_cast<std::size_t>(j)], params.p);
            m = std::max(m, std::pow(2.0, -j * expo) * lvl);
        }
        return m;
    }
    double s = 0.0;
    for (int j = 0; j <= F.jmax(); ++j) {
        const double lvl = level_lp(tree.levels[static_cast<std::size_t>(j)], params.p);
        if (lvl == 0.0) continue;
        s += std::pow(2.0, -j * expo * params.tau) * std::pow(lvl, params.tau);
    }
    return std::pow(s, 1.0 / params.tau);
}

double diag_besov_norm(const CoefficientTree& tree, double alpha, double tau,
                       const FrameSystem& F) {
    check_params(alpha, 1.0, tau, "diag_besov_norm");
    const int d = F.dim();
    if (std::isinf(tau)) {
        double m = 0.0;
        for (int j = 0; j <= F.jmax(); ++j) {
            const double B = F.level(j).cap_measure;
            const double w = std::pow(B, -0.5 - alpha / (d - 1));
            for (double c : tree.levels[static_cast<std::size_t>(j)])
                m = std::max(m, std::abs(c) * w);
        }
        return m;
    }
    double s = 0.0;
    for (int j = 0; j <= F.jmax(); ++j) {
        const double B = F.level(j).cap_measure;
        const double w = std::pow(B, 1.0 - 0.5 * tau - alpha * tau / (d - 1));
        for (double c : tree.levels[static_cast<std::size_t>(j)])
            if (c != 0.0) s += w * std::pow(std::abs(c), tau);
    }
    return std::pow(s, 1.0 / tau);
}

double sigma_besov_norm(const BandlimitedFunction& f, const BesovParams& params,
                        const Window& win, int jmax, double* last_level_share) {
    check_params(params.alpha, params.p, params.tau, "sigma_besov_norm");
    check_p_ge_1(params.p, "sigma_besov_norm");
    auto ref = product_rule_cached(1 << (jmax + 1));
    auto block_norm = [&](int j) {
        BandlimitedFunction g = sigma_j(f, j, win);
        return lp_norm(g, params.p, *ref);
    };
    if (std::isinf(params.tau)) {
        double m = 0.0, last = 0.0;
        for (int j = 0; j <= jmax; ++j) {
            last = std::pow(2.0, j * params.alpha) * block_norm(j);
            m = std::max(m, last);
        }
        if (last_level_share) *last_level_share = m > 0.0 ? last / m : 0.0;
        return m;
    }
    double s = 0.0, last = 0.0;
    for (int j = 0; j <= jmax; ++j) {
        const double b = block_norm(j);
        last = b == 0.0 ? 0.0
                        : std::pow(2.0, j * params.alpha * params.tau) * std::pow(b, params.tau);
        s += last;
    }
    if (last_level_share) *last_level_share = s > 0.0 ? last / s : 0.0;
    return std::pow(s, 1.0 / params.tau);
}

double approx_besov_norm(const BandlimitedFunction& f, const BesovParams& params,
                         const Window& win, int jmax, double* last_level_share) {
    check_params(params.alpha, params.p, params.tau, "approx_besov_norm");
    check_p_ge_1(params.p, "approx_besov_norm");
    auto ref = product_rule_cached(1 << (jmax + 1));
    const auto f_vals = f.eval_on_grid(*ref);

    auto residual_norm = [&](std::span<const double> partial) {
        if (std::isinf(params.p)) {
            double m = 0.0;
            for (std::size_t i = 0; i < f_vals.size(); ++i)
                m = std::max(m, std::abs(f_vals[i] - partial[i]));
            return m;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < f_vals.size(); ++i)
            s += ref->weights[i] * std::pow(std::abs(f_vals[i] - partial[i]), params.p);
        return std::pow(s, 1.0 / params.p);
    };

    const double mean = f.mean();
    std::vector<double> acc(ref->size(), mean);  // sigma_0(sigma_0 f) = <f,1>
    const double e0 = residual_norm(acc);        // distance to constants

    // E^_{2^j} uses the partial sum through level j+1.
    std::vector<double> ehat(static_cast<std::size_t>(jmax) + 1, 0.0);
    for (int i = 1; i <= jmax + 1; ++i) {
        if (!(2.0 * f.degree() <= std::ldexp(1.0, i - 1))) {
            BandlimitedFunction g = sigma_j(f, i, win);
            zonal_sum_grid(band_kernel(f.dim(), i, win), g.carrier(), g.weighted_samples(), *ref,
                           acc, /*accumulate=*/true);
        }
        if (i >= 1 && i - 1 <= jmax) ehat[static_cast<std::size_t>(i - 1)] = residual_norm(acc);
    }

    double series, last = 0.0, mass = 0.0;
    if (std::isinf(params.tau)) {
        series = e0;
        for (int j = 0; j <= jmax; ++j) {
            last = std::pow(2.0, j * params.alpha) * ehat[static_cast<std::size_t>(j)];
            series = std::max(series, last);
        }
        mass = series;
    } else {
        double s = std::pow(e0, params.tau);
        for (int j = 0; j <= jmax; ++j) {
            const double e = ehat[static_cast<std::size_t>(j)];
            last = e == 0.0 ? 0.0
                            : std::pow(2.0, j * params.alpha * params.tau) * std::pow(e, params.tau);
            s += last;
        }
        mass = s;
        series = std::pow(s, 1.0 / params.tau);
    }
    if (last_level_share) *last_level_share = mass > 0.0 ? last / mass : 0.0;
    return series + std::abs(mean);
}

EquivalenceReport equivalence_report(std::span<const BandlimitedFunction> ensemble,
                                     const BesovParams& params, const FrameSystem& F) {
    EquivalenceReport rep;
    rep.params = params;
    const int jmax = F.jmax();
    const double tau_diag = params.tau;

    auto fold = [](RatioStats& st, double r, bool first) {
        if (first) {
            st.min = st.max = r;
        } else {
            st.min = std::min(st.min, r);
            st.max = std::max(st.max, r);
        }
    };

    int id = 0;
    for (const auto& f : ensemble) {
        EquivalenceEntry e;
        e.id = id;
        const CoefficientTree tree = analyze(F, f);
        e.coef = coef_besov_norm(tree, params, F);
        e.diag = diag_besov_norm(tree, params.alpha, tau_diag, F);
        e.sigma = sigma_besov_norm(f, params, F.window(), jmax, &e.sigma_tail);
        e.approx = approx_besov_norm(f, params, F.window(), jmax, &e.approx_tail);
        rep.per_function.push_back(e);
        fold(rep.coef_over_sigma, e.coef / e.sigma, id == 0);
        fold(rep.coef_over_approx, e.coef / e.approx, id == 0);
        ++id;
    }
    rep.coef_over_sigma.spread =
        rep.coef_over_sigma.min > 0.0 ? rep.coef_over_sigma.max / rep.coef_over_sigma.min : 0.0;
    rep.coef_over_approx.spread =
        rep.coef_over_approx.min > 0.0 ? rep.coef_over_approx.max / rep.coef_over_approx.min : 0.0;
    rep.pass = rep.coef_over_sigma.spread < 100.0 && rep.coef_over_approx.spread < 100.0;
    return rep;
}

}  // namespace sphframe
