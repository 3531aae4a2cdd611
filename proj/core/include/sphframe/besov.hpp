#pragma once

#include <span>
#include <vector>

#include "sphframe/bandlimited.hpp"
#include "sphframe/frame.hpp"

namespace sphframe {

/// Smoothness-space parameters (alpha, p, tau); p or tau may be infinity.
struct BesovParams {
    double alpha = 1.0;
    double p = 2.0;
    double tau = 2.0;
};

/// Coefficient-side norm
///   ( sum_j 2^{-j(d-1)tau(1/p - 1/2 - alpha/(d-1))}
///         ( sum_k |c_{j,k}|^p )^{tau/p} )^{1/tau},
/// with max forms when p and/or tau is infinity.
double coef_besov_norm(const CoefficientTree& tree, const BesovParams& params,
                       const FrameSystem& F);

/// Cap-measure form ( sum_B |c_B|^tau |B|^{1 - tau/2 - alpha tau/(d-1)} )^{1/tau},
/// using exact cap measures; max form at tau = infinity.
double diag_besov_norm(const CoefficientTree& tree, double alpha, double tau,
                       const FrameSystem& F);

/// Block-side norm ( sum_{j<=jmax} 2^{j alpha tau} ||sigma_j f||_p^tau )^{1/tau}.
/// Norms are taken on a reference rule of exactness 2^{jmax+1}.
/// Requires p >= 1. When `last_level_share` is non-null it receives the
/// fraction of the tau-th-power mass carried by level jmax (the share of
/// the largest level under the max forms), certifying the truncation.
double sigma_besov_norm(const BandlimitedFunction& f, const BesovParams& params,
                        const Window& win, int jmax, double* last_level_share = nullptr);

/// Approximation-side norm built from the dyadic near-best surrogates
///   E^_{2^j}(f)_p = || f - sum_{i<=j+1} sigma_i(sigma_i f) ||_p :
/// ( E^_0^tau + sum_{j<=jmax} 2^{j alpha tau} E^_{2^j}^tau )^{1/tau} + |<f,1>|,
/// where E^_0 = ||f - <f,1>||_p is the distance-to-constants term of the
/// defining sum. Requires p >= 1. `last_level_share` as above.
double approx_besov_norm(const BandlimitedFunction& f, const BesovParams& params,
                         const Window& win, int jmax, double* last_level_share = nullptr);

struct EquivalenceEntry {
    int id = 0;
    double coef = 0.0;
    double diag = 0.0;
    double sigma = 0.0;
    double approx = 0.0;
    double sigma_tail = 0.0;   // last-level share of the sigma norm's mass
    double approx_tail = 0.0;  // last-level share of the approx norm's sum
};

struct RatioStats {
    double min = 0.0;
    double max = 0.0;
    double spread = 0.0;  // max / min
};

struct EquivalenceReport {
    BesovParams params;
    std::vector<EquivalenceEntry> per_function;
    RatioStats coef_over_sigma;
    RatioStats coef_over_approx;
    bool pass = false;  // both spreads < 100
};

/// Mutual-equivalence probe across an ensemble: coefficient-side vs
/// block-side vs approximation-side norms per function, with spread stats.
EquivalenceReport equivalence_report(std::span<const BandlimitedFunction> ensemble,
                                     const BesovParams& params, const FrameSystem& F);

}  // namespace sphframe
