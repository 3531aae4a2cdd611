#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sphframe/besov.hpp"
#include "sphframe/frame.hpp"

namespace sphframe {

struct AtomRef {
    int j = 0;
    std::size_t k = 0;
};

/// Greedy selection: atoms ranked by score |c_{j,k}| |B_{j,k}|^{1/p - 1/2}
/// (exponent 1/p taken as 0 for p = infinity), descending, ties broken by
/// lexicographic (j, k). The order is a global ranking, so selections nest.
struct GreedySelection {
    std::vector<AtomRef> order;   // top-n atoms, descending score
    std::vector<double> scores;   // aligned with order
    double p = 2.0;
};

GreedySelection greedy_select(const CoefficientTree& tree, std::size_t n, double p,
                              const FrameSystem& F);

/// Partial synthesis over the selected atoms only.
std::vector<double> greedy_approx(const FrameSystem& F, const CoefficientTree& tree,
                                  std::size_t n, double p, std::span<const Vec3> X);

/// tau paired with (alpha, p) throughout the rate theory:
/// tau = (alpha/(d-1) + 1/p)^{-1}.
double jackson_tau(double alpha, double p, int d = 3);

struct JacksonReport {
    double alpha = 0.0;
    double p = 2.0;
    double tau = 0.0;
    double besov = 0.0;                 // |f| in the (alpha, tau, tau) scale
    std::vector<long> n_grid;
    std::vector<double> errors;         // e_n = ||f - G_n f||_p
    std::vector<double> ratios;         // e_n n^{alpha/(d-1)} / besov
    double slope = 0.0;                 // least-squares slope of log e_n vs log n
    double slope_stderr = 0.0;
    std::uint64_t seed = 0;
};

/// Greedy error decay for the function synthesized from `tree`:
/// e_n over n_grid, normalized Jackson ratios, and the fitted log-log slope.
/// Error norms are L^p sums on a rule of exactness 2^{jmax+1}.
JacksonReport jackson_experiment(const FrameSystem& F, const CoefficientTree& tree, double alpha,
                                 double p, std::span<const long> n_grid);

/// Convenience overload analyzing f first.
JacksonReport jackson_experiment(const FrameSystem& F, const BandlimitedFunction& f, double alpha,
                                 double p, std::span<const long> n_grid);

struct BernsteinReport {
    double alpha = 0.0;
    double p = 2.0;
    double tau = 0.0;
    std::size_t n = 0;       // nonzero atoms
    double besov = 0.0;      // diag-form norm of the tree
    double gnorm = 0.0;      // || max_B |a_B| |B|^{-1/2} chi_B ||_p
    double R = 0.0;          // besov / (n^{alpha/(d-1)} gnorm)
};

/// Inverse-inequality probe for an n-term tree. ||g||_p integrates the
/// pointwise max of weighted cap indicators exactly in longitude (see
/// caps.hpp); for a single atom R = 1 identically.
BernsteinReport bernstein_check(const FrameSystem& F, const CoefficientTree& tree, double alpha,
                                double p);

/// Coefficient tree with the decay rate that places it in the smoothness
/// class of order alpha + eps: on each level, supp has ~2^{j(d-1)} atoms
/// chosen uniformly at random, each carrying
///   c_{j,k} = +- 2^{-j(d-1)(1/2 + alpha/(d-1) + eps/(d-1))}.
CoefficientTree synthetic_besov_tree(const FrameSystem& F, double alpha, double eps,
                                     std::uint64_t seed);

/// n-term tree with atoms at seeded random positions (levels 1..jmax) and
/// coefficients uniform in [1/2, 1] with random signs.
CoefficientTree random_nterm_tree(const FrameSystem& F, std::size_t n, std::uint64_t seed);

}  // namespace sphframe
