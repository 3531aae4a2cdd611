#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "sphframe/bandlimited.hpp"
#include "sphframe/quadrature.hpp"
#include "sphframe/window.hpp"

namespace sphframe {

/// One frame level: a positive cubature rule of exactness 2^{j+4} whose
/// nodes x_{j,k} and weights lambda_{j,k} define the atoms
///     psi_{j,k}(x) = sqrt(lambda_{j,k}) G_j(x . x_{j,k}),
/// each indexed by the cap B(x_{j,k}, 2^{-j} pi).
struct FrameLevel {
    int j = 0;
    std::shared_ptr<const CubatureRule> rule;
    double cap_radius = 0.0;
    double cap_measure = 0.0;
};

class FrameSystem {
public:
    /// Build levels 0..jmax. Level 0 is the single atom psi_{0,0} = 1 at
    /// the north pole; levels j >= 1 use product rules of exactness 2^{j+4}.
    /// Only d = 3, 0 <= jmax <= 8.
    static FrameSystem build(int dim, int jmax, Window window = {});

    int dim() const { return dim_; }
    int jmax() const { return jmax_; }
    const Window& window() const { return window_; }
    const FrameLevel& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }
    std::size_t level_size(int j) const { return level(j).rule->size(); }
    std::size_t total_atoms() const;

    const Vec3& node(int j, std::size_t k) const { return level(j).rule->nodes.at(k); }
    double lambda(int j, std::size_t k) const { return level(j).rule->weights.at(k); }
    Cap cap(int j, std::size_t k) const;

    /// sqrt(lambda_{j,k}) G_j(x . x_{j,k}).
    double atom_eval(int j, std::size_t k, const Vec3& x) const;

    KernelSeries band(int j) const { return band_kernel(dim_, j, window_); }

private:
    int dim_ = 3;
    int jmax_ = 0;
    Window window_;
    std::vector<FrameLevel> levels_;
};

/// Frame coefficients c_{j,k} = <f, psi_{j,k}>, one array per level,
/// aligned with the level rules.
struct CoefficientTree {
    std::vector<std::vector<double>> levels;
    bool truncated = false;  // set when deg f exceeded 2^{jmax-1} at analysis

    double coeff(int j, std::size_t k) const { return levels.at(static_cast<std::size_t>(j)).at(k); }
    std::size_t nonzero_count() const;
    double sum_squares() const;
};

/// c_{j,k} = sqrt(lambda_{j,k}) (sigma_j f)(x_{j,k}); every inner product is
/// an exact integral because the level rule integrates f * G_j(x_{j,k} .).
/// Levels whose band lies above deg f are filled with exact zeros. When
/// deg f > 2^{jmax-1} the tree is still computed but flagged truncated.
CoefficientTree analyze(const FrameSystem& F, const BandlimitedFunction& f);

/// Pointwise synthesis sum_{j,k} c_{j,k} psi_{j,k}(x) at each x in X.
std::vector<double> synthesize(const FrameSystem& F, const CoefficientTree& tree,
                               std::span<const Vec3> X);

/// Same, evaluated at the nodes of a rule (aligned with its layout).
std::vector<double> synthesize_on_grid(const FrameSystem& F, const CoefficientTree& tree,
                                       const CubatureRule& rule);

/// Empirical localization constant of the band kernel at level j:
///   sup_theta |G_j(cos theta)| (1 + 2^j theta)^ell / 2^{j(d-1)}
/// over a 10^4-point theta grid refined geometrically near 0.
double localization_profile(const FrameSystem& F, int j, int ell);

}  // namespace sphframe
