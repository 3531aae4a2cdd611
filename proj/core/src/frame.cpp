#include "sphframe/frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sphframe/zonal.hpp"

namespace sphframe {

namespace {
constexpr double kPi = std::numbers::pi;

std::shared_ptr<const CubatureRule> level0_rule() {
    auto rule = std::make_shared<CubatureRule>();
    rule->dim = 3;
    rule->degree = 0;
    rule->kind = RuleKind::product;
    rule->nodes = {Vec3{0.0, 0.0, 1.0}};
    rule->weights = {1.0};
    RingInfo ring;
    ring.cos_theta = 1.0;
    ring.sin_theta = 0.0;
    ring.count = 1;
    ring.offset = 0;
    ring.node_weight = 1.0;
    rule->rings = {ring};
    return rule;
}
}  // namespace

FrameSystem FrameSystem::build(int dim, int jmax, Window window) {
    if (dim != 3) throw std::domain_error("FrameSystem: only d = 3 is supported");
    if (jmax < 0 || jmax > 8)
        throw std::domain_error("FrameSystem: jmax must lie in [0, 8], got " +
                                std::to_string(jmax));
    FrameSystem F;
    F.dim_ = dim;
    F.jmax_ = jmax;
    F.window_ = window;
    F.levels_.reserve(static_cast<std::size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
        FrameLevel lvl;
        lvl.j = j;
        lvl.rule = (j == 0) ? level0_rule() : product_rule_cached(1 << (j + 4));
        lvl.cap_radius = std::ldexp(kPi, -j);
        lvl.cap_measure = cap_measure(dim, lvl.cap_radius);
        F.levels_.push_back(std::move(lvl));
    }
    return F;
}

std::size_t FrameSystem::total_atoms() const {
    std::size_t n = 0;
    for (const auto& lvl : levels_) n += lvl.rule->size();
    return n;
}

Cap FrameSystem::cap(int j, std::size_t k) const {
    const FrameLevel& lvl = level(j);
    Cap c;
    c.center = lvl.rule->nodes.at(k);
    c.radius = lvl.cap_radius;
    c.measure = lvl.cap_measure;
    return c;
}

double FrameSystem::atom_eval(int j, std::size_t k, const Vec3& x) const {
    const FrameLevel& lvl = level(j);
    const double t = std::clamp(dot(x, lvl.rule->nodes.at(k)), -1.0, 1.0);
    return std::sqrt(lvl.rule->weights.at(k)) * eval_kernel_series(band(j), t);
}

std::size_t CoefficientTree::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& lvl : levels)
        for (double c : lvl)
            if (c != 0.0) ++n;
    return n;
}

double CoefficientTree::sum_squares() const {
    double s = 0.0;
    for (const auto& lvl : levels)
        for (double c : lvl) s += c * c;
    return s;
}

CoefficientTree analyze(const FrameSystem& F, const BandlimitedFunction& f) {
    CoefficientTree tree;
    tree.levels.resize(static_cast<std::size_t>(F.jmax()) + 1);
    tree.truncated = f.degree() > std::ldexp(1.0, F.jmax() - 1);

    // Lift once so every level's inner products f * G_j are integrated
    // exactly from the same carrier.
    int max_band = 0;
    for (int j = 1; j <= F.jmax(); ++j)
        if (!(2.0 * f.degree() <= std::ldexp(1.0, j - 1))) max_band = 1 << j;
    BandlimitedFunction lifted;
    const BandlimitedFunction* src = &f;
    if (max_band > 0 && f.carrier().degree < f.degree() + max_band) {
        lifted = resample(f, product_rule_cached(f.degree() + max_band));
        src = &lifted;
    }
    const auto alpha = src->weighted_samples();

    for (int j = 0; j <= F.jmax(); ++j) {
        const FrameLevel& lvl = F.level(j);
        auto& coeffs = tree.levels[static_cast<std::size_t>(j)];
        if (j == 0) {
            coeffs = {f.mean()};
            continue;
        }
        if (2.0 * f.degree() <= std::ldexp(1.0, j - 1)) {
            coeffs.assign(lvl.rule->size(), 0.0);
            continue;
        }
        coeffs.resize(lvl.rule->size());
        zonal_sum_grid(F.band(j), src->carrier(), alpha, *lvl.rule, coeffs);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            coeffs[k] *= std::sqrt(lvl.rule->weights[k]);
    }
    return tree;
}

namespace {

void check_tree_shape(const FrameSystem& F, const CoefficientTree& tree) {
    if (tree.levels.size() != static_cast<std::size_t>(F.jmax()) + 1)
        throw std::invalid_argument("coefficient tree does not match the frame's level count");
    for (int j = 0; j <= F.jmax(); ++j)
        if (tree.levels[static_cast<std::size_t>(j)].size() != F.level_size(j))
            throw std::invalid_argument("coefficient tree level " + std::to_string(j) +
                                        " does not match the frame's node count");
}

// Per-node synthesis sources alpha_k = c_{j,k} sqrt(lambda_{j,k}).
std::vector<double> synthesis_sources(const FrameSystem& F, const CoefficientTree& tree, int j) {
    const FrameLevel& lvl = F.level(j);
    const auto& coeffs = tree.levels[static_cast<std::size_t>(j)];
    std::vector<double> alpha(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        alpha[k] = coeffs[k] * std::sqrt(lvl.rule->weights[k]);
    return alpha;
}

bool level_is_zero(std::span<const double> coeffs) {
    for (double c : coeffs)
        if (c != 0.0) return false;
    return true;
}

}  // namespace

std::vector<double> synthesize(const FrameSystem& F, const CoefficientTree& tree,
                               std::span<const Vec3> X) {
    check_tree_shape(F, tree);
    std::vector<double> out(X.size(), 0.0);
    for (int j = 0; j <= F.jmax(); ++j) {
        if (level_is_zero(tree.levels[static_cast<std::size_t>(j)])) continue;
        zonal_sum(F.band(j), *F.level(j).rule, synthesis_sources(F, tree, j), X, out,
                  /*accumulate=*/true);
    }
    return out;
}

std::vector<double> synthesize_on_grid(const FrameSystem& F, const CoefficientTree& tree,
                                       const CubatureRule& rule) {
    check_tree_shape(F, tree);
    std::vector<double> out(rule.size(), 0.0);
    for (int j = 0; j <= F.jmax(); ++j) {
        if (level_is_zero(tree.levels[static_cast<std::size_t>(j)])) continue;
        zonal_sum_grid(F.band(j), *F.level(j).rule, synthesis_sources(F, tree, j), rule, out,
                       /*accumulate=*/true);
    }
    return out;
}

double localization_profile(const FrameSystem& F, int j, int ell) {
    if (j < 1 || j > F.jmax()) throw std::domain_error("localization_profile: level out of range");
    if (ell < 0) throw std::domain_error("localization_profile: ell must be >= 0");
    const KernelSeries G = F.band(j);
    const double scale = std::pow(std::ldexp(1.0, j), F.dim() - 1);  // 2^{j(d-1)}
    const double twoj = std::ldexp(1.0, j);

    auto profile_at = [&](double theta) {
        const double g = eval_kernel_series(G, std::cos(theta));
        return std::abs(g) * std::pow(1.0 + twoj * theta, ell) / scale;
    };

    double sup = 0.0;
    const int n_uniform = 10000;
    for (int i = 1; i <= n_uniform; ++i) sup = std::max(sup, profile_at(kPi * i / n_uniform));
    // Geometric refinement near theta = 0: 20 extra points per dyadic scale.
    for (int s = 1; s <= 40; ++s) {
        const double hi = std::ldexp(kPi, -s);
        const double lo = 0.5 * hi;
        for (int i = 0; i < 20; ++i) sup = std::max(sup, profile_at(lo + (hi - lo) * (i + 1) / 20.0));
    }
    return sup;
}

}  // namespace sphframe
