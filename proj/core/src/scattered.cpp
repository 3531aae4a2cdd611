#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sphframe/bandlimited.hpp"
#include "sphframe/gegenbauer.hpp"
#include "sphframe/quadrature.hpp"

namespace sphframe {

namespace {

// Lawson-Hanson nonnegative least squares via the normal equations
// (G = A^T A, h = A^T b). The passive-set subproblems are solved with
// Eigen's LDLT on the corresponding principal submatrix.
Eigen::VectorXd nnls(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, int max_outer) {
    const Eigen::Index n = G.cols();
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    std::vector<Eigen::Index> passive;
    std::vector<bool> in_passive(static_cast<std::size_t>(n), false);
    const double scale = h.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * std::max(scale, 1.0);

    auto solve_passive = [&](Eigen::VectorXd& z) {
        const Eigen::Index m = static_cast<Eigen::Index>(passive.size());
        Eigen::MatrixXd Gp(m, m);
        Eigen::VectorXd hp(m);
        for (Eigen::Index r = 0; r < m; ++r) {
            hp(r) = h(passive[static_cast<std::size_t>(r)]);
            for (Eigen::Index c = 0; c < m; ++c)
                Gp(r, c) = G(passive[static_cast<std::size_t>(r)], passive[static_cast<std::size_t>(c)]);
        }
        z = Gp.ldlt().solve(hp);
    };

    for (int outer = 0; outer < max_outer; ++outer) {
        const Eigen::VectorXd w = h - G * a;
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!in_passive[static_cast<std::size_t>(i)] && w(i) > best_w) {
                best_w = w(i);
                best = i;
            }
        }
        if (best < 0) break;
        passive.push_back(best);
        in_passive[static_cast<std::size_t>(best)] = true;

        for (int inner = 0; inner < max_outer; ++inner) {
            Eigen::VectorXd z;
            solve_passive(z);
            bool all_positive = true;
            double step = 1.0;
            for (std::size_t r = 0; r < passive.size(); ++r) {
                if (z(static_cast<Eigen::Index>(r)) <= 0.0) {
                    all_positive = false;
                    const double ar = a(passive[r]);
                    const double zr = z(static_cast<Eigen::Index>(r));
                    if (ar - zr > 0.0) step = std::min(step, ar / (ar - zr));
                }
            }
            if (all_positive) {
                for (std::size_t r = 0; r < passive.size(); ++r)
                    a(passive[r]) = z(static_cast<Eigen::Index>(r));
                break;
            }
            for (std::size_t r = 0; r < passive.size(); ++r) {
                const Eigen::Index i = passive[r];
                a(i) += step * (z(static_cast<Eigen::Index>(r)) - a(i));
            }
            // Drop variables that hit the boundary.
            std::vector<Eigen::Index> kept;
            for (Eigen::Index i : passive) {
                if (a(i) > tol * 1e-3) {
                    kept.push_back(i);
                } else {
                    a(i) = 0.0;
                    in_passive[static_cast<std::size_t>(i)] = false;
                }
            }
            passive = std::move(kept);
            if (passive.empty()) break;
        }
    }
    return a;
}

std::vector<Vec3> merge_duplicates(std::span<const Vec3> points) {
    std::vector<Vec3> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        bool dup = false;
        for (const auto& q : out) {
            if (p[0] == q[0] && p[1] == q[1] && p[2] == q[2]) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

}  // namespace

ScatteredResult build_scattered_rule(std::span<const Vec3> points, int d, int N) {
    if (d != 3) throw std::domain_error("build_scattered_rule: only d = 3 point sets are supported");
    ScatteredResult result;
    if (N < 0 || points.empty()) return result;

    const std::vector<Vec3> pts = merge_duplicates(points);
    const Eigen::Index n_pts = static_cast<Eigen::Index>(pts.size());

    // Auxiliary centers: nodes of a product rule of exactness 2N. A degree-N
    // grid has only N+1 longitudes, which alias azimuthal orders m and
    // m-(N+1) and leave the moment map on H_N rank-deficient; 2N+1
    // longitudes and N+1 latitudes make the centers a determining set for
    // every H_k, k <= N.
    const CubatureRule aux = build_product_rule(3, 2 * N);
    const Eigen::Index n_aux = static_cast<Eigen::Index>(aux.size());
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(N) * n_aux;

    // Moment system: row 0 enforces total mass 1; for each degree k and
    // center eta, sum_i a_i P_k(xi_i . eta) / P_k(1) must vanish.
    Eigen::MatrixXd A(rows, n_pts);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
    A.row(0).setOnes();
    b(0) = 1.0;
    for (int k = 1; k <= N; ++k) {
        const double norm = eval_Pk(3, k, 1.0);
        for (Eigen::Index m = 0; m < n_aux; ++m) {
            const Eigen::Index r = 1 + (static_cast<Eigen::Index>(k) - 1) * n_aux + m;
            for (Eigen::Index i = 0; i < n_pts; ++i) {
                const double t =
                    std::clamp(dot(pts[static_cast<std::size_t>(i)], aux.nodes[static_cast<std::size_t>(m)]), -1.0, 1.0);
                A(r, i) = eval_Pk(3, k, t) / norm;
            }
        }
    }

    const Eigen::MatrixXd G = A.transpose() * A;
    const Eigen::VectorXd h = A.transpose() * b;
    const Eigen::VectorXd a = nnls(G, h, static_cast<int>(3 * n_pts + 30));

    result.residual = (A * a - b).cwiseAbs().maxCoeff();
    if (result.residual > 1e-9) return result;

    CubatureRule rule;
    rule.dim = 3;
    rule.degree = N;
    rule.kind = RuleKind::scattered;
    rule.nodes = pts;
    rule.weights.assign(static_cast<std::size_t>(n_pts), 0.0);
    for (Eigen::Index i = 0; i < n_pts; ++i)
        rule.weights[static_cast<std::size_t>(i)] = std::max(0.0, a(i));
    result.rule = std::move(rule);
    return result;
}

double mz_ratio(const BandlimitedFunction& f, const CubatureRule& rule, double p, double t) {
    if (f.degree() > rule.degree)
        throw std::invalid_argument("mz_ratio: rule exactness below deg f");
    const auto samples = rule.kind == RuleKind::product && !rule.rings.empty()
                             ? f.eval_on_grid(rule)
                             : f.eval_at(std::span<const Vec3>(rule.nodes));
    const double discrete = discrete_norm(samples, rule, p, t);
    const int ref_degree = std::min(1024, std::max(4 * f.degree(), 16));
    const double continuous = lp_norm(f, p, *product_rule_cached(ref_degree));
    return discrete / continuous;
}

}  // namespace sphframe
