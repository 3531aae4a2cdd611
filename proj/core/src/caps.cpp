#include "sphframe/caps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sphframe {

namespace {

constexpr double kPi = std::numbers::pi;

struct PolarCap {
    double theta_c;   // colatitude of the center
    double phi_c;     // longitude of the center
    double radius;
    double vp;        // value^p
};

// Half-width in longitude of the cap's arc on the latitude circle at
// colatitude theta: cos(radius) = cos t cos tc + sin t sin tc cos(dphi).
// Returns < 0 for "no arc", pi for "full circle".
double arc_half_width(const PolarCap& cap, double theta) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sc = std::sin(cap.theta_c), cc = std::cos(cap.theta_c);
    const double denom = st * sc;
    const double num = std::cos(cap.radius) - ct * cc;
    if (std::abs(denom) < 1e-300) {
        // Circle or cap center degenerate at a pole: membership is
        // independent of phi.
        const double dist = std::abs(theta - cap.theta_c);
        return dist <= cap.radius ? kPi : -1.0;
    }
    const double q = num / denom;
    if (q >= 1.0) return -1.0;
    if (q <= -1.0) return kPi;
    return std::acos(q);
}

// Longitude integral over [0, 2pi) of (max of covering arc values), divided
// by 2pi. Arcs are [phi_c - w, phi_c + w] mod 2pi; full-circle covers set a
// floor. Exact sweep over the endpoint arrangement.
double longitude_average(const std::vector<PolarCap>& caps, double theta) {
    double floor_vp = 0.0;
    struct Arc {
        double lo, hi, vp;
    };
    static thread_local std::vector<Arc> arcs;
    static thread_local std::vector<double> cuts;
    arcs.clear();
    cuts.clear();

    for (const auto& cap : caps) {
        const double w = arc_half_width(cap, theta);
        if (w < 0.0) continue;
        if (w >= kPi) {
            floor_vp = std::max(floor_vp, cap.vp);
            continue;
        }
        double lo = std::fmod(cap.phi_c - w, 2.0 * kPi);
        if (lo < 0.0) lo += 2.0 * kPi;
        double hi = lo + 2.0 * w;
        arcs.push_back({lo, hi, cap.vp});
        cuts.push_back(lo);
        cuts.push_back(std::fmod(hi, 2.0 * kPi));
    }
    if (arcs.empty()) return floor_vp;

    cuts.push_back(0.0);
    cuts.push_back(2.0 * kPi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double len = cuts[i + 1] - cuts[i];
        if (len <= 0.0) continue;
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        double v = floor_vp;
        for (const auto& a : arcs) {
            // mid is in [lo, hi] mod 2pi?
            if (mid >= a.lo ? (mid <= a.hi) : (mid + 2.0 * kPi <= a.hi)) v = std::max(v, a.vp);
        }
        integral += len * v;
    }
    return integral / (2.0 * kPi);
}

}  // namespace

double cap_union_lp_pow(std::span<const Cap> caps, std::span<const double> values, double p) {
    if (caps.size() != values.size())
        throw std::invalid_argument("cap_union_lp_pow: caps/values size mismatch");
    if (!(p > 0.0) || std::isinf(p))
        throw std::domain_error("cap_union_lp_pow: p must be finite and positive");
    if (caps.empty()) return 0.0;

    std::vector<PolarCap> pc;
    pc.reserve(caps.size());
    std::vector<double> splits = {0.0, kPi};
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (values[i] < 0.0) throw std::domain_error("cap_union_lp_pow: negative value");
        if (values[i] == 0.0) continue;
        PolarCap c;
        c.theta_c = std::acos(std::clamp(caps[i].center[2], -1.0, 1.0));
        c.phi_c = std::atan2(caps[i].center[1], caps[i].center[0]);
        if (c.phi_c < 0.0) c.phi_c += 2.0 * kPi;
        c.radius = caps[i].radius;
        c.vp = std::pow(values[i], p);
        pc.push_back(c);
        // Critical latitudes: cap edge tangencies and, for caps wrapping a
        // pole, the partial-arc / full-circle transitions. The arc width has
        // square-root behavior at each.
        for (double s : {c.theta_c - c.radius, c.theta_c + c.radius, c.radius - c.theta_c,
                         2.0 * kPi - (c.theta_c + c.radius)}) {
            if (s > 0.0 && s < kPi) splits.push_back(s);
        }
    }
    if (pc.empty()) return 0.0;
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-14; }),
                 splits.end());

    // Gauss-Legendre nodes reused across pieces.
    static const int kGL = 64;
    static std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(kGL, gx, gw);

    double total = 0.0;
    for (std::size_t seg = 0; seg + 1 < splits.size(); ++seg) {
        const double a = splits[seg], b = splits[seg + 1];
        if (b - a < 1e-15) continue;
        // Smooth substitution theta = a + (b-a) s^2 (3 - 2s): the mapping's
        // derivative vanishes at both ends, turning sqrt singularities of
        // the arc widths into analytic factors.
        double piece = 0.0;
        for (int i = 0; i < kGL; ++i) {
            const double s = 0.5 * (gx[static_cast<std::size_t>(i)] + 1.0);
            const double w = 0.5 * gw[static_cast<std::size_t>(i)];
            const double theta = a + (b - a) * s * s * (3.0 - 2.0 * s);
            const double jac = (b - a) * 6.0 * s * (1.0 - s);
            piece += w * jac * longitude_average(pc, theta) * 0.5 * std::sin(theta);
        }
        total += piece;
    }
    return total;
}

}  // namespace sphframe
