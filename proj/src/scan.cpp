#include "qsd/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsd {

namespace {

struct GridPoint {
    double a = 0.5;
    double theta = 0.0;
    double phi = 0.0;
};

BinaryPovm extremal_povm(const GridPoint& g) {
    const double mag = std::min(g.a, 1.0 - g.a);
    const BlochVector b{mag * std::sin(g.theta) * std::cos(g.phi),
                        mag * std::sin(g.theta) * std::sin(g.phi),
                        mag * std::cos(g.theta)};
    return povm_from_params(g.a, b);
}

}  // namespace

ScanResult scan(const Scenario& s, int n, int refine_levels) {
    if (n < 8) {
        throw InvalidState("scan grid needs at least 8 points per axis");
    }
    constexpr double pi = std::numbers::pi;

    const Mat2 rho0 = bloch_to_density(s.r0);
    const Mat2 rho1 = bloch_to_density(s.r1);
    const Mat2 flag0 = flag_state(s, 0);
    const Mat2 flag1 = flag_state(s, 1);

    ScanResult out;
    out.min_error = 1.0;
    GridPoint best;

    auto visit = [&](const GridPoint& g) {
        const BinaryPovm d = extremal_povm(g);
        const double miss0 = response(d, rho0).p1;
        const double miss1 = response(d, rho1).p0;
        const double err = 0.5 * (miss0 + miss1);

        const double d00 = s.p * (1.0 - miss0) + (1.0 - s.p) * response(d, flag0).p0;
        const double d11 = s.p * (1.0 - miss1) + (1.0 - s.p) * response(d, flag1).p1;
        const double gap = d00 + d11 - 1.0;

        out.detectors_scanned += 1;
        out.max_abs_gap = std::max(out.max_abs_gap, std::abs(gap));
        if (err < out.min_error) {
            out.min_error = err;
            out.best_detector = d;
            best = g;
        }
    };

    const double a_step = 1.0 / (n - 1);
    const double theta_step = pi / (n - 1);
    const double phi_step = 2.0 * pi / n;
    for (int ia = 0; ia < n; ++ia) {
        for (int it = 0; it < n; ++it) {
            for (int ip = 0; ip < n; ++ip) {
                visit({ia * a_step, it * theta_step, ip * phi_step});
            }
        }
    }

    // Local refinement: shrink a full coarse cell around the incumbent.
    double ha = a_step;
    double ht = theta_step;
    double hp = phi_step;
    for (int level = 0; level < refine_levels; ++level) {
        const GridPoint center = best;
        constexpr int half = 4;
        for (int ia = -half; ia <= half; ++ia) {
            for (int it = -half; it <= half; ++it) {
                for (int ip = -half; ip <= half; ++ip) {
                    GridPoint g{center.a + ia * ha / half,
                                center.theta + it * ht / half,
                                center.phi + ip * hp / half};
                    g.a = std::clamp(g.a, 0.0, 1.0);
                    g.theta = std::clamp(g.theta, 0.0, pi);
                    visit(g);
                }
            }
        }
        ha /= half;
        ht /= half;
        hp /= half;
    }

    const auto [a, b] = povm_params(out.best_detector);
    out.best_a = a;
    out.best_b = b;
    return out;
}

}  // namespace qsd
