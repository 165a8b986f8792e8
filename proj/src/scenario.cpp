#include "qsd/scenario.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace qsd {

Scenario build_scenario(const BlochVector& r0, const BlochVector& r1) {
    validate_bloch(r0);
    validate_bloch(r1);

    const BlochVector diff = r1 - r0;
    const double sep = diff.norm();
    if (sep < kDegenerateCutoff) {
        throw DegenerateScenario("states separated by " + std::to_string(sep) +
                                 "; flag direction undefined");
    }

    Scenario s;
    s.r0 = r0;
    s.r1 = r1;
    s.p = 2.0 / (sep + 2.0);
    s.delta_hat = diff * (1.0 / sep);
    s.r_b = s.p * r0 + (1.0 - s.p) * s.delta_hat;
    return s;
}

double verify_ensemble_equality(const Scenario& s) {
    return trace_norm_distance(ensemble_average(s, 0), ensemble_average(s, 1));
}

Mat2 flag_state(const Scenario& s, int j) {
    return bloch_to_density(j == 0 ? s.delta_hat : -s.delta_hat);
}

std::vector<std::pair<double, Mat2>> ensemble_components(const Scenario& s, int j) {
    const BlochVector& main = (j == 0) ? s.r0 : s.r1;
    return {{s.p, bloch_to_density(main)}, {1.0 - s.p, flag_state(s, j)}};
}

Mat2 ensemble_average(const Scenario& s, int j) {
    Mat2 avg{};
    for (const auto& [weight, state] : ensemble_components(s, j)) {
        avg = avg + state * weight;
    }
    return avg;
}

PureDecomposition pure_decomposition(const Mat2& rho) {
    validate_density(rho);
    const EigenPair2 ep = eig2(rho);

    PureDecomposition terms;
    for (int i = 0; i < 2; ++i) {
        if (ep.values[i] < kAlgebraTol) {
            continue;
        }
        terms.push_back({ep.values[i], density_to_bloch(outer(ep.vectors[i]))});
    }

    std::sort(terms.begin(), terms.end(), [](const WeightedPure& a, const WeightedPure& b) {
        return std::tie(a.weight, a.state.x, a.state.y, a.state.z) >
               std::tie(b.weight, b.state.x, b.state.y, b.state.z);
    });
    return terms;
}

}  // namespace qsd
