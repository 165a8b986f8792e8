#include "qsd/steering.hpp"

#include <cmath>
#include <string>

namespace qsd {

namespace {

// Coefficient matrix C with C(i, j) = <i j|psi>; matrix algebra on C stands
// in for 4x4 operations on |psi><psi|.
Mat2 coeff(const JointPureState& psi) {
    return {psi.amp[0], psi.amp[1], psi.amp[2], psi.amp[3]};
}

Mat2 conj_entrywise(const Mat2& m) {
    return {std::conj(m.e00), std::conj(m.e01), std::conj(m.e10), std::conj(m.e11)};
}

// Tr_A[(element x I)|psi><psi|] = C^T element^T conj(C), unnormalized.
Mat2 bob_update(const JointPureState& psi, const Mat2& element) {
    const Mat2 c = coeff(psi);
    return c.transpose() * element.transpose() * conj_entrywise(c);
}

Mat2 inv_sqrtm(const Mat2& h) {
    const EigenPair2 ep = eig2(h);
    Mat2 out{};
    for (int i = 0; i < 2; ++i) {
        out = out + outer(ep.vectors[i]) * (1.0 / std::sqrt(ep.values[i]));
    }
    return out;
}

}  // namespace

double JointPureState::norm() const {
    double s = 0.0;
    for (const Complex& a : amp) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

Mat2 bob_marginal(const JointPureState& psi) {
    const Mat2 c = coeff(psi);
    return c.transpose() * conj_entrywise(c);
}

Mat2 alice_marginal(const JointPureState& psi) {
    const Mat2 c = coeff(psi);
    return c * c.adjoint();
}

JointPureState purify(const Mat2& rho_b) {
    validate_density(rho_b);
    const Mat2 root = sqrtm_psd(rho_b);
    // amp[2i + j] = (sqrt(rho_b))_{ji}
    return {{root.e00, root.e10, root.e01, root.e11}};
}

SteeringMeasurement steering_measurement(const JointPureState& psi,
                                         const std::vector<std::pair<double, Mat2>>& components) {
    const Mat2 avg = bob_marginal(psi);

    Mat2 mix{};
    for (const auto& [weight, state] : components) {
        mix = mix + state * weight;
    }
    const double residual = trace_norm_distance(mix, avg);
    if (residual > kAverageMatchTol) {
        throw MismatchedAverage("components average " + std::to_string(residual) +
                                " away from the purified marginal");
    }

    const EigenPair2 ep = eig2(avg);
    if (ep.values[1] < kSingularAverageCutoff) {
        throw NearSingularAverage("marginal eigenvalue " + std::to_string(ep.values[1]) +
                                  " too small to invert");
    }
    const Mat2 whiten = inv_sqrtm(avg);

    SteeringMeasurement m;
    m.outcomes.reserve(components.size());
    for (const auto& [weight, state] : components) {
        const Mat2 element = (whiten * state * whiten).transpose() * weight;
        m.outcomes.push_back({element, weight, state});
    }
    return m;
}

std::pair<double, Mat2> conditional_state(const JointPureState& psi, const Mat2& element) {
    const Mat2 update = bob_update(psi, element);
    const double prob = update.trace().real();
    if (prob < kZeroProbabilityCutoff) {
        throw ZeroProbability("outcome probability " + std::to_string(prob) +
                              "; conditional state undefined");
    }
    return {prob, update * (1.0 / prob)};
}

}  // namespace qsd
