#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qsd/qubit.hpp"

namespace qsd {

/// Component averages must match the purified marginal within this tolerance.
inline constexpr double kAverageMatchTol = 1e-10;

/// Smallest average eigenvalue for which the steering inverse is formed.
inline constexpr double kSingularAverageCutoff = 1e-10;

/// Outcome probabilities below this leave the conditional state undefined.
inline constexpr double kZeroProbabilityCutoff = 1e-14;

/// Pure state of a two-qubit Alice (x) Bob system.
/// Amplitude of |alice>|bob> sits at amp[2 * alice + bob].
struct JointPureState {
    std::array<Complex, 4> amp{};

    Complex at(int alice, int bob) const { return amp[2 * alice + bob]; }
    double norm() const;
};

/// Partial traces in the computational basis.
Mat2 bob_marginal(const JointPureState& psi);
Mat2 alice_marginal(const JointPureState& psi);

/// One outcome of a steering measurement: Alice's POVM element together with
/// the weight and Bob state it is meant to prepare.
struct SteeringOutcome {
    Mat2 element;
    double target_weight = 0.0;
    Mat2 target_state;
};

struct SteeringMeasurement {
    std::vector<SteeringOutcome> outcomes;
};

/// Canonical purification |psi> = sum_i |i>_A (sqrt(rho_b)|i>)_B.
/// Bob's marginal is rho_b; Alice's is its computational-basis transpose.
JointPureState purify(const Mat2& rho_b);

/// Alice's measurement realizing the given decomposition of Bob's marginal:
/// element_k = w_k (rho_b^{-1/2} s_k rho_b^{-1/2})^T, transposed in the
/// computational basis. Outcome k then occurs with probability w_k and leaves
/// Bob in s_k. Throws MismatchedAverage when the components do not sum to the
/// marginal, NearSingularAverage when the marginal is too close to pure.
SteeringMeasurement steering_measurement(const JointPureState& psi,
                                         const std::vector<std::pair<double, Mat2>>& components);

/// Measurement update for Alice's element on the joint state: the outcome
/// probability <psi|(element x I)|psi> and Bob's conditional state.
/// Throws ZeroProbability when the probability vanishes.
std::pair<double, Mat2> conditional_state(const JointPureState& psi, const Mat2& element);

}  // namespace qsd
