#pragma once

#include <utility>

#include "qsd/qubit.hpp"
#include "qsd/scenario.hpp"

namespace qsd {

/// Two-outcome measurement: PSD elements summing to the identity.
struct BinaryPovm {
    Mat2 element0;
    Mat2 element1;
};

/// Born-rule outcome probabilities of a binary detector on one state.
struct DetectorResponse {
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Throws InvalidState unless both elements are Hermitian with spectrum in
/// [0, 1] and they sum to the identity, all within tolerance.
void validate_povm(const BinaryPovm& d);

/// element0 = a I + b . sigma and element1 = (1 - a) I - b . sigma.
/// Every binary qubit POVM has this form; it is valid iff 0 <= a <= 1 and
/// ||b|| <= min(a, 1 - a). Throws InvalidState otherwise.
BinaryPovm povm_from_params(double a, const BlochVector& b);

/// Inverse of povm_from_params: a = tr(element0)/2, b_k = tr(element0 sigma_k)/2.
std::pair<double, BlochVector> povm_params(const BinaryPovm& d);

/// Minimum average error probability for discriminating rho(r0) from rho(r1)
/// at equal priors: 1/2 - ||rho0 - rho1|| / 4.
double helstrom_bound(const BlochVector& r0, const BlochVector& r1);

/// The projective measurement attaining helstrom_bound: element0 projects
/// onto the non-negative eigenspace of rho0 - rho1 (zero eigenvalues are
/// assigned to element0). Throws DegenerateScenario for coincident inputs.
BinaryPovm helstrom_detector(const BlochVector& r0, const BlochVector& r1);

/// p_i = tr(element_i rho), clamped into [0, 1].
DetectorResponse response(const BinaryPovm& d, const Mat2& rho);

/// Average error probability at equal priors: [P1(rho0) + P0(rho1)] / 2.
double error_rate(const BinaryPovm& d, const BlochVector& r0, const BlochVector& r1);

/// Swaps the outcome labels when P0(rho0) < P0(rho1), fixing the convention
/// that outcome 0 votes for rho0.
BinaryPovm canonicalize(const BinaryPovm& d, const BlochVector& r0, const BlochVector& r1);

}  // namespace qsd
