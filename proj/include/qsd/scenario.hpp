#pragma once

#include <utility>
#include <vector>

#include "qsd/qubit.hpp"

namespace qsd {

/// Pairs of Bloch vectors closer than this have no defined flag direction.
inline constexpr double kDegenerateCutoff = 1e-9;

/// The equal-average two-ensemble construction. Mixing rho(r0) with flag
/// state |delta><delta| at weight p, or rho(r1) with |-delta><-delta| at the
/// same weight, produces one common average rho(r_b).
struct Scenario {
    BlochVector r0;
    BlochVector r1;
    double p = 0.0;
    BlochVector delta_hat;  // unit norm; the antipode -delta_hat is the other flag
    BlochVector r_b;
};

struct WeightedPure {
    double weight = 0.0;
    BlochVector state;  // unit norm
};

/// Convex pure-state decomposition; weights sum to one.
using PureDecomposition = std::vector<WeightedPure>;

/// Builds the scenario for a pair of states to be discriminated.
/// p = 2 / (||r0 - r1|| + 2) is the unique weight making the two ensemble
/// averages coincide; delta_hat is the unit vector along r1 - r0.
/// Throws DegenerateScenario when ||r0 - r1|| < kDegenerateCutoff.
Scenario build_scenario(const BlochVector& r0, const BlochVector& r1);

/// Trace-norm distance between the two ensemble averages; ~0 for any
/// build_scenario output.
double verify_ensemble_equality(const Scenario& s);

/// Flag state of ensemble j: rho(delta_hat) for j = 0, rho(-delta_hat) for j = 1.
Mat2 flag_state(const Scenario& s, int j);

/// Weighted components of ensemble j: {(p, rho_j), (1 - p, flag_j)}.
std::vector<std::pair<double, Mat2>> ensemble_components(const Scenario& s, int j);

/// Average of ensemble j's weighted components.
Mat2 ensemble_average(const Scenario& s, int j);

/// Spectral decomposition into pure states, ordered by descending weight with
/// ties broken by descending lexicographic Bloch coordinates. Terms with
/// weight below kAlgebraTol are dropped; a pure input yields a single term.
PureDecomposition pure_decomposition(const Mat2& rho);

}  // namespace qsd
