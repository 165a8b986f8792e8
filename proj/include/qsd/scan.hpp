#pragma once

#include <cstdint>

#include "qsd/discrimination.hpp"
#include "qsd/nosignal.hpp"
#include "qsd/scenario.hpp"

namespace qsd {

struct ScanResult {
    double min_error = 0.0;
    double best_a = 0.0;
    BlochVector best_b;  // element0 of the arg-min detector is best_a I + best_b . sigma
    BinaryPovm best_detector;
    double max_abs_gap = 0.0;
    std::uint64_t detectors_scanned = 0;
};

/// Deterministic sweep over binary POVMs element0 = a I + ||b|| b_hat . sigma
/// with n grid points per axis (a in [0, 1], polar and azimuthal angles of
/// b_hat) at the extremal magnitude ||b|| = min(a, 1 - a). Interior detectors
/// are convex mixtures of swept ones and the error rate is affine in
/// element0, so the sweep bounds the full set. After the sweep the incumbent
/// minimum is polished by refine_levels rounds of local grid refinement.
/// Reports the minimum error rate, the arg-min detector, and the largest
/// |signalling gap| seen. Requires n >= 8.
ScanResult scan(const Scenario& s, int n, int refine_levels = 3);

}  // namespace qsd
