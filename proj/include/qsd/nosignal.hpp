#pragma once

#include <optional>
#include <utility>

#include "qsd/discrimination.hpp"
#include "qsd/scenario.hpp"

namespace qsd {

/// Interval lower bounds above this margin count as strictly positive.
inline constexpr double kSignallingStrictness = 1e-9;

/// Closed interval [lo, hi]; a point value when lo == hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double v) { return {v, v}; }
    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(double v) const { return {lo - v, hi - v}; }
    /// 1 - [lo, hi]
    Interval complement() const { return {1.0 - hi, 1.0 - lo}; }
    bool is_point() const { return lo == hi; }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

/// Input/output table of a detector known only as a black box. Responses to
/// the flag states may be left unspecified, in which case they range over
/// [0, 1] and all derived quantities become intervals.
struct BlackBoxResponse {
    double p0_rho0 = 0.0;
    double p0_rho1 = 0.0;
    std::optional<double> p0_delta_plus;
    std::optional<double> p0_delta_minus;
};

/// One boolean per link of the bound chain; true when the inequality holds
/// (for intervals, when it is satisfiable).
struct ChainChecks {
    bool d00_dominates_main = false;        // D00 >= p P0(rho0)
    bool d11_dominates_main = false;        // D11 >= p P1(rho1)
    bool no_signalling_satisfiable = false; // D00 + D11 <= 1 attainable
    bool success_sum_bounded = false;       // p (P0(rho0) + P1(rho1)) <= 1
    bool error_above_nosignal_floor = false; // e >= 1 - 1/(2p)
    bool error_above_helstrom_floor = false; // e >= 1/2 - ||r0 - r1|| / 4
};

/// Full evaluation of the bound chain for one detector on one scenario.
/// D_i^j is the probability that the detector says i when ensemble j was
/// prepared; gap = D00 + D11 - 1 would be a usable classical channel if it
/// could exceed zero.
struct SignallingReport {
    Interval d00, d10, d01, d11;
    Interval gap;
    double error_rate = 0.0;
    double nosignal_floor = 0.0;
    double helstrom_floor = 0.0;
    ChainChecks checks;
    bool signalling = false;  // gap.lo > kSignallingStrictness
};

/// (D0j, D1j) for a physical detector: weight-averaged Born responses over
/// ensemble j's components.
std::pair<double, double> ensemble_response(const BinaryPovm& d, const Scenario& s, int j);

/// D00 + D11 - 1. Identically zero for physical detectors, since both
/// ensembles average to the same rho_b.
double signalling_gap(const BinaryPovm& d, const Scenario& s);

/// Evaluates the bound chain for a black-box detector, propagating
/// unspecified flag responses as [0, 1] intervals.
SignallingReport blackbox_report(const BlackBoxResponse& b, const Scenario& s);

/// Error floor forced by the no-signalling condition: 1 - 1/(2p), which
/// equals 1/2 - ||r0 - r1|| / 4.
double nosignal_error_bound(const Scenario& s);

}  // namespace qsd
