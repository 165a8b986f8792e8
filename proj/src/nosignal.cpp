#include "qsd/nosignal.hpp"

namespace qsd {

namespace {

Interval flag_interval(const std::optional<double>& p) {
    return p ? Interval::point(*p) : Interval{0.0, 1.0};
}

Interval scale_shift(double weight, double base, const Interval& flag, double flag_weight) {
    return {weight * base + flag_weight * flag.lo, weight * base + flag_weight * flag.hi};
}

}  // namespace

std::pair<double, double> ensemble_response(const BinaryPovm& d, const Scenario& s, int j) {
    double d0 = 0.0;
    double d1 = 0.0;
    for (const auto& [weight, state] : ensemble_components(s, j)) {
        const DetectorResponse r = response(d, state);
        d0 += weight * r.p0;
        d1 += weight * r.p1;
    }
    return {d0, d1};
}

double signalling_gap(const BinaryPovm& d, const Scenario& s) {
    const double d00 = ensemble_response(d, s, 0).first;
    const double d11 = ensemble_response(d, s, 1).second;
    return d00 + d11 - 1.0;
}

SignallingReport blackbox_report(const BlackBoxResponse& b, const Scenario& s) {
    const double p = s.p;
    const double p0_rho0 = b.p0_rho0;
    const double p1_rho1 = 1.0 - b.p0_rho1;

    SignallingReport r;
    r.d00 = scale_shift(p, p0_rho0, flag_interval(b.p0_delta_plus), 1.0 - p);
    r.d10 = r.d00.complement();
    r.d01 = scale_shift(p, b.p0_rho1, flag_interval(b.p0_delta_minus), 1.0 - p);
    r.d11 = r.d01.complement();
    r.gap = (r.d00 + r.d11) - 1.0;

    r.error_rate = 0.5 * ((1.0 - p0_rho0) + b.p0_rho1);
    r.nosignal_floor = nosignal_error_bound(s);
    r.helstrom_floor = helstrom_bound(s.r0, s.r1);

    r.checks.d00_dominates_main = r.d00.lo >= p * p0_rho0 - kAlgebraTol;
    r.checks.d11_dominates_main = r.d11.lo >= p * p1_rho1 - kAlgebraTol;
    r.checks.no_signalling_satisfiable = r.gap.lo <= kSignallingStrictness;
    r.checks.success_sum_bounded = p * (p0_rho0 + p1_rho1) <= 1.0 + kAlgebraTol;
    r.checks.error_above_nosignal_floor = r.error_rate >= r.nosignal_floor - kAlgebraTol;
    r.checks.error_above_helstrom_floor = r.error_rate >= r.helstrom_floor - kAlgebraTol;
    r.signalling = r.gap.lo > kSignallingStrictness;
    return r;
}

double nosignal_error_bound(const Scenario& s) {
    return 1.0 - 1.0 / (2.0 * s.p);
}

}  // namespace qsd
