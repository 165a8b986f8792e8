#include "qsd/discrimination.hpp"

#include <algorithm>
#include <string>

namespace qsd {

namespace {

double real_trace_product(const Mat2& a, const Mat2& b) {
    return (a.e00 * b.e00 + a.e01 * b.e10 + a.e10 * b.e01 + a.e11 * b.e11).real();
}

void check_element(const Mat2& e, const char* label) {
    if (e.hermiticity_error() > kAlgebraTol) {
        throw InvalidState(std::string(label) + " is not Hermitian within tolerance");
    }
    const EigenPair2 ep = eig2(e);
    if (ep.values[1] < kPsdFloor || ep.values[0] > 1.0 + kAlgebraTol) {
        throw InvalidState(std::string(label) + " has spectrum outside [0, 1]");
    }
}

}  // namespace

void validate_povm(const BinaryPovm& d) {
    check_element(d.element0, "element0");
    check_element(d.element1, "element1");
    if (max_abs_diff(d.element0 + d.element1, Mat2::identity()) > kAlgebraTol) {
        throw InvalidState("POVM elements do not sum to the identity");
    }
}

BinaryPovm povm_from_params(double a, const BlochVector& b) {
    const double bn = b.norm();
    if (a < -kAlgebraTol || a > 1.0 + kAlgebraTol ||
        bn > std::min(a, 1.0 - a) + kAlgebraTol) {
        throw InvalidState("POVM parameters outside the valid region: a = " +
                           std::to_string(a) + ", ||b|| = " + std::to_string(bn));
    }
    const Mat2 shift{Complex(b.z), Complex(b.x, -b.y), Complex(b.x, b.y), Complex(-b.z)};
    return {Mat2::identity() * a + shift, Mat2::identity() * (1.0 - a) - shift};
}

std::pair<double, BlochVector> povm_params(const BinaryPovm& d) {
    const Mat2& e = d.element0;
    const double a = 0.5 * e.trace().real();
    const BlochVector b{0.5 * (e.e01 + e.e10).real(),
                        0.5 * (Complex(0.0, 1.0) * (e.e01 - e.e10)).real(),
                        0.5 * (e.e00 - e.e11).real()};
    return {a, b};
}

double helstrom_bound(const BlochVector& r0, const BlochVector& r1) {
    const double dist = trace_norm_distance(bloch_to_density(r0), bloch_to_density(r1));
    const double bound = 0.5 - 0.25 * dist;
    return (bound < 0.0 && bound > kPsdFloor) ? 0.0 : bound;
}

BinaryPovm helstrom_detector(const BlochVector& r0, const BlochVector& r1) {
    if ((r0 - r1).norm() < kDegenerateCutoff) {
        throw DegenerateScenario("coincident states; every detector guesses blindly");
    }
    const Mat2 gap = bloch_to_density(r0) - bloch_to_density(r1);
    const EigenPair2 ep = eig2(gap);

    Mat2 element0{};
    for (int i = 0; i < 2; ++i) {
        if (ep.values[i] >= 0.0) {
            element0 = element0 + outer(ep.vectors[i]);
        }
    }
    return {element0, Mat2::identity() - element0};
}

DetectorResponse response(const BinaryPovm& d, const Mat2& rho) {
    return {std::clamp(real_trace_product(d.element0, rho), 0.0, 1.0),
            std::clamp(real_trace_product(d.element1, rho), 0.0, 1.0)};
}

double error_rate(const BinaryPovm& d, const BlochVector& r0, const BlochVector& r1) {
    const double miss0 = response(d, bloch_to_density(r0)).p1;
    const double miss1 = response(d, bloch_to_density(r1)).p0;
    return 0.5 * (miss0 + miss1);
}

BinaryPovm canonicalize(const BinaryPovm& d, const BlochVector& r0, const BlochVector& r1) {
    const double vote0 = response(d, bloch_to_density(r0)).p0;
    const double vote1 = response(d, bloch_to_density(r1)).p0;
    if (vote0 < vote1) {
        return {d.element1, d.element0};
    }
    return d;
}

}  // namespace qsd
