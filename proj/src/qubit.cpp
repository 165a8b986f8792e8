#include "qsd/qubit.hpp"

#include <algorithm>
#include <string>

namespace qsd {

namespace {

double sq(double v) { return v * v; }

}  // namespace

double Mat2::hermiticity_error() const {
    double err = std::abs(e10 - std::conj(e01));
    err = std::max(err, std::abs(e00.imag()));
    err = std::max(err, std::abs(e11.imag()));
    return err;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    double d = std::abs(a.e00 - b.e00);
    d = std::max(d, std::abs(a.e01 - b.e01));
    d = std::max(d, std::abs(a.e10 - b.e10));
    d = std::max(d, std::abs(a.e11 - b.e11));
    return d;
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Complex inner(const Vec2& u, const Vec2& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

Mat2 outer(const Vec2& v) {
    return {v[0] * std::conj(v[0]), v[0] * std::conj(v[1]),
            v[1] * std::conj(v[0]), v[1] * std::conj(v[1])};
}

void validate_bloch(const BlochVector& v) {
    const double n = v.norm();
    if (!(n <= 1.0 + kAlgebraTol)) {
        throw BallViolation("Bloch vector norm " + std::to_string(n) +
                            " exceeds the unit ball");
    }
}

void validate_density(const Mat2& rho) {
    if (rho.hermiticity_error() > kAlgebraTol) {
        throw InvalidState("matrix is not Hermitian within tolerance");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > kAlgebraTol) {
        throw InvalidState("matrix trace differs from one");
    }
    const EigenPair2 ep = eig2(rho);
    if (ep.values[1] < kPsdFloor) {
        throw InvalidState("matrix has eigenvalue " + std::to_string(ep.values[1]) +
                           " below the PSD floor");
    }
}

Mat2 bloch_to_density(const BlochVector& v) {
    validate_bloch(v);
    return {Complex(0.5 * (1.0 + v.z)), Complex(0.5 * v.x, -0.5 * v.y),
            Complex(0.5 * v.x, 0.5 * v.y), Complex(0.5 * (1.0 - v.z))};
}

BlochVector density_to_bloch(const Mat2& rho) {
    validate_density(rho);
    return {(rho.e01 + rho.e10).real(),
            (Complex(0.0, 1.0) * (rho.e01 - rho.e10)).real(),
            (rho.e00 - rho.e11).real()};
}

EigenPair2 eig2(const Mat2& h) {
    // Work with the Hermitian part: real diagonal, averaged off-diagonal.
    const double a = h.e00.real();
    const double d = h.e11.real();
    const Complex b = 0.5 * (h.e01 + std::conj(h.e10));

    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double disc = std::hypot(half_gap, std::abs(b));

    EigenPair2 out;
    out.values = {mean + disc, mean - disc};

    if (disc == 0.0) {
        out.vectors = {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
        return out;
    }

    // Two algebraically exact null vectors of (H - lambda0 I); take the
    // better-conditioned one.
    const double l0 = out.values[0];
    Vec2 v = (sq(l0 - d) >= sq(l0 - a)) ? Vec2{Complex(l0 - d), std::conj(b)}
                                        : Vec2{b, Complex(l0 - a)};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;

    // Fix the global phase: largest-magnitude component real and positive.
    const int k = (std::norm(v[0]) >= std::norm(v[1])) ? 0 : 1;
    const double mag = std::abs(v[k]);
    if (mag > 0.0) {
        const Complex phase = std::conj(v[k]) / mag;
        v[0] *= phase;
        v[1] *= phase;
    }

    out.vectors[0] = v;
    out.vectors[1] = {-std::conj(v[1]), std::conj(v[0])};
    return out;
}

double trace_norm(const Mat2& a) {
    const Mat2 gram = a.adjoint() * a;
    const EigenPair2 ep = eig2(gram);
    const double s0 = std::sqrt(std::max(ep.values[0], 0.0));
    const double s1 = std::sqrt(std::max(ep.values[1], 0.0));
    return s0 + s1;
}

double trace_norm_distance(const Mat2& rho, const Mat2& sigma) {
    return trace_norm(rho - sigma);
}

Mat2 sqrtm_psd(const Mat2& h) {
    const EigenPair2 ep = eig2(h);
    const double r0 = std::sqrt(std::max(ep.values[0], 0.0));
    const double r1 = std::sqrt(std::max(ep.values[1], 0.0));
    return outer(ep.vectors[0]) * r0 + outer(ep.vectors[1]) * r1;
}

}  // namespace qsd
