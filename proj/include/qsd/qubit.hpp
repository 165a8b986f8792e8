#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qsd/errors.hpp"

namespace qsd {

using Complex = std::complex<double>;

/// Absolute tolerance for closed-form algebraic identities in double precision.
inline constexpr double kAlgebraTol = 1e-12;

/// Eigenvalues above this floor count as non-negative.
inline constexpr double kPsdFloor = -1e-12;

/// Real 3-vector of Bloch-sphere coordinates. States live in the closed unit
/// ball; pure states sit on the unit sphere.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }

    BlochVector unit() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline BlochVector operator*(double s, const BlochVector& v) { return v * s; }

/// 2x2 complex matrix, row-major.
struct Mat2 {
    Complex e00{};
    Complex e01{};
    Complex e10{};
    Complex e11{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diagonal(Complex a, Complex d) { return {a, 0.0, 0.0, d}; }

    Complex trace() const { return e00 + e11; }
    Complex det() const { return e00 * e11 - e01 * e10; }
    Mat2 adjoint() const { return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)}; }
    Mat2 transpose() const { return {e00, e10, e01, e11}; }

    Mat2 operator+(const Mat2& o) const {
        return {e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11};
    }
    Mat2 operator-(const Mat2& o) const {
        return {e00 - o.e00, e01 - o.e01, e10 - o.e10, e11 - o.e11};
    }
    Mat2 operator*(const Mat2& o) const {
        return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
    }
    Mat2 operator*(Complex s) const { return {e00 * s, e01 * s, e10 * s, e11 * s}; }
    Mat2 operator*(double s) const { return {e00 * s, e01 * s, e10 * s, e11 * s}; }

    /// Largest entrywise deviation from H = H^dagger.
    double hermiticity_error() const;
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

/// A qubit density matrix is a Mat2 satisfying validate_density.
using DensityMatrix = Mat2;

/// Largest entrywise absolute difference.
double max_abs_diff(const Mat2& a, const Mat2& b);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Complex 2-vector (qubit ket).
using Vec2 = std::array<Complex, 2>;

/// <u|v>
Complex inner(const Vec2& u, const Vec2& v);

/// |v><v|
Mat2 outer(const Vec2& v);

/// Spectral data of a Hermitian 2x2 matrix: eigenvalues in descending order
/// with matching orthonormal eigenvectors.
struct EigenPair2 {
    std::array<double, 2> values{};
    std::array<Vec2, 2> vectors{};
};

/// Throws BallViolation when ||v|| exceeds 1 beyond tolerance.
void validate_bloch(const BlochVector& v);

/// Throws InvalidState unless rho is Hermitian, unit-trace, and PSD within tolerance.
void validate_density(const Mat2& rho);

/// rho(v) = (I + v . sigma) / 2. Eigenvalues are (1 +- ||v||) / 2.
Mat2 bloch_to_density(const BlochVector& v);

/// Inverse of bloch_to_density: v_k = tr(rho sigma_k).
BlochVector density_to_bloch(const Mat2& rho);

/// Closed-form eigendecomposition of the Hermitian part of h:
/// eigenvalues tr/2 +- sqrt((tr/2)^2 - det). A matrix proportional to the
/// identity returns the computational basis.
EigenPair2 eig2(const Mat2& h);

/// tr sqrt(A^dagger A); the sum of singular values. For Hermitian arguments
/// this is the sum of absolute eigenvalues.
double trace_norm(const Mat2& a);

/// trace_norm(rho - sigma). Equals the Euclidean distance of the Bloch
/// vectors when both arguments are qubit states.
double trace_norm_distance(const Mat2& rho, const Mat2& sigma);

/// Spectral square root of a PSD Hermitian matrix; eigenvalues inside the
/// PSD floor are clamped to zero.
Mat2 sqrtm_psd(const Mat2& h);

}  // namespace qsd
