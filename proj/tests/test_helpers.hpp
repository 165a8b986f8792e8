#pragma once

#include <array>
#include <cmath>
#include <random>

#include "qsd/discrimination.hpp"
#include "qsd/qubit.hpp"
#include "qsd/scenario.hpp"

namespace qsd::testing {

using Rng = std::mt19937_64;

inline BlochVector random_unit(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    BlochVector v{gauss(rng), gauss(rng), gauss(rng)};
    return v.unit();
}

inline BlochVector random_ball(Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return random_unit(rng) * std::cbrt(uni(rng));
}

inline Mat2 random_density(Rng& rng) { return bloch_to_density(random_ball(rng)); }

inline Mat2 random_hermitian(Rng& rng, double scale = 10.0) {
    std::uniform_real_distribution<double> uni(-scale, scale);
    const double a = uni(rng);
    const double d = uni(rng);
    const Complex b{uni(rng), uni(rng)};
    return {Complex(a), b, std::conj(b), Complex(d)};
}

inline BinaryPovm random_povm(Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double a = uni(rng);
    const double mag = uni(rng) * std::min(a, 1.0 - a);
    return povm_from_params(a, random_unit(rng) * mag);
}

inline Scenario random_scenario(Rng& rng, double min_sep = 1e-6) {
    for (;;) {
        const BlochVector r0 = random_ball(rng);
        const BlochVector r1 = random_ball(rng);
        if ((r0 - r1).norm() >= min_sep) {
            return build_scenario(r0, r1);
        }
    }
}

using Rotation = std::array<std::array<double, 3>, 3>;

inline Rotation random_rotation(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

inline BlochVector apply_rotation(const Rotation& r, const BlochVector& v) {
    return {r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
}

// SU(2) element cos(t) I - i sin(t) n . sigma.
inline Mat2 random_unitary(Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);
    const double t = uni(rng);
    const BlochVector n = random_unit(rng);
    const Complex mi{0.0, -std::sin(t)};
    const Mat2 pauli_part{Complex(n.z), Complex(n.x, -n.y), Complex(n.x, n.y), Complex(-n.z)};
    return Mat2::identity() * std::cos(t) + pauli_part * mi;
}

}  // namespace qsd::testing
