#pragma once

// Test-only generators and reference computations. Nothing here calls into the
// code paths it is used to check.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "tangle3/states.hpp"

namespace tangle3::testing {

inline PureState3 random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Amplitudes a;
    for (auto& x : a) x = cplx(gauss(rng), gauss(rng));
    return PureState3::from_amplitudes(a);
}

using Unitary2 = std::array<cplx, 4>;  // row-major 2x2

inline Unitary2 random_unitary2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = std::acos(std::sqrt(unit(rng)));
    const double a = angle(rng), b = angle(rng), c = angle(rng);
    const cplx e_a = std::polar(1.0, a), e_b = std::polar(1.0, b), e_c = std::polar(1.0, c);
    return {e_a * std::cos(theta), e_b * std::sin(theta), -e_c * std::conj(e_b) * std::sin(theta),
            e_c * std::conj(e_a) * std::cos(theta)};
}

/// (u_a (x) u_b (x) u_c) psi by explicit index summation.
inline PureState3 apply_local(const PureState3& psi, const Unitary2& ua, const Unitary2& ub, const Unitary2& uc) {
    Amplitudes out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        for (int z = 0; z < 2; ++z)
                            out[4 * i + 2 * j + k] += ua[2 * i + x] * ub[2 * j + y] * uc[2 * k + z] * psi.amp(x, y, z);
    return PureState3::from_amplitudes(out);
}

inline PureState3 flip_all(const PureState3& psi) {
    const Unitary2 x{0.0, 1.0, 1.0, 0.0};
    return apply_local(psi, x, x, x);
}

/// Relabels qubits: new amplitude at (i0,i1,i2) is old amplitude at positions perm.
inline PureState3 permute(const PureState3& psi, std::array<int, 3> perm) {
    Amplitudes out{};
    for (int idx = 0; idx < 8; ++idx) {
        const std::array<int, 3> bits{(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
        std::array<int, 3> old{};
        for (int s = 0; s < 3; ++s) old[perm[s]] = bits[s];
        out[idx] = psi.amp(old[0], old[1], old[2]);
    }
    return PureState3::from_amplitudes(out);
}

inline Matrix xxx() {
    Matrix m = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) m(7 - i, i) = 1.0;
    return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace tangle3::testing
