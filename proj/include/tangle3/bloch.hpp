#pragma once

#include <array>
#include <span>
#include <vector>

#include "tangle3/states.hpp"

namespace tangle3 {

/// Gell-Mann coordinates of a qutrit state: sigma = (I + sqrt3 n.lambda) / 3.
struct BlochVector8 {
    std::array<double, 8> n{};

    double norm() const;
    double operator[](std::size_t i) const { return n[i]; }
};

/// Standard Gell-Mann matrices lambda_1..lambda_8 (index 0..7), Tr(l_i l_j) = 2 delta_ij.
const std::array<Matrix, 8>& gell_mann();

/// <e_i|rho|e_j> in the ordered basis (GHZ, W, W~). Throws OutOfSpan when more
/// than 1e-10 of the trace lies outside the span.
DensityMatrix qutrit_project(const DensityMatrix& rho);

BlochVector8 bloch_vector(const DensityMatrix& qutrit);

/// Inverse map; throws BadParams when the vector is not a physical qutrit state.
DensityMatrix qutrit_from_bloch(const BlochVector8& v);

/// Images of W, W~ and the three symmetric Z states at p0, in that order. All
/// five are pure states of zero three-tangle.
std::array<BlochVector8, 5> zero_tangle_vertices(double n, double p0);

struct Membership {
    bool inside;
    std::vector<double> weights;  // convex weights, one per vertex
    double residual;              // |sum w_i v_i - v|
};

/// Closest point of the convex hull of `vertices` to `v` (simplex-constrained
/// least squares). `inside` is true iff the residual is <= tol.
Membership in_zero_polyhedron(const BlochVector8& v, std::span<const BlochVector8> vertices,
                              double tol = 1e-8);

}  // namespace tangle3
