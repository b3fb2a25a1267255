#pragma once

#include <span>

#include "tangle3/states.hpp"

namespace tangle3 {

/// Three-tangle 4|d1 - 2 d2 + 4 d3| of a three-qubit state (modulus of Cayley's
/// hyperdeterminant).
double three_tangle_pure(const PureState3& psi);

/// Same polynomial on raw (possibly unnormalized) amplitudes; homogeneous of
/// degree 4 in the amplitude vector.
double three_tangle_raw(std::span<const cplx, 8> a);

/// Wootters concurrence of a two-qubit state. Throws BadDimension unless 4x4.
double concurrence(const DensityMatrix& rho);

/// 4 det(rho_focus) for the reduced state of one qubit.
double one_tangle_pure(const PureState3& psi, Qubit focus);

/// 4 det(rho_A) - C_AB^2 - C_AC^2, which equals the three-tangle for pure states.
double ckw_residual(const PureState3& psi);

}  // namespace tangle3
