#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace tangle3 {

using cplx = std::complex<double>;
using Amplitudes = std::array<cplx, 8>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Normalized three-qubit pure state. Amplitude a_ijk lives at index 4i + 2j + k
/// (qubit A is the most significant bit).
class PureState3 {
public:
    /// Normalizes `amps`; throws ZeroVector when the norm is <= 1e-12.
    static PureState3 from_amplitudes(const Amplitudes& amps);

    const Amplitudes& amps() const noexcept { return amps_; }
    cplx operator[](std::size_t index) const { return amps_[index]; }
    cplx amp(int i, int j, int k) const { return amps_[4 * i + 2 * j + k]; }

    Vector vector() const;

private:
    explicit PureState3(const Amplitudes& amps) : amps_(amps) {}

    Amplitudes amps_{};
};

PureState3 pure_from_amplitudes(const Amplitudes& amps);

/// <lhs|rhs>
cplx inner(const PureState3& lhs, const PureState3& rhs);

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 3, 4 or 8.
/// Construction validates the invariants and throws BadDimension / BadParams.
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix& m);

    static DensityMatrix projector(const PureState3& psi);

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

private:
    Matrix m_;
};

struct EnsembleMember {
    double weight;
    PureState3 state;
};

/// Weighted pure-state ensemble; weights are nonnegative and sum to one.
class Ensemble {
public:
    Ensemble() = default;
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const EnsembleMember& operator[](std::size_t i) const { return members_[i]; }

private:
    std::vector<EnsembleMember> members_;
};

DensityMatrix density_from_ensemble(const Ensemble& ensemble);

enum class Qubit { A, B, C };
enum class QubitPair { AB, AC, BC };

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);
DensityMatrix partial_trace_pair(const DensityMatrix& rho, QubitPair keep);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Shared Hermitian linear algebra.

struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns
};

HermitianEigen hermitian_eigen(const Matrix& h);

/// Number of eigenvalues above `cutoff`.
int numerical_rank(const Matrix& h, double cutoff = 1e-12);

}  // namespace tangle3
