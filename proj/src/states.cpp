#include "tangle3/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangle3/errors.hpp"

namespace tangle3 {

namespace {

constexpr double kZeroNorm = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kWeightSumTol = 1e-12;

bool supported_dim(Eigen::Index d) { return d == 2 || d == 3 || d == 4 || d == 8; }

// Bit position of each qubit inside a basis index (A is the most significant).
constexpr int bit_of(int qubit) { return 2 - qubit; }

// Reduced density matrix on the listed qubits (ascending A < B < C).
Matrix reduce(const Matrix& rho, const std::vector<int>& kept) {
    std::vector<int> traced;
    for (int q = 0; q < 3; ++q) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) traced.push_back(q);
    }
    const int kdim = 1 << kept.size();
    const int tdim = 1 << traced.size();

    auto compose = [&](int kept_bits, int traced_bits) {
        int index = 0;
        for (std::size_t s = 0; s < kept.size(); ++s) {
            const int bit = (kept_bits >> (kept.size() - 1 - s)) & 1;
            index |= bit << bit_of(kept[s]);
        }
        for (std::size_t s = 0; s < traced.size(); ++s) {
            const int bit = (traced_bits >> (traced.size() - 1 - s)) & 1;
            index |= bit << bit_of(traced[s]);
        }
        return index;
    };

    Matrix out = Matrix::Zero(kdim, kdim);
    for (int r = 0; r < kdim; ++r) {
        for (int c = 0; c < kdim; ++c) {
            cplx sum = 0.0;
            for (int t = 0; t < tdim; ++t) sum += rho(compose(r, t), compose(c, t));
            out(r, c) = sum;
        }
    }
    return out;
}

void require_dim8(const DensityMatrix& rho) {
    if (rho.dim() != 8) {
        throw BadDimension("partial trace needs an 8x8 three-qubit matrix, got " +
                           std::to_string(rho.dim()));
    }
}

}  // namespace

PureState3 PureState3::from_amplitudes(const Amplitudes& amps) {
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (!(norm > kZeroNorm)) throw ZeroVector("amplitude vector has zero norm");
    Amplitudes normalized;
    for (std::size_t i = 0; i < amps.size(); ++i) normalized[i] = amps[i] / norm;
    return PureState3(normalized);
}

Vector PureState3::vector() const {
    Vector v(8);
    for (int i = 0; i < 8; ++i) v(i) = amps_[i];
    return v;
}

PureState3 pure_from_amplitudes(const Amplitudes& amps) { return PureState3::from_amplitudes(amps); }

cplx inner(const PureState3& lhs, const PureState3& rhs) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) sum += std::conj(lhs[i]) * rhs[i];
    return sum;
}

DensityMatrix::DensityMatrix(const Matrix& m) {
    if (m.rows() != m.cols() || !supported_dim(m.rows())) {
        throw BadDimension("density matrix must be square with dimension 2, 3, 4 or 8");
    }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol) {
        throw BadParams("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    Matrix h = 0.5 * (m + m.adjoint());
    const double trace = h.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        throw BadParams("density matrix trace is " + std::to_string(trace));
    }
    const double lowest = hermitian_eigen(h).values.minCoeff();
    if (lowest < kEigenFloor) {
        throw BadParams("density matrix has negative eigenvalue " + std::to_string(lowest));
    }
    m_ = std::move(h);
}

DensityMatrix DensityMatrix::projector(const PureState3& psi) {
    const Vector v = psi.vector();
    return DensityMatrix(v * v.adjoint());
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) throw EmptyInput("ensemble has no members");
    double total = 0.0;
    for (const auto& m : members_) {
        if (m.weight < 0.0 || m.weight > 1.0 + kWeightSumTol) {
            throw BadParams("ensemble weight out of [0, 1]: " + std::to_string(m.weight));
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > kWeightSumTol) {
        throw BadParams("ensemble weights sum to " + std::to_string(total));
    }
}

DensityMatrix density_from_ensemble(const Ensemble& ensemble) {
    Matrix rho = Matrix::Zero(8, 8);
    for (const auto& [weight, state] : ensemble) {
        const Vector v = state.vector();
        rho.noalias() += weight * (v * v.adjoint());
    }
    return DensityMatrix(rho);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep) {
    require_dim8(rho);
    return DensityMatrix(reduce(rho.matrix(), {static_cast<int>(keep)}));
}

DensityMatrix partial_trace_pair(const DensityMatrix& rho, QubitPair keep) {
    require_dim8(rho);
    switch (keep) {
        case QubitPair::AB: return DensityMatrix(reduce(rho.matrix(), {0, 1}));
        case QubitPair::AC: return DensityMatrix(reduce(rho.matrix(), {0, 2}));
        case QubitPair::BC: return DensityMatrix(reduce(rho.matrix(), {1, 2}));
    }
    throw BadParams("unknown qubit pair");
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw BadDimension("trace_distance: dimension mismatch");
    const Eigen::VectorXd eig = hermitian_eigen(rho.matrix() - sigma.matrix()).values;
    return 0.5 * eig.cwiseAbs().sum();
}

HermitianEigen hermitian_eigen(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

int numerical_rank(const Matrix& h, double cutoff) {
    const Eigen::VectorXd values = hermitian_eigen(h).values;
    return static_cast<int>((values.array() > cutoff).count());
}

}  // namespace tangle3
