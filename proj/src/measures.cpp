#include "tangle3/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "tangle3/errors.hpp"

namespace tangle3 {

namespace {

constexpr double kRoundoffFloor = -1e-10;
constexpr double kSupportCutoff = 1e-14;

double clamp_root(double x) { return x < 0.0 && x >= kRoundoffFloor ? 0.0 : std::sqrt(std::max(x, 0.0)); }

}  // namespace

double three_tangle_raw(std::span<const cplx, 8> a) {
    // a[4i + 2j + k] = a_ijk
    const cplx a000 = a[0], a001 = a[1], a010 = a[2], a011 = a[3];
    const cplx a100 = a[4], a101 = a[5], a110 = a[6], a111 = a[7];

    const cplx d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                    a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const cplx d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
                    a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
                    a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
    const cplx d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double three_tangle_pure(const PureState3& psi) {
    return std::min(three_tangle_raw(std::span<const cplx, 8>(psi.amps())), 1.0 + 1e-10);
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw BadDimension("concurrence needs a 4x4 two-qubit matrix");
    const Matrix& m = rho.matrix();

    // sigma_y (x) sigma_y
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Matrix flipped = yy * m.conjugate() * yy;

    // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD and shares its spectrum with rho rho~.
    // Working on the support of rho keeps structural zeros exact, so rank-deficient
    // inputs do not pick up sqrt(roundoff) ~ 1e-8 spurious eigenvalues.
    const auto [rho_values, rho_vectors] = hermitian_eigen(m);
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (rho_values(i) > kSupportCutoff) support.push_back(i);
    }
    const auto r = static_cast<Eigen::Index>(support.size());
    Matrix basis(4, r);
    for (Eigen::Index s = 0; s < r; ++s) {
        basis.col(s) = rho_vectors.col(support[s]) * std::sqrt(rho_values(support[s]));
    }
    Matrix reduced = basis.adjoint() * flipped * basis;
    reduced = 0.5 * (reduced + reduced.adjoint()).eval();
    const Eigen::VectorXd values = r > 0 ? hermitian_eigen(reduced).values : Eigen::VectorXd();

    std::array<double, 4> lambda{};
    for (Eigen::Index i = 0; i < r; ++i) lambda[i] = clamp_root(values(i));
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double one_tangle_pure(const PureState3& psi, Qubit focus) {
    const DensityMatrix reduced = partial_trace(DensityMatrix::projector(psi), focus);
    const Matrix& m = reduced.matrix();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    return std::clamp(4.0 * det, 0.0, 1.0);
}

double ckw_residual(const PureState3& psi) {
    const DensityMatrix rho = DensityMatrix::projector(psi);
    const double c_ab = concurrence(partial_trace_pair(rho, QubitPair::AB));
    const double c_ac = concurrence(partial_trace_pair(rho, QubitPair::AC));
    return one_tangle_pure(psi, Qubit::A) - c_ab * c_ab - c_ac * c_ac;
}

}  // namespace tangle3
