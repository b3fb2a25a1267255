#include "tangle3/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tangle3/errors.hpp"
#include "tangle3/family.hpp"

namespace tangle3 {

namespace {

constexpr double kLeakageTol = 1e-10;
constexpr int kMaxIterations = 1000;
constexpr double kWolfeTol = 1e-15;
constexpr double kSupportCutoff = 1e-12;

const cplx I{0.0, 1.0};

std::array<Matrix, 8> make_gell_mann() {
    std::array<Matrix, 8> l;
    for (auto& m : l) m = Matrix::Zero(3, 3);
    l[0](0, 1) = 1.0;
    l[0](1, 0) = 1.0;
    l[1](0, 1) = -I;
    l[1](1, 0) = I;
    l[2](0, 0) = 1.0;
    l[2](1, 1) = -1.0;
    l[3](0, 2) = 1.0;
    l[3](2, 0) = 1.0;
    l[4](0, 2) = -I;
    l[4](2, 0) = I;
    l[5](1, 2) = 1.0;
    l[5](2, 1) = 1.0;
    l[6](1, 2) = -I;
    l[6](2, 1) = I;
    const double s = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = s;
    l[7](1, 1) = s;
    l[7](2, 2) = -2.0 * s;
    return l;
}

// Minimum-norm point of the affine hull of the columns of p listed in `set`:
// coefficients summing to one.
Eigen::VectorXd affine_min_norm(const Eigen::MatrixXd& p, const std::vector<Eigen::Index>& set) {
    const auto s = static_cast<Eigen::Index>(set.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
    for (Eigen::Index a = 0; a < s; ++a) {
        for (Eigen::Index b = 0; b < s; ++b) kkt(a, b) = p.col(set[a]).dot(p.col(set[b]));
        kkt(a, s) = 1.0;
        kkt(s, a) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs(s) = 1.0;
    return kkt.completeOrthogonalDecomposition().solve(rhs).head(s);
}

// Wolfe's algorithm for the point of conv{p_i} nearest the origin. Returns the
// convex weights.
Eigen::VectorXd wolfe_min_norm(const Eigen::MatrixXd& p) {
    const Eigen::Index k = p.cols();
    double scale = 0.0;
    Eigen::Index start = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
        scale = std::max(scale, p.col(i).squaredNorm());
        if (p.col(i).squaredNorm() < p.col(start).squaredNorm()) start = i;
    }
    const double eps = kWolfeTol * std::max(scale, 1e-300);

    std::vector<Eigen::Index> set{start};
    std::vector<double> lambda{1.0};
    Eigen::VectorXd x = p.col(start);
    for (int major = 0; major < kMaxIterations; ++major) {
        Eigen::Index j = 0;
        for (Eigen::Index i = 1; i < k; ++i) {
            if (x.dot(p.col(i)) < x.dot(p.col(j))) j = i;
        }
        if (x.squaredNorm() - x.dot(p.col(j)) <= eps) break;
        if (std::find(set.begin(), set.end(), j) != set.end()) break;  // stalled at roundoff
        set.push_back(j);
        lambda.push_back(0.0);

        for (int minor = 0; minor < kMaxIterations; ++minor) {
            const Eigen::VectorXd mu = affine_min_norm(p, set);
            if (mu.minCoeff() > kSupportCutoff) {
                lambda.assign(mu.data(), mu.data() + mu.size());
                break;
            }
            // step from lambda toward mu until the first weight hits zero
            double theta = 1.0;
            for (std::size_t a = 0; a < set.size(); ++a) {
                if (mu(static_cast<Eigen::Index>(a)) <= kSupportCutoff) {
                    const double denom = lambda[a] - mu(static_cast<Eigen::Index>(a));
                    if (denom > 0.0) theta = std::min(theta, lambda[a] / denom);
                }
            }
            std::vector<Eigen::Index> kept;
            std::vector<double> kept_lambda;
            for (std::size_t a = 0; a < set.size(); ++a) {
                const double value = lambda[a] + theta * (mu(static_cast<Eigen::Index>(a)) - lambda[a]);
                if (value > kSupportCutoff) {
                    kept.push_back(set[a]);
                    kept_lambda.push_back(value);
                }
            }
            if (kept.empty()) {  // cannot happen in exact arithmetic; keep the newest point
                kept.push_back(set.back());
                kept_lambda.push_back(1.0);
            }
            const double total = std::accumulate(kept_lambda.begin(), kept_lambda.end(), 0.0);
            for (auto& value : kept_lambda) value /= total;
            set = std::move(kept);
            lambda = std::move(kept_lambda);
        }
        x.setZero();
        for (std::size_t a = 0; a < set.size(); ++a) x += lambda[a] * p.col(set[a]);
    }

    Eigen::VectorXd w = Eigen::VectorXd::Zero(k);
    for (std::size_t a = 0; a < set.size(); ++a) w(set[a]) = lambda[a];
    return w;
}

}  // namespace

double BlochVector8::norm() const {
    return std::sqrt(std::inner_product(n.begin(), n.end(), n.begin(), 0.0));
}

const std::array<Matrix, 8>& gell_mann() {
    static const std::array<Matrix, 8> matrices = make_gell_mann();
    return matrices;
}

DensityMatrix qutrit_project(const DensityMatrix& rho) {
    if (rho.dim() != 8) throw BadDimension("qutrit_project needs an 8x8 three-qubit matrix");
    Matrix basis(8, 3);
    basis.col(0) = ghz().vector();
    basis.col(1) = w().vector();
    basis.col(2) = w_tilde().vector();
    const Matrix sigma = basis.adjoint() * rho.matrix() * basis;
    const double leakage = 1.0 - sigma.trace().real();
    if (leakage > kLeakageTol) throw OutOfSpan(leakage);
    return DensityMatrix(sigma);
}

BlochVector8 bloch_vector(const DensityMatrix& qutrit) {
    if (qutrit.dim() != 3) throw BadDimension("bloch_vector needs a 3x3 qutrit matrix");
    BlochVector8 v;
    const auto& l = gell_mann();
    for (std::size_t i = 0; i < 8; ++i) {
        v.n[i] = std::sqrt(3.0) / 2.0 * (qutrit.matrix() * l[i]).trace().real();
    }
    return v;
}

DensityMatrix qutrit_from_bloch(const BlochVector8& v) {
    Matrix sigma = Matrix::Identity(3, 3);
    const auto& l = gell_mann();
    for (std::size_t i = 0; i < 8; ++i) sigma += std::sqrt(3.0) * v.n[i] * l[i];
    return DensityMatrix(sigma / 3.0);
}

std::array<BlochVector8, 5> zero_tangle_vertices(double n, double p0) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw BadParams("n must be a finite value >= 1");
    if (!(p0 > 0.0 && p0 < 1.0)) throw BadParams("p0 must lie in (0, 1)");
    const double s3 = std::sqrt(3.0);
    const double xi1 = std::sqrt(p0 * (1.0 - p0) / n);
    const double xi2 = std::sqrt(n - 1.0) * xi1;
    const double xi3 = std::sqrt(n - 1.0) * (1.0 - p0) / n;
    const double eta1 = s3 / 2.0 * (1.0 - (n + 1.0) * (1.0 - p0) / n);
    const double eta2 = 0.5 * (1.0 - 3.0 * (n - 1.0) * (1.0 - p0) / n);
    const double h = s3 / 2.0;

    std::array<BlochVector8, 5> v;
    v[0].n = {0, 0, -h, 0, 0, 0, 0, 0.5};
    v[1].n = {0, 0, 0, 0, 0, 0, 0, -1.0};
    v[2].n = {-s3 * xi1, 0, eta1, -s3 * xi2, 0, s3 * xi3, 0, eta2};
    v[3].n = {h * xi1, -1.5 * xi1, eta1, h * xi2, 1.5 * xi2, -h * xi3, 1.5 * xi3, eta2};
    v[4].n = {h * xi1, 1.5 * xi1, eta1, h * xi2, -1.5 * xi2, -h * xi3, -1.5 * xi3, eta2};
    return v;
}

Membership in_zero_polyhedron(const BlochVector8& v, std::span<const BlochVector8> vertices, double tol) {
    if (vertices.empty()) throw EmptyInput("in_zero_polyhedron needs at least one vertex");
    const auto k = static_cast<Eigen::Index>(vertices.size());
    Eigen::MatrixXd basis(8, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        for (Eigen::Index r = 0; r < 8; ++r) basis(r, c) = vertices[static_cast<std::size_t>(c)].n[static_cast<std::size_t>(r)];
    }
    Eigen::VectorXd target(8);
    for (Eigen::Index r = 0; r < 8; ++r) target(r) = v.n[static_cast<std::size_t>(r)];

    const Eigen::VectorXd w = wolfe_min_norm(basis.colwise() - target);
    const double residual = (basis * w - target).norm();
    return {residual <= tol, std::vector<double>(w.data(), w.data() + w.size()), residual};
}

}  // namespace tangle3
