#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support/helpers.hpp"
#include "tangle3/analytic.hpp"
#include "tangle3/errors.hpp"
#include "tangle3/family.hpp"
#include "tangle3/measures.hpp"
#include "tangle3/roof_oracle.hpp"

using namespace tangle3;
using namespace tangle3::testing;

namespace {

Matrix random_isometry(std::mt19937_64& rng, int m, int r) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(m, r);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ() * Matrix::Identity(m, r);
}

std::vector<double> sorted_weights(const Ensemble& ens) {
    std::vector<double> w;
    for (const auto& member : ens) w.push_back(member.weight);
    std::sort(w.begin(), w.end());
    return w;
}

bool same_ray(const PureState3& a, const PureState3& b, double tol) {
    return std::abs(std::abs(inner(a, b)) - 1.0) < tol;
}

}  // namespace

TEST_CASE("characteristic curve: largest zero sits at phi1 = phi2 = 0") {
    for (double n : {1.0, 2.0, 3.0, 10.0}) {
        const double p0 = solve_p0(n);
        const auto at_p0 = curve_point(p0, n, 64);
        CHECK(at_p0.tau_min < 1e-8);
        CHECK(z_tangle_closed({p0, (1.0 - p0) / n, 0.0, 0.0}) < 1e-9);

        const auto curve = characteristic_curve(n, 201, 48);
        for (const auto& pt : curve.points) {
            if (pt.p > p0 + 1e-3) CHECK(pt.tau_min > 1e-6);
        }
        CHECK(std::abs(curve.points.back().tau_min - 1.0) < 1e-12);
        // above p0 the minimum is the phi = 0 branch
        const auto above = curve_point(0.5 * (p0 + solve_p1(n)), n, 64);
        CHECK(std::abs(above.tau_min - alpha_I(above.p, n)) < 1e-9);
    }
    CHECK_THROWS_AS(characteristic_curve(2.0, 1, 64), BadParams);
    CHECK_THROWS_AS(characteristic_curve(2.0, 10, 3), BadParams);
}

TEST_CASE("characteristic curve: OpenMP and serial loops agree bit for bit") {
    const auto parallel = characteristic_curve(3.0, 41, 32);
    const auto reference = serial::characteristic_curve(3.0, 41, 32);
    REQUIRE(parallel.points.size() == reference.points.size());
    for (std::size_t i = 0; i < parallel.points.size(); ++i) {
        CHECK(parallel.points[i].p == reference.points[i].p);
        CHECK(parallel.points[i].tau_min == reference.points[i].tau_min);
        CHECK(parallel.points[i].phi1 == reference.points[i].phi1);
    }
}

TEST_CASE("curve CSV") {
    const auto curve = characteristic_curve(2.0, 3, 8);
    std::ostringstream out;
    write_curve_csv(out, curve);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,tau_min,phi1_argmin,phi2_argmin");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
    }
    CHECK(rows == 3);
    CHECK(out.str().find("0.5,") != std::string::npos);
}

TEST_CASE("lower_convex_envelope") {
    std::vector<Point2> convex;
    for (int k = 0; k <= 20; ++k) convex.push_back({k / 20.0, std::pow(k / 20.0 - 0.3, 2)});
    const auto env = lower_convex_envelope(convex);
    for (const auto& pt : convex) CHECK(std::abs(env(pt.x) - pt.y) < 1e-15);

    const std::vector<Point2> tent{{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.0}};
    const auto flat = lower_convex_envelope(tent);
    CHECK(flat.vertices().size() == 2);
    CHECK(flat(0.5) == 0.0);
    CHECK(flat(0.25) == 0.0);

    // collinear points stay as vertices
    const std::vector<Point2> line{{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}};
    CHECK(lower_convex_envelope(line).vertices().size() == 3);

    CHECK_THROWS_AS(lower_convex_envelope(std::vector<Point2>{{0.0, 1.0}}), EmptyInput);
    CHECK_THROWS_AS(lower_convex_envelope(std::vector<Point2>{{0.0, 1.0}, {0.0, 2.0}}), BadParams);
    CHECK_THROWS_AS(flat(1.5), BadParams);
}

TEST_CASE("lower_convex_envelope is idempotent") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<Point2> pts;
        for (int k = 0; k < 50; ++k) pts.push_back({k * 0.02, unit(rng)});
        const auto once = lower_convex_envelope(pts);
        const auto twice = lower_convex_envelope(once.vertices());
        REQUIRE(once.vertices().size() == twice.vertices().size());
        for (std::size_t i = 0; i < once.vertices().size(); ++i) {
            CHECK(once.vertices()[i].x == twice.vertices()[i].x);
            CHECK(once.vertices()[i].y == twice.vertices()[i].y);
        }
        for (const auto& pt : pts) CHECK(once(pt.x) <= pt.y + 1e-12);
    }
}

TEST_CASE("curve envelope reproduces the piecewise three-tangle for n = 2") {
    const double n = 2.0;
    const auto curve = characteristic_curve(n, 401, 64);
    const auto env = curve_envelope(curve);
    const Thresholds th = compute_thresholds(n);
    double gap = 0.0;
    for (const auto& pt : curve.points) gap = std::max(gap, std::abs(env(pt.p) - mixed_three_tangle(pt.p, th).value));
    CHECK(gap <= 2e-3);
}

TEST_CASE("hjw_ensemble") {
    const auto r = rho(0.5, 0.3);
    const auto eigen_ensemble = hjw_ensemble(r, Matrix::Identity(3, 3));
    CHECK(eigen_ensemble.size() == 3);
    // eigenvalues 0.5, 0.3, 0.2 with eigenvectors GHZ, W, W~
    CHECK(std::abs(eigen_ensemble[0].weight - 0.5) < 1e-12);
    CHECK(same_ray(eigen_ensemble[0].state, ghz(), 1e-12));
    CHECK(same_ray(eigen_ensemble[1].state, w(), 1e-12));
    CHECK(same_ray(eigen_ensemble[2].state, w_tilde(), 1e-12));

    std::mt19937_64 rng(41);
    for (int m = 3; m <= 8; ++m) {
        const auto ens = hjw_ensemble(r, random_isometry(rng, m, 3));
        CHECK(trace_distance(density_from_ensemble(ens), r) <= 1e-10);
    }

    Matrix bad = Matrix::Identity(4, 3);
    bad(3, 0) = 0.5;
    CHECK_THROWS_AS(hjw_ensemble(r, bad), NotIsometry);
    CHECK_THROWS_AS(hjw_ensemble(r, Matrix::Identity(2, 2)), BadParams);
}

TEST_CASE("hjw_ensemble reaches the five-member zero-region decomposition") {
    const double n = 3.0;
    const Thresholds th = compute_thresholds(n);
    const double p = 0.5 * th.p0;
    const auto target = optimal_decomposition(p, th);
    REQUIRE(target.size() == 5);
    const auto r = rho(p, (1.0 - p) / n);

    // U_ji = <v_i| sqrt(w_j) psi_j> / sqrt(lambda_i)
    const auto eig = hermitian_eigen(r.matrix());
    Matrix u(5, 3);
    for (int j = 0; j < 5; ++j) {
        const Vector scaled = std::sqrt(target[j].weight) * target[j].state.vector();
        for (int i = 0; i < 3; ++i) {
            const Eigen::Index col = 7 - i;
            u(j, i) = eig.vectors.col(col).dot(scaled) / std::sqrt(eig.values(col));
        }
    }
    CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
    const auto rebuilt = hjw_ensemble(r, u);
    REQUIRE(rebuilt.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(std::abs(rebuilt[j].weight - target[j].weight) < 1e-12);
        CHECK(same_ray(rebuilt[j].state, target[j].state, 1e-10));
    }
}

TEST_CASE("hjw_ensemble: member relabelling and row phases leave the weights and average unchanged") {
    std::mt19937_64 rng(43);
    const auto r = rho(0.7, 0.1);
    const Matrix u = random_isometry(rng, 5, 3);
    const auto base = hjw_ensemble(r, u);

    Matrix shuffled(5, 3);
    const std::array<int, 5> perm{3, 0, 4, 1, 2};
    for (int j = 0; j < 5; ++j) shuffled.row(j) = std::polar(1.0, 0.7 * j) * u.row(perm[j]);
    const auto moved = hjw_ensemble(r, shuffled);

    const auto wa = sorted_weights(base);
    const auto wb = sorted_weights(moved);
    REQUIRE(wa.size() == wb.size());
    for (std::size_t i = 0; i < wa.size(); ++i) CHECK(std::abs(wa[i] - wb[i]) < 1e-10);
    CHECK(std::abs(average_tangle(base) - average_tangle(moved)) < 1e-10);
}

TEST_CASE("AverageTangle agrees with the explicit ensemble") {
    std::mt19937_64 rng(47);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto r = rho(0.6, 0.15);
    const AverageTangle objective(r, 4);
    CHECK(objective.rank() == 3);
    CHECK(objective.dimension() == 24);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> x(24);
        for (auto& xi : x) xi = gauss(rng);
        const auto ens = hjw_ensemble(r, objective.isometry(x));
        CHECK(std::abs(objective(x) - average_tangle(ens)) < 1e-12);
    }
}

TEST_CASE("min_avg_tangle on known states") {
    OracleOptions options;
    options.restarts = 4;
    options.seed = 5;

    const auto pure = min_avg_tangle(DensityMatrix::projector(ghz()), options);
    CHECK(std::abs(pure.upper_bound - 1.0) < 1e-6);

    const Thresholds two = compute_thresholds(2.0);
    const auto zero = min_avg_tangle(rho(0.5, 0.25), options);
    CHECK(zero.upper_bound <= 1e-4);
    CHECK(zero.upper_bound + 1e-9 >= mixed_three_tangle(0.5, two).value);

    OracleOptions wide = options;
    wide.members = 5;
    wide.restarts = 20;
    const auto high = min_avg_tangle(rho(0.95, 0.025), wide);
    const double analytic = mixed_three_tangle(0.95, two).value;
    CHECK(high.upper_bound >= analytic - 1e-6);
    CHECK(high.upper_bound <= analytic + 0.02);

    for (double p : {0.1, 0.5, 0.9}) {
        const auto flipped = min_avg_tangle(pi_state(p, std::numeric_limits<double>::infinity()), options);
        CHECK(flipped.upper_bound <= (2.0 * p - 1.0) * (2.0 * p - 1.0) + 0.02);
    }
}

TEST_CASE("min_avg_tangle result invariants") {
    OracleOptions options;
    options.restarts = 3;
    options.seed = 99;
    const auto r = rho(0.8, 0.1);
    const auto result = min_avg_tangle(r, options);
    CHECK(result.restarts_used == 9);
    CHECK(std::abs(result.upper_bound - average_tangle(result.best_ensemble)) <= 1e-10);
    CHECK(trace_distance(density_from_ensemble(result.best_ensemble), r) <= 1e-8);
    CHECK(result.upper_bound + 1e-9 >= mixed_three_tangle(0.8, compute_thresholds(2.0)).value);

    const auto again = min_avg_tangle(r, options);
    CHECK(again.upper_bound == result.upper_bound);
    const auto reference = serial::min_avg_tangle(r, options);
    CHECK(reference.upper_bound == result.upper_bound);
}

TEST_CASE("min_avg_tangle argument checks") {
    OracleOptions options;
    options.members = 2;
    CHECK_THROWS_AS(min_avg_tangle(rho(0.5, 0.25), options), BadParams);
    options.members = 9;
    CHECK_THROWS_AS(min_avg_tangle(rho(0.5, 0.25), options), BadParams);
    options.members = 0;
    options.restarts = 0;
    CHECK_THROWS_AS(min_avg_tangle(rho(0.5, 0.25), options), BadParams);

    Matrix mixed = Matrix::Identity(8, 8) / 8.0;
    options.restarts = 1;
    CHECK_THROWS_AS(min_avg_tangle(DensityMatrix(mixed), options), BadParams);
}
