#include "tangle3/roof_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "tangle3/errors.hpp"
#include "tangle3/family.hpp"
#include "tangle3/format.hpp"
#include "tangle3/measures.hpp"
#include "tangle3/optimize.hpp"

namespace tangle3 {

namespace {

constexpr double kRankCutoff = 1e-12;
constexpr double kIsometryTol = 1e-10;
constexpr double kDroppedWeight = 1e-14;
constexpr double kCollinearTol = 1e-12;
constexpr double kPhaseStep = 1e-8;
constexpr int kRefinedCandidates = 3;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_curve_args(double n, int p_points, int phi_points) {
    if (p_points < 2) throw BadParams("characteristic curve needs p_points >= 2");
    if (phi_points < 4) throw BadParams("characteristic curve needs phi_points >= 4");
    if (!(n >= 1.0) || !std::isfinite(n)) throw BadParams("n must be a finite value >= 1");
}

double grid_p(int k, int p_points) { return static_cast<double>(k) / (p_points - 1); }

// Modified Gram-Schmidt, applied twice, on the columns of an m x r matrix
// stored column-major. Returns false if a column collapses.
bool orthonormalize(std::array<cplx, 32>& a, int m, int r) {
    for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < r; ++c) {
            cplx* col = &a[static_cast<std::size_t>(c * m)];
            for (int prev = 0; prev < c; ++prev) {
                const cplx* basis = &a[static_cast<std::size_t>(prev * m)];
                cplx overlap = 0.0;
                for (int j = 0; j < m; ++j) overlap += std::conj(basis[j]) * col[j];
                for (int j = 0; j < m; ++j) col[j] -= overlap * basis[j];
            }
            double norm2 = 0.0;
            for (int j = 0; j < m; ++j) norm2 += std::norm(col[j]);
            if (!(norm2 > 1e-24)) return false;
            const double inv = 1.0 / std::sqrt(norm2);
            for (int j = 0; j < m; ++j) col[j] *= inv;
        }
    }
    return true;
}

struct RestartOutcome {
    double value;
    std::vector<double> x;
    bool converged;
};

RestartOutcome run_restart(const AverageTangle& objective, std::uint64_t seed,
                           const OracleOptions& options) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x0(static_cast<std::size_t>(objective.dimension()));
    for (auto& xi : x0) xi = gauss(rng);

    PatternSearchOptions search;
    search.initial_step = 0.5;
    search.min_step = options.min_step;
    search.max_evaluations = options.max_evaluations;
    search.rotate_basis = true;
    search.seed = rng();
    auto f = [&objective](std::span<const double> x) { return objective(x); };
    PatternSearchResult found = pattern_search(f, std::move(x0), search);
    return {found.value, std::move(found.x), found.converged};
}

struct SearchPlan {
    std::vector<int> sizes;
    std::vector<AverageTangle> objectives;
    int runs = 0;
};

SearchPlan plan_search(const DensityMatrix& rho, const OracleOptions& options) {
    if (rho.dim() != 8) throw BadDimension("min_avg_tangle needs an 8x8 three-qubit matrix");
    if (options.restarts < 1) throw BadParams("min_avg_tangle needs restarts >= 1");
    if (options.max_evaluations < 1) throw BadParams("min_avg_tangle needs a positive evaluation budget");
    const int rank = numerical_rank(rho.matrix(), kRankCutoff);
    if (rank > 4) throw BadParams("min_avg_tangle supports rank <= 4, got " + std::to_string(rank));

    SearchPlan plan;
    if (options.members == 0) {
        for (int m = rank; m <= std::min(rank + 2, 8); ++m) plan.sizes.push_back(m);
    } else {
        if (options.members < rank || options.members > 8) {
            throw BadParams("ensemble size m must lie in [rank, 8] = [" + std::to_string(rank) + ", 8]");
        }
        plan.sizes.push_back(options.members);
    }
    for (const int m : plan.sizes) plan.objectives.emplace_back(rho, m);
    plan.runs = static_cast<int>(plan.sizes.size()) * options.restarts;
    return plan;
}

RestartOutcome run_indexed(const SearchPlan& plan, int index, const OracleOptions& options) {
    const auto& objective = plan.objectives[static_cast<std::size_t>(index / options.restarts)];
    return run_restart(objective, mix_seed(options.seed, static_cast<std::uint64_t>(index)), options);
}

// Min-reduction with ties going to the lowest run index, so the result does
// not depend on execution order.
DecompositionSearchResult finish_search(const DensityMatrix& rho, const SearchPlan& plan,
                                        const std::vector<RestartOutcome>& outcomes,
                                        const OracleOptions& options) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (outcomes[i].value < outcomes[best].value) best = i;
    }
    const auto& objective = plan.objectives[best / static_cast<std::size_t>(options.restarts)];
    Ensemble ensemble = hjw_ensemble(rho, objective.isometry(outcomes[best].x));
    const double bound = average_tangle(ensemble);
    return {bound, std::move(ensemble), plan.runs, outcomes[best].converged};
}

CharCurve assemble_curve(double n, std::vector<CurvePoint> points) { return {n, std::move(points)}; }

}  // namespace

CurvePoint curve_point(double p, double n, int phi_points) {
    const double q = (1.0 - p) / n;
    const double spacing = kTwoPi / phi_points;

    struct Candidate {
        double value;
        double phi1;
        double phi2;
    };
    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(phi_points * phi_points));
    for (int i = 0; i < phi_points; ++i) {
        for (int j = 0; j < phi_points; ++j) {
            const double phi1 = i * spacing;
            const double phi2 = j * spacing;
            grid.push_back({z_tangle_closed({p, q, phi1, phi2}), phi1, phi2});
        }
    }
    const auto count = std::min<std::size_t>(kRefinedCandidates, grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(count), grid.end(),
                      [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

    CurvePoint best{p, grid.front().value, grid.front().phi1, grid.front().phi2};
    auto f = [p, q](std::span<const double> phi) { return z_tangle_closed({p, q, phi[0], phi[1]}); };
    PatternSearchOptions refine;
    refine.initial_step = spacing;
    refine.min_step = kPhaseStep;
    refine.max_evaluations = 4000;
    refine.rotate_basis = false;
    for (std::size_t c = 0; c < count; ++c) {
        const auto found = pattern_search(f, {grid[c].phi1, grid[c].phi2}, refine);
        if (found.value < best.tau_min) best = {p, found.value, found.x[0], found.x[1]};
    }
    best.phi1 = std::fmod(std::fmod(best.phi1, kTwoPi) + kTwoPi, kTwoPi);
    best.phi2 = std::fmod(std::fmod(best.phi2, kTwoPi) + kTwoPi, kTwoPi);
    best.tau_min = std::clamp(best.tau_min, 0.0, 1.0);
    return best;
}

CharCurve characteristic_curve(double n, int p_points, int phi_points) {
    check_curve_args(n, p_points, phi_points);
    std::vector<CurvePoint> points(static_cast<std::size_t>(p_points));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < p_points; ++k) points[static_cast<std::size_t>(k)] = curve_point(grid_p(k, p_points), n, phi_points);
    return assemble_curve(n, std::move(points));
}

void write_curve_csv(std::ostream& out, const CharCurve& curve) {
    out << "p,tau_min,phi1_argmin,phi2_argmin\n";
    for (const auto& pt : curve.points) {
        out << format_g17(pt.p) << ',' << format_g17(pt.tau_min) << ',' << format_g17(pt.phi1) << ','
            << format_g17(pt.phi2) << '\n';
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (vertices_.empty()) throw EmptyInput("empty piecewise-linear function");
    if (x < vertices_.front().x || x > vertices_.back().x) {
        throw BadParams("evaluation point " + std::to_string(x) + " outside the envelope range");
    }
    const auto upper = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                                        [](const Point2& v, double value) { return v.x < value; });
    if (upper == vertices_.begin()) return upper->y;
    const auto lower = upper - 1;
    if (upper == vertices_.end()) return lower->y;
    const double t = (x - lower->x) / (upper->x - lower->x);
    return lower->y + t * (upper->y - lower->y);
}

PiecewiseLinear lower_convex_envelope(std::span<const Point2> points) {
    if (points.size() < 2) throw EmptyInput("lower_convex_envelope needs at least two points");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].x > points[i - 1].x)) throw BadParams("envelope abscissae must be strictly increasing");
    }
    std::vector<Point2> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2) {
            const Point2& a = hull[hull.size() - 2];
            const Point2& b = hull.back();
            const double cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
            if (cross >= -kCollinearTol) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return PiecewiseLinear(std::move(hull));
}

PiecewiseLinear curve_envelope(const CharCurve& curve) {
    std::vector<Point2> samples;
    samples.reserve(curve.points.size());
    for (const auto& pt : curve.points) samples.push_back({pt.p, pt.tau_min});
    if (!samples.empty() && samples.front().x == 0.0) samples.front().y = 0.0;
    return lower_convex_envelope(samples);
}

Ensemble hjw_ensemble(const DensityMatrix& rho, const Matrix& isometry) {
    if (rho.dim() != 8) throw BadDimension("hjw_ensemble needs an 8x8 three-qubit matrix");
    const auto [values, vectors] = hermitian_eigen(rho.matrix());
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = values.size() - 1; i >= 0; --i) {
        if (values(i) > kRankCutoff) support.push_back(i);
    }
    const auto rank = static_cast<Eigen::Index>(support.size());
    if (isometry.cols() != rank || isometry.rows() < rank) {
        throw BadParams("isometry must be m x rank with m >= rank (rank " + std::to_string(rank) + ")");
    }
    const double deviation =
        (isometry.adjoint() * isometry - Matrix::Identity(rank, rank)).cwiseAbs().maxCoeff();
    if (deviation > kIsometryTol) {
        throw NotIsometry("isometry columns are not orthonormal (deviation " + std::to_string(deviation) + ")");
    }

    Matrix scaled(8, rank);
    for (Eigen::Index s = 0; s < rank; ++s) {
        scaled.col(s) = vectors.col(support[static_cast<std::size_t>(s)]) *
                        std::sqrt(values(support[static_cast<std::size_t>(s)]));
    }
    std::vector<EnsembleMember> members;
    for (Eigen::Index j = 0; j < isometry.rows(); ++j) {
        const Vector unnormalized = scaled * isometry.row(j).transpose();
        const double weight = unnormalized.squaredNorm();
        if (weight <= kDroppedWeight) continue;
        Amplitudes amps;
        for (int i = 0; i < 8; ++i) amps[static_cast<std::size_t>(i)] = unnormalized(i);
        members.push_back({weight, PureState3::from_amplitudes(amps)});
    }
    return Ensemble(std::move(members));
}

AverageTangle::AverageTangle(const DensityMatrix& rho, int members) : members_(members) {
    if (rho.dim() != 8) throw BadDimension("AverageTangle needs an 8x8 three-qubit matrix");
    const auto [values, vectors] = hermitian_eigen(rho.matrix());
    for (Eigen::Index i = values.size() - 1; i >= 0; --i) {
        if (values(i) <= kRankCutoff) continue;
        std::array<cplx, 8> column;
        const double root = std::sqrt(values(i));
        for (int a = 0; a < 8; ++a) column[static_cast<std::size_t>(a)] = vectors(a, i) * root;
        scaled_eigenvectors_.push_back(column);
    }
    rank_ = static_cast<int>(scaled_eigenvectors_.size());
    if (rank_ > 4) throw BadParams("AverageTangle supports rank <= 4");
    if (members_ < rank_ || members_ > 8) throw BadParams("ensemble size must lie in [rank, 8]");
}

double AverageTangle::operator()(std::span<const double> x) const {
    std::array<cplx, 32> u{};
    const int m = members_;
    for (int idx = 0; idx < m * rank_; ++idx) {
        u[static_cast<std::size_t>(idx)] = cplx(x[static_cast<std::size_t>(2 * idx)],
                                                x[static_cast<std::size_t>(2 * idx + 1)]);
    }
    if (!orthonormalize(u, m, rank_)) return std::numeric_limits<double>::infinity();

    double total = 0.0;
    std::array<cplx, 8> member;
    for (int j = 0; j < m; ++j) {
        member.fill(0.0);
        for (int i = 0; i < rank_; ++i) {
            const cplx coefficient = u[static_cast<std::size_t>(i * m + j)];
            const auto& v = scaled_eigenvectors_[static_cast<std::size_t>(i)];
            for (int a = 0; a < 8; ++a) member[static_cast<std::size_t>(a)] += coefficient * v[static_cast<std::size_t>(a)];
        }
        double weight = 0.0;
        for (const auto& c : member) weight += std::norm(c);
        // weight * tau(member / |member|) = tau(member) / weight, by degree-4 homogeneity
        if (weight > 1e-300) total += three_tangle_raw(member) / weight;
    }
    return total;
}

Matrix AverageTangle::isometry(std::span<const double> x) const {
    std::array<cplx, 32> u{};
    const int m = members_;
    for (int idx = 0; idx < m * rank_; ++idx) {
        u[static_cast<std::size_t>(idx)] = cplx(x[static_cast<std::size_t>(2 * idx)],
                                                x[static_cast<std::size_t>(2 * idx + 1)]);
    }
    if (!orthonormalize(u, m, rank_)) throw NotIsometry("degenerate isometry parameters");
    Matrix out(m, rank_);
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < m; ++j) out(j, i) = u[static_cast<std::size_t>(i * m + j)];
    }
    return out;
}

double average_tangle(const Ensemble& ensemble) {
    double total = 0.0;
    for (const auto& [weight, state] : ensemble) total += weight * three_tangle_pure(state);
    return total;
}

DecompositionSearchResult min_avg_tangle(const DensityMatrix& rho, const OracleOptions& options) {
    const SearchPlan plan = plan_search(rho, options);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(plan.runs));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < plan.runs; ++k) outcomes[static_cast<std::size_t>(k)] = run_indexed(plan, k, options);
    return finish_search(rho, plan, outcomes, options);
}

namespace serial {

CharCurve characteristic_curve(double n, int p_points, int phi_points) {
    check_curve_args(n, p_points, phi_points);
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(p_points));
    for (int k = 0; k < p_points; ++k) points.push_back(curve_point(grid_p(k, p_points), n, phi_points));
    return assemble_curve(n, std::move(points));
}

DecompositionSearchResult min_avg_tangle(const DensityMatrix& rho, const OracleOptions& options) {
    const SearchPlan plan = plan_search(rho, options);
    std::vector<RestartOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(plan.runs));
    for (int k = 0; k < plan.runs; ++k) outcomes.push_back(run_indexed(plan, k, options));
    return finish_search(rho, plan, outcomes, options);
}

}  // namespace serial

}  // namespace tangle3
