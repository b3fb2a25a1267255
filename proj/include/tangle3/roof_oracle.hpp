#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tangle3/states.hpp"

namespace tangle3 {

// Numerical convex-roof machinery, independent of the closed forms in
// analytic.hpp. The grid and restart loops run under OpenMP; the serial
// namespace holds the reference loops, which produce bit-identical results.

struct CurvePoint {
    double p;
    double tau_min;
    double phi1;  // argmin
    double phi2;
};

/// Pointwise minimum over phases of the Z-state tangle with q = (1 - p)/n.
struct CharCurve {
    double n;
    std::vector<CurvePoint> points;  // ascending p
};

/// One grid point: uniform phi_points x phi_points phase grid, best candidates
/// refined by a 2-D compass search to a phase step below 1e-8.
CurvePoint curve_point(double p, double n, int phi_points);

/// p on a uniform grid of p_points over [0, 1]. Throws BadParams when
/// p_points < 2 or phi_points < 4.
CharCurve characteristic_curve(double n, int p_points, int phi_points = 64);

/// CSV with header `p,tau_min,phi1_argmin,phi2_argmin`, 17 significant digits.
void write_curve_csv(std::ostream& out, const CharCurve& curve);

struct Point2 {
    double x;
    double y;
};

/// Piecewise-linear function through ascending vertices.
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

    /// Throws BadParams outside [front().x, back().x].
    double operator()(double x) const;
    const std::vector<Point2>& vertices() const noexcept { return vertices_; }

private:
    std::vector<Point2> vertices_;
};

/// Greatest convex function below the samples (lower hull, monotone chain).
/// Points within 1e-12 of collinear stay on the hull. Throws EmptyInput for
/// fewer than two points and BadParams unless x is strictly increasing.
PiecewiseLinear lower_convex_envelope(std::span<const Point2> points);

/// Envelope of a characteristic curve with its p = 0 end pinned at zero:
/// rho(0, 1/n) is a W/W~ mixture of zero tangle that the Z family alone misses.
PiecewiseLinear curve_envelope(const CharCurve& curve);

/// Ensemble obtained from the eigen-ensemble of rho through the m x r isometry
/// U (r = rank of rho). Members with weight below 1e-14 are dropped. Throws
/// NotIsometry when U^dagger U deviates from identity by more than 1e-10.
Ensemble hjw_ensemble(const DensityMatrix& rho, const Matrix& isometry);

/// Ensemble-average three-tangle over m-member decompositions of a fixed rho,
/// parameterized by an unconstrained complex m x r matrix that is
/// orthonormalized column by column.
class AverageTangle {
public:
    AverageTangle(const DensityMatrix& rho, int members);

    int rank() const noexcept { return rank_; }
    int members() const noexcept { return members_; }
    int dimension() const noexcept { return 2 * members_ * rank_; }

    double operator()(std::span<const double> x) const;

    Matrix isometry(std::span<const double> x) const;

private:
    int rank_ = 0;
    int members_ = 0;
    // sqrt(lambda_i) |v_i>, rank_ columns of 8 amplitudes
    std::vector<std::array<cplx, 8>> scaled_eigenvectors_;
};

struct OracleOptions {
    int members = 0;  // 0: try rank, rank + 1, rank + 2 (capped at 8) and keep the best
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_evaluations = 5000;
    double min_step = 1e-7;
};

struct DecompositionSearchResult {
    double upper_bound;
    Ensemble best_ensemble;
    int restarts_used;
    bool converged;
};

/// Upper bound on the convex-roof three-tangle of rho (rank <= 4).
DecompositionSearchResult min_avg_tangle(const DensityMatrix& rho, const OracleOptions& options);

double average_tangle(const Ensemble& ensemble);

namespace serial {

CharCurve characteristic_curve(double n, int p_points, int phi_points = 64);
DecompositionSearchResult min_avg_tangle(const DensityMatrix& rho, const OracleOptions& options);

}  // namespace serial

}  // namespace tangle3
