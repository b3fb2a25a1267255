#pragma once

#include <string_view>
#include <vector>

namespace tangle3 {

// Closed forms for rho(p, q) = p GHZ + q W + (1 - p - q) W~ with q = (1 - p) / n.
// The order parameter n is a double; integer values are the validated ones
// (see is_integer_order in family.hpp).

/// Region boundaries of the piecewise three-tangle for one n.
struct Thresholds {
    double n;
    double p0;      // largest zero of alpha_I
    double p1;      // tangency point of the linear convexification
    double p_star;  // alpha_I turns concave beyond this point
    double p_c;     // pairwise concurrences vanish below this point
};

enum class Region { Zero, AlphaI, AlphaII };

std::string_view to_string(Region region);

struct PiecewiseTangle {
    Region region;
    double value;
};

/// Average three-tangle of the symmetric three-member Z ensemble (signed; the
/// member tangle is its modulus).
double alpha_I(double p, double n);

/// Second derivative of alpha_I in p. Throws BadParams outside the open interval (0, 1).
double alpha_I_dd(double p, double n);

/// Linear interpolation between alpha_I(p1) and the GHZ value 1.
double alpha_II(double p, double n, double p1);

double solve_p0(double n);
double solve_p1(double n);
double solve_p_star(double n);
/// Same as solve_p_star(n) but reuses an already computed p0.
double solve_p_star(double n, double p0);

/// Point below which both pairwise concurrences vanish.
double p_c(double n);

Thresholds compute_thresholds(double n);

/// Three-tangle of rho(p, (1 - p)/n); `th` must come from compute_thresholds(n).
PiecewiseTangle mixed_three_tangle(double p, const Thresholds& th);

/// Minimum over decompositions of 4 det(rho_A) for rho(p, q).
double one_tangle_min(double p, double q);

/// C_AB^2 + C_AC^2 for rho(p, q).
double concurrence_sum_sq(double p, double q);

struct CkwPoint {
    double p;
    double one_tangle;
    double conc_sq_sum;
    double tau3;
    double margin;  // one_tangle - conc_sq_sum - tau3
};

struct CkwReport {
    Thresholds thresholds;
    std::vector<CkwPoint> points;
    double min_margin;
};

/// Evaluates the mixed-state CKW margin on a uniform grid of `grid_size` points over [0, 1].
CkwReport ckw_audit(double n, int grid_size);

}  // namespace tangle3
