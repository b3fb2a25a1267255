#include "tangle3/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tangle3/errors.hpp"
#include "tangle3/roots.hpp"

namespace tangle3 {

namespace {

constexpr double kParamTol = 1e-12;

void require_order(double n) {
    if (!(n >= 1.0) || !std::isfinite(n)) {
        throw BadParams("order parameter n must be a finite value >= 1, got " + std::to_string(n));
    }
}

void require_unit(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadParams("p must lie in [0, 1], got " + std::to_string(p));
}

void require_pq(double p, double q) {
    if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0 + kParamTol)) {
        throw BadParams("(p, q) must satisfy p, q >= 0 and p + q <= 1");
    }
}

// 8 sqrt(6n) [1 + (n-1)^{3/2}] / (9 n^2), shared by alpha_I and the p1 condition.
double cubic_coefficient(double n) {
    return 8.0 * std::sqrt(6.0 * n) * (1.0 + std::pow(n - 1.0, 1.5)) / (9.0 * n * n);
}

}  // namespace

std::string_view to_string(Region region) {
    switch (region) {
        case Region::Zero: return "ZERO";
        case Region::AlphaI: return "ALPHA_I";
        case Region::AlphaII: return "ALPHA_II";
    }
    return "UNKNOWN";
}

double alpha_I(double p, double n) {
    require_unit(p);
    require_order(n);
    const double s = 1.0 - p;
    return p * p - 4.0 * std::sqrt(n - 1.0) / n * p * s - 4.0 * (n - 1.0) / (3.0 * n * n) * s * s -
           cubic_coefficient(n) * std::sqrt(p * s * s * s);
}

double alpha_I_dd(double p, double n) {
    require_order(n);
    if (!(p > 0.0 && p < 1.0)) {
        throw BadParams("alpha_I_dd is singular at the endpoints; p must lie in (0, 1)");
    }
    const double smooth = 9.0 * n * n + 36.0 * n * std::sqrt(n - 1.0) - 12.0 * (n - 1.0);
    const double singular = std::sqrt(6.0 * n) * (1.0 + std::pow(n - 1.0, 1.5)) *
                            (8.0 * p * p - 4.0 * p - 1.0) / std::sqrt(p * p * p * (1.0 - p));
    return 2.0 / (9.0 * n * n) * (smooth - singular);
}

double alpha_II(double p, double n, double p1) {
    if (!(p1 < 1.0)) throw BadParams("alpha_II needs p1 < 1");
    require_unit(p);
    return (p - p1) / (1.0 - p1) + (1.0 - p) / (1.0 - p1) * alpha_I(p1, n);
}

double solve_p0(double n) {
    require_order(n);
    return largest_root([n](double p) { return alpha_I(p, n); }, 0.5, 1.0 - 1e-9, 2048).x;
}

double solve_p_star(double n, double p0) {
    require_order(n);
    return largest_root([n](double p) { return alpha_I_dd(p, n); }, p0, 1.0 - 1e-6, 2048).x;
}

double solve_p_star(double n) { return solve_p_star(n, solve_p0(n)); }

double solve_p1(double n) {
    require_order(n);
    // Stationarity of alpha_II in p1, i.e. the line from (p1, alpha_I(p1)) to
    // (1, 1) is tangent to alpha_I.
    const double lhs_coefficient = cubic_coefficient(n) / 2.0;
    const double rhs = 1.0 + 4.0 * std::sqrt(n - 1.0) / n - 4.0 * (n - 1.0) / (3.0 * n * n);
    auto condition = [&](double p) {
        return lhs_coefficient * (2.0 * p - 1.0) / std::sqrt(p * (1.0 - p)) - rhs;
    };
    return find_root(condition, 0.5 + 1e-9, 1.0 - 1e-9).x;
}

double p_c(double n) {
    require_order(n);
    if (std::abs(n - 2.0) < 1e-6) {
        // The closed form is 0/0 at n = 2; solve the vanishing condition directly.
        auto vanishing = [n](double p) {
            const double q = (1.0 - p) / n;
            return 2.0 / 3.0 * (1.0 - p) - std::sqrt((3.0 * p + 2.0 * q) * (2.0 + p - 2.0 * q)) / 3.0;
        };
        return find_root(vanishing, 0.0, 1.0).x;
    }
    const double root = std::sqrt(5.0 * n * n - 4.0 * n + 4.0);
    return ((7.0 * n * n - 4.0 * n + 4.0) - 3.0 * n * root) / ((n - 2.0) * (n - 2.0));
}

Thresholds compute_thresholds(double n) {
    Thresholds th{};
    th.n = n;
    th.p0 = solve_p0(n);
    th.p1 = solve_p1(n);
    th.p_star = solve_p_star(n, th.p0);
    th.p_c = p_c(n);
    return th;
}

PiecewiseTangle mixed_three_tangle(double p, const Thresholds& th) {
    require_unit(p);
    if (p <= th.p0) return {Region::Zero, 0.0};
    if (p <= th.p1) return {Region::AlphaI, std::max(alpha_I(p, th.n), 0.0)};
    return {Region::AlphaII, alpha_II(p, th.n, th.p1)};
}

double one_tangle_min(double p, double q) {
    require_pq(p, q);
    const double r = std::max(1.0 - p - q, 0.0);
    const double polynomial = 8.0 - 4.0 * p - 12.0 * q + 5.0 * p * p + 12.0 * q * q + 12.0 * p * q;
    const double radical = 4.0 * std::sqrt(p * q * r) *
                           (2.0 * std::sqrt(6.0 * q) + 2.0 * std::sqrt(6.0 * r) - 3.0 * std::sqrt(p));
    return (polynomial + radical) / 9.0;
}

double concurrence_sum_sq(double p, double q) {
    require_pq(p, q);
    const double c = std::max(
        0.0, 2.0 / 3.0 * (1.0 - p) - std::sqrt((3.0 * p + 2.0 * q) * (2.0 + p - 2.0 * q)) / 3.0);
    return 2.0 * c * c;
}

CkwReport ckw_audit(double n, int grid_size) {
    if (grid_size < 2) throw BadParams("ckw_audit needs grid_size >= 2");
    CkwReport report{compute_thresholds(n), {}, std::numeric_limits<double>::infinity()};
    report.points.reserve(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k) {
        const double p = static_cast<double>(k) / (grid_size - 1);
        const double q = (1.0 - p) / n;
        CkwPoint point{p, one_tangle_min(p, q), concurrence_sum_sq(p, q),
                       mixed_three_tangle(p, report.thresholds).value, 0.0};
        point.margin = point.one_tangle - point.conc_sq_sum - point.tau3;
        report.min_margin = std::min(report.min_margin, point.margin);
        report.points.push_back(point);
    }
    return report;
}

}  // namespace tangle3
