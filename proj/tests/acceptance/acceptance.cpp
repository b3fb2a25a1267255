// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "tangle3/analytic.hpp"
#include "tangle3/bloch.hpp"
#include "tangle3/family.hpp"
#include "tangle3/measures.hpp"
#include "tangle3/roof_oracle.hpp"

using namespace tangle3;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const double kOrders[] = {1, 2, 3, 10, 100, 1000};

Outcome table_one() {
    const double p0[] = {0.6269, 0.75, 0.7452, 0.712, 0.6604, 0.6382};
    const double p1[] = {0.7087, 0.9330, 0.9250, 0.8667, 0.7710, 0.7298};
    const double ps[] = {0.8257, 0.9618, 0.9572, 0.9230, 0.8650, 0.8391};
    const auto start = Clock::now();
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        worst = std::max(worst, std::abs(solve_p0(kOrders[i]) - p0[i]));
        worst = std::max(worst, std::abs(solve_p1(kOrders[i]) - p1[i]));
        worst = std::max(worst, std::abs(solve_p_star(kOrders[i]) - ps[i]));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 5e-4 && elapsed < 1.0, fmt("max |err| = %.3g over 18 values, %.3f s", worst, elapsed)};
}

Outcome anchors() {
    const double c = 4.0 * std::cbrt(2.0);
    const double e1 = std::abs(solve_p0(1) - c / (3.0 + c));
    const double e2 = std::abs(solve_p1(1) - (0.5 + 3.0 * std::sqrt(465.0) / 310.0));
    const double e3 = std::abs(solve_p1(2) - (2.0 + std::sqrt(3.0)) / 4.0);
    return {std::max({e1, e2, e3}) <= 1e-9, fmt("errors %.3g, %.3g, %.3g", e1, e2, e3)};
}

Outcome hyperdeterminant_grid() {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double p = i / 19.0;
        for (int j = 0; j < 20; ++j) {
            const double q = (1.0 - p) * j / 19.0;
            for (int a = 0; a < 8; ++a) {
                for (int b = 0; b < 8; ++b) {
                    const ZParams z{p, q, 2.0 * std::numbers::pi * a / 8.0, 2.0 * std::numbers::pi * b / 8.0};
                    worst = std::max(worst, std::abs(three_tangle_pure(z_state(z)) - z_tangle_closed(z)));
                }
            }
        }
    }
    return {worst <= 1e-12, fmt("max |diff| = %.3g on 25600 points", worst)};
}

Outcome ckw_pure() {
    std::mt19937_64 rng(20240601);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        Amplitudes a;
        for (auto& x : a) x = cplx(gauss(rng), gauss(rng));
        const auto psi = pure_from_amplitudes(a);
        worst = std::max(worst, std::abs(ckw_residual(psi) - three_tangle_pure(psi)));
    }
    return {worst <= 1e-10, fmt("max |residual - tau3| = %.3g on 1000 states", worst)};
}

Outcome ckw_mixed() {
    double worst = std::numeric_limits<double>::infinity();
    for (double n : {1.0, 2.0, 10.0}) {
        const Thresholds th = compute_thresholds(n);
        for (int k = 0; k <= 1000; ++k) {
            const double p = k / 1000.0;
            const double q = (1.0 - p) / n;
            const double margin = one_tangle_min(p, q) - concurrence_sum_sq(p, q) - mixed_three_tangle(p, th).value;
            worst = std::min(worst, margin);
        }
    }
    return {worst >= -1e-9, fmt("min margin = %.3g", worst)};
}

Outcome wootters() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double p = i / 49.0;
        for (int j = 0; j < 50; ++j) {
            const double q = (1.0 - p) * j / 49.0;
            const double c = concurrence(partial_trace_pair(rho(p, q), QubitPair::AB));
            worst = std::max(worst, std::abs(concurrence_sum_sq(p, q) - 2.0 * c * c));
        }
    }
    return {worst <= 1e-10, fmt("max |diff| = %.3g on 2500 points", worst)};
}

Outcome decompositions() {
    double worst_td = 0.0;
    double worst_tau = 0.0;
    for (double n : {1.0, 2.0, 3.0, 10.0}) {
        const Thresholds th = compute_thresholds(n);
        for (double p : {0.1, th.p0 / 2.0, th.p0, (th.p0 + th.p1) / 2.0, th.p1, 0.95, 1.0}) {
            const Ensemble ens = optimal_decomposition(p, th);
            worst_td = std::max(worst_td, trace_distance(density_from_ensemble(ens), rho(p, (1.0 - p) / n)));
            worst_tau = std::max(worst_tau, std::abs(average_tangle(ens) - mixed_three_tangle(p, th).value));
        }
    }
    return {worst_td <= 1e-12 && worst_tau <= 1e-9,
            fmt("max trace distance = %.3g, max |avg tau3 - tau3| = %.3g", worst_td, worst_tau)};
}

Outcome envelopes() {
    bool ok = true;
    std::string detail;
    for (double n : {2.0, 3.0, 10.0}) {
        const auto start = Clock::now();
        const Thresholds th = compute_thresholds(n);
        const CharCurve curve = characteristic_curve(n, 401, 64);
        const PiecewiseLinear env = curve_envelope(curve);
        double gap = 0.0;
        for (const auto& pt : curve.points) gap = std::max(gap, std::abs(env(pt.p) - mixed_three_tangle(pt.p, th).value));
        const double elapsed = seconds_since(start);
        ok = ok && gap <= 2e-3 && elapsed < 60.0;
        detail += fmt("n=%g gap %.3g (%.2f s) ", n, gap, elapsed);
    }
    return {ok, detail};
}

Outcome oracle() {
    const auto start = Clock::now();
    OracleOptions options;
    options.restarts = 20;
    options.seed = 7;
    double worst_below = 0.0;
    double worst_above = 0.0;
    double worst_zero = 0.0;
    bool ok = true;
    for (double n : {1.0, 2.0, 3.0, 10.0}) {
        const Thresholds th = compute_thresholds(n);
        for (double p : {th.p0 / 2.0, (th.p0 + th.p1) / 2.0, (th.p1 + 1.0) / 2.0}) {
            const double analytic = mixed_three_tangle(p, th).value;
            const double bound = min_avg_tangle(rho(p, (1.0 - p) / n), options).upper_bound;
            ok = ok && bound >= analytic - 1e-9 && bound <= analytic + 0.02;
            worst_below = std::max(worst_below, analytic - bound);
            worst_above = std::max(worst_above, bound - analytic);
            if (p <= th.p0) {
                ok = ok && bound <= 1e-4;
                worst_zero = std::max(worst_zero, bound);
            }
        }
    }
    double worst_pi = -1.0;
    for (double p : {0.1, 0.5, 0.9}) {
        const double bound =
            min_avg_tangle(pi_state(p, std::numeric_limits<double>::infinity()), options).upper_bound;
        const double target = (2.0 * p - 1.0) * (2.0 * p - 1.0);
        ok = ok && bound <= target + 0.02;
        worst_pi = std::max(worst_pi, bound - target);
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 300.0;
    return {ok, fmt("family excess in [%.3g, %.3g], zero region max %.3g, ", -worst_below, worst_above, worst_zero) +
                    fmt("pi excess max %.3g, %.1f s", worst_pi, elapsed)};
}

Outcome zero_polyhedron() {
    int mismatches = 0;
    double worst_norm = 0.0;
    for (double n : {1.0, 2.0, 10.0}) {
        const double p0 = solve_p0(n);
        const auto vertices = zero_tangle_vertices(n, p0);
        for (const auto& v : vertices) worst_norm = std::max(worst_norm, std::abs(v.norm() - 1.0));
        for (int k = 0; k <= 200; ++k) {
            const double p = k / 200.0;
            const auto v = bloch_vector(qutrit_project(rho(p, (1.0 - p) / n)));
            if (in_zero_polyhedron(v, vertices).inside != (p <= p0 + 1e-6)) ++mismatches;
        }
    }
    const auto vertices = zero_tangle_vertices(2.0, solve_p0(2.0));
    const double h = std::sqrt(3.0) / 2.0;
    double image_err = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double want_w = i == 2 ? -h : (i == 7 ? 0.5 : 0.0);
        const double want_t = i == 7 ? -1.0 : 0.0;
        image_err = std::max({image_err, std::abs(vertices[0][i] - want_w), std::abs(vertices[1][i] - want_t)});
    }
    return {mismatches == 0 && worst_norm <= 1e-10 && image_err <= 1e-15,
            fmt("%g decision mismatches on 603 points, max |norm - 1| = %.3g, W/W~ image error %.3g",
                mismatches, worst_norm, image_err)};
}

Outcome convexity() {
    double worst_dd = std::numeric_limits<double>::infinity();
    double worst_concave = -std::numeric_limits<double>::infinity();
    for (double n : kOrders) {
        const Thresholds th = compute_thresholds(n);
        std::vector<double> f(2001);
        for (int k = 0; k <= 2000; ++k) f[k] = mixed_three_tangle(k / 2000.0, th).value;
        for (int k = 1; k < 2000; ++k) worst_dd = std::min(worst_dd, f[k - 1] - 2.0 * f[k] + f[k + 1]);
        const double hi = 1.0 - 1e-6;
        for (int k = 0; k <= 2000; ++k) {
            const double p = th.p_star + (hi - th.p_star) * k / 2000.0;
            worst_concave = std::max(worst_concave, alpha_I_dd(p, n));
        }
    }
    return {worst_dd >= -1e-9 && worst_concave <= 1e-9,
            fmt("min second difference %.3g, max alpha_I'' beyond p* %.3g", worst_dd, worst_concave)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"threshold table", table_one},
        {"closed-form threshold anchors", anchors},
        {"hyperdeterminant vs closed form", hyperdeterminant_grid},
        {"CKW identity on pure states", ckw_pure},
        {"CKW inequality on the family", ckw_mixed},
        {"pairwise concurrence cross-check", wootters},
        {"optimal decomposition reconstruction", decompositions},
        {"characteristic-curve envelope", envelopes},
        {"numerical roof oracle", oracle},
        {"zero-tangle polyhedron decision", zero_polyhedron},
        {"convexity and concavity", convexity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, ""};
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("criterion %2zu %s: %s (%s)\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first,
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
