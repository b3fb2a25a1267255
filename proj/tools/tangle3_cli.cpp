// tangle3: command-line front end for the three-tangle library.
//
// Structured output is one record per line of space-separated key=value
// fields; tabular output is CSV with a header row and 17 significant digits.
// Exit codes: 0 success, 2 bad arguments, 3 CKW violation, 4 out of span.

#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangle3/analytic.hpp"
#include "tangle3/bloch.hpp"
#include "tangle3/errors.hpp"
#include "tangle3/family.hpp"
#include "tangle3/format.hpp"
#include "tangle3/matrix_io.hpp"
#include "tangle3/measures.hpp"
#include "tangle3/roof_oracle.hpp"

using namespace tangle3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitCkw = 3;
constexpr int kExitSpan = 4;

constexpr double kMarginFloor = -1e-9;
constexpr double kFamilyTol = 1e-10;

std::string g17(double x) { return format_g17(x); }

std::string join(const std::vector<double>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += g17(xs[i]);
    }
    return out;
}

const auto order_check = CLI::Validator(
    [](std::string& s) -> std::string {
        double n = 0.0;
        try {
            n = std::stod(s);
        } catch (const std::exception&) {
            return "n must be a number";
        }
        if (!std::isfinite(n) || n < 1.0) return "n must be finite and >= 1";
        return {};
    },
    "N>=1", "order");

void warn_order(double n) {
    if (!is_integer_order(n)) {
        std::cerr << "note: n=" << g17(n) << " is not an integer; the largest-zero property is unvalidated there\n";
    }
}

int cmd_table1(const std::vector<double>& orders) {
    for (const double n : orders) warn_order(n);
    for (const double n : orders) {
        const Thresholds th = compute_thresholds(n);
        std::cout << "n=" << g17(th.n) << " p0=" << g17(th.p0) << " p1=" << g17(th.p1)
                  << " p_star=" << g17(th.p_star) << " p_c=" << g17(th.p_c) << '\n';
    }
    return kExitOk;
}

int cmd_curves(double n, int p_points, int phi_points) {
    warn_order(n);
    const Thresholds th = compute_thresholds(n);
    const CharCurve curve = characteristic_curve(n, p_points, phi_points);
    const PiecewiseLinear env = curve_envelope(curve);
    std::cout << "p,tau_min,tau_analytic,envelope\n";
    for (const auto& pt : curve.points) {
        std::cout << g17(pt.p) << ',' << g17(pt.tau_min) << ',' << g17(mixed_three_tangle(pt.p, th).value) << ','
                  << g17(env(pt.p)) << '\n';
    }
    return kExitOk;
}

int cmd_ckw(double n, int p_points) {
    warn_order(n);
    const CkwReport report = ckw_audit(n, p_points);
    std::cout << "p,one_tangle,conc_sq_sum,tau3,margin\n";
    for (const auto& pt : report.points) {
        std::cout << g17(pt.p) << ',' << g17(pt.one_tangle) << ',' << g17(pt.conc_sq_sum) << ',' << g17(pt.tau3)
                  << ',' << g17(pt.margin) << '\n';
    }
    if (report.min_margin < kMarginFloor) {
        std::cerr << "CKW inequality violated: min margin " << g17(report.min_margin) << '\n';
        return kExitCkw;
    }
    return kExitOk;
}

int cmd_tangle(double p, double n) {
    warn_order(n);
    const auto t = mixed_three_tangle(p, compute_thresholds(n));
    std::cout << "region=" << to_string(t.region) << " value=" << g17(t.value) << '\n';
    return kExitOk;
}

int cmd_decompose(double p, double n) {
    warn_order(n);
    const Thresholds th = compute_thresholds(n);
    const Ensemble ens = optimal_decomposition(p, th);
    const DensityMatrix target = rho(p, (1.0 - p) / n);
    const auto t = mixed_three_tangle(p, th);

    std::cout << "p=" << g17(p) << " n=" << g17(n) << " region=" << to_string(t.region) << " members=" << ens.size()
              << '\n';
    for (std::size_t j = 0; j < ens.size(); ++j) {
        std::cout << "member=" << j << " weight=" << g17(ens[j].weight)
                  << " tau3=" << g17(three_tangle_pure(ens[j].state)) << " amplitudes=";
        for (int i = 0; i < 8; ++i) {
            if (i) std::cout << ';';
            std::cout << g17(ens[j].state[i].real()) << ',' << g17(ens[j].state[i].imag());
        }
        std::cout << '\n';
    }
    std::cout << "avg_tau3=" << g17(average_tangle(ens)) << " analytic=" << g17(t.value)
              << " reconstruction_trace_distance=" << g17(trace_distance(density_from_ensemble(ens), target)) << '\n';
    return kExitOk;
}

int cmd_vanishing(const std::string& path, double n, double tol) {
    warn_order(n);
    const DensityMatrix input = read_density_file(path);
    BlochVector8 v;
    try {
        v = bloch_vector(qutrit_project(input));
    } catch (const OutOfSpan& e) {
        std::cerr << e.what() << '\n';
        std::cout << "inside=out_of_span leakage=" << g17(e.leakage()) << '\n';
        return kExitSpan;
    }
    const double p0 = solve_p0(n);
    const auto vertices = zero_tangle_vertices(n, p0);
    const Membership m = in_zero_polyhedron(v, vertices, tol);
    std::cout << "inside=" << (m.inside ? "true" : "false") << " residual=" << g17(m.residual)
              << " weights=" << join(m.weights, ',') << " p0=" << g17(p0) << '\n';
    return kExitOk;
}

// Recognizes p GHZ + q W + (1 - p - q) W~ and returns (p, n), mapping q = 0 to
// n = 1: that state is rho(p, 1 - p) up to a bit flip on every qubit.
bool family_parameters(const DensityMatrix& input, double& p, double& n) {
    if (input.dim() != 8) return false;
    DensityMatrix sigma = DensityMatrix(Matrix::Identity(3, 3) / 3.0);
    try {
        sigma = qutrit_project(input);
    } catch (const OutOfSpan&) {
        return false;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && std::abs(sigma(i, j)) > kFamilyTol) return false;
    p = sigma(0, 0).real();
    const double q = sigma(1, 1).real();
    n = q > kFamilyTol ? (1.0 - p) / q : 1.0;
    if (1.0 - p <= kFamilyTol) n = 1.0;
    return n >= 1.0 - 1e-9;
}

int cmd_oracle(const std::string& path, int members, int restarts, std::uint64_t seed) {
    const DensityMatrix input = read_density_file(path);
    OracleOptions options;
    options.members = members;
    options.restarts = restarts;
    options.seed = seed;
    const auto result = min_avg_tangle(input, options);
    std::cout << "upper_bound=" << g17(result.upper_bound) << " members=" << result.best_ensemble.size()
              << " restarts_used=" << result.restarts_used << " converged=" << (result.converged ? "true" : "false")
              << '\n';

    double p = 0.0;
    double n = 0.0;
    if (family_parameters(input, p, n)) {
        n = std::max(n, 1.0);
        const double analytic = mixed_three_tangle(p, compute_thresholds(n)).value;
        std::cout << "family_p=" << g17(p) << " family_n=" << g17(n) << " analytic=" << g17(analytic)
                  << " gap=" << g17(result.upper_bound - analytic)
                  << " validated=" << (is_integer_order(std::round(n * 1e9) / 1e9) ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_rho(double p, double q, double n, const std::string& out) {
    if (std::isnan(q)) q = (1.0 - p) / n;
    if (q < 0.0 || p + q > 1.0 + 1e-12) throw BadParams("need q >= 0 and p + q <= 1");
    const DensityMatrix r = rho(p, q);
    if (out.empty() || out == "-") {
        write_matrix(std::cout, r.matrix());
    } else {
        write_density_file(out, r);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-tangle of GHZ/W/flipped-W mixtures: closed forms and numerical checks"};
    app.require_subcommand(1);

    std::vector<double> n_list{1, 2, 3, 10, 100, 1000};
    double n = 2.0;
    double p = 0.5;
    double q = std::numeric_limits<double>::quiet_NaN();
    int p_points = 401;
    int phi_points = 64;
    double tol = 1e-8;
    std::string in_path;
    std::string out_path;
    int members = 0;
    int restarts = 20;
    std::uint64_t seed = 0;

    auto* table1 = app.add_subcommand("table1", "Thresholds p0, p1, p_star, p_c per order n");
    table1->add_option("--n-list", n_list, "Comma-separated orders")->delimiter(',')->check(order_check);

    auto* curves = app.add_subcommand("curves", "Characteristic-curve minimum, analytic tangle and envelope (CSV)");
    curves->add_option("--n", n, "Order n")->required()->check(order_check);
    curves->add_option("--p-points", p_points, "Grid points in p")->check(CLI::Range(2, 1000000));
    curves->add_option("--phi-points", phi_points, "Phase grid per axis")->check(CLI::Range(4, 4096));

    auto* ckw = app.add_subcommand("ckw", "One-tangle, concurrences and three-tangle along the family (CSV)");
    ckw->add_option("--n", n, "Order n")->required()->check(order_check);
    ckw->add_option("--p-points", p_points, "Grid points in p")->check(CLI::Range(2, 1000000));

    auto* tangle = app.add_subcommand("tangle", "Three-tangle of rho(p, (1-p)/n)");
    tangle->add_option("--p", p, "GHZ weight")->required()->check(CLI::Range(0.0, 1.0));
    tangle->add_option("--n", n, "Order n")->required()->check(order_check);

    auto* decompose = app.add_subcommand("decompose", "Optimal decomposition of rho(p, (1-p)/n)");
    decompose->add_option("--p", p, "GHZ weight")->required()->check(CLI::Range(0.0, 1.0));
    decompose->add_option("--n", n, "Order n")->required()->check(order_check);

    auto* vanishing = app.add_subcommand("vanishing", "Zero-tangle polyhedron membership of a density matrix");
    vanishing->add_option("--in", in_path, "Density matrix file")->required();
    vanishing->add_option("--n", n, "Order n")->required()->check(order_check);
    vanishing->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "Numerical upper bound on the three-tangle of a density matrix");
    oracle->add_option("--in", in_path, "Density matrix file")->required();
    oracle->add_option("--m", members, "Ensemble size (0 = automatic)")->check(CLI::Range(0, 8));
    oracle->add_option("--restarts", restarts, "Random restarts per ensemble size")->check(CLI::Range(1, 100000));
    oracle->add_option("--seed", seed, "Master seed");

    auto* rho_cmd = app.add_subcommand("rho", "Write rho(p, q) in the matrix file format");
    rho_cmd->add_option("--p", p, "GHZ weight")->required()->check(CLI::Range(0.0, 1.0));
    auto* q_opt = rho_cmd->add_option("--q", q, "W weight")->check(CLI::Range(0.0, 1.0));
    rho_cmd->add_option("--n", n, "Order n, q = (1-p)/n")->check(order_check)->excludes(q_opt);
    rho_cmd->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgs;
    }

    try {
        if (*table1) return cmd_table1(n_list);
        if (*curves) return cmd_curves(n, p_points, phi_points);
        if (*ckw) return cmd_ckw(n, p_points);
        if (*tangle) return cmd_tangle(p, n);
        if (*decompose) return cmd_decompose(p, n);
        if (*vanishing) return cmd_vanishing(in_path, n, tol);
        if (*oracle) return cmd_oracle(in_path, members, restarts, seed);
        if (*rho_cmd) return cmd_rho(p, q, n, out_path);
    } catch (const OutOfSpan& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSpan;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    }
    return kExitArgs;
}
