#include "tangle3/family.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "tangle3/errors.hpp"

namespace tangle3 {

namespace {

constexpr double kParamTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

PureState3 basis_combination(std::initializer_list<std::pair<int, cplx>> terms) {
    Amplitudes a{};
    for (const auto& [index, value] : terms) a[index] = value;
    return PureState3::from_amplitudes(a);
}

void require_pq(double p, double q) {
    if (!(p >= 0.0 && q >= 0.0 && p <= 1.0 + kParamTol && p + q <= 1.0 + kParamTol)) {
        throw BadParams("need p, q >= 0 and p + q <= 1, got p=" + std::to_string(p) +
                        " q=" + std::to_string(q));
    }
}

double remainder(double p, double q) { return std::max(1.0 - p - q, 0.0); }

}  // namespace

const PhasePair kSymmetricPhases[3] = {
    {0.0, 0.0},
    {2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0},
    {4.0 * std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0},
};

PureState3 ghz() { return basis_combination({{0, kInvSqrt2}, {7, kInvSqrt2}}); }
PureState3 ghz_minus() { return basis_combination({{0, kInvSqrt2}, {7, -kInvSqrt2}}); }
PureState3 w() { return basis_combination({{1, kInvSqrt3}, {2, kInvSqrt3}, {4, kInvSqrt3}}); }
PureState3 w_tilde() { return basis_combination({{6, kInvSqrt3}, {5, kInvSqrt3}, {3, kInvSqrt3}}); }

PureState3 z_state(const ZParams& params) {
    require_pq(params.p, params.q);
    const cplx c_ghz = std::sqrt(params.p);
    const cplx c_w = -std::polar(std::sqrt(params.q), params.phi1);
    const cplx c_wt = -std::polar(std::sqrt(remainder(params.p, params.q)), params.phi2);
    const Amplitudes g = ghz().amps();
    const Amplitudes a = w().amps();
    const Amplitudes b = w_tilde().amps();
    Amplitudes z;
    for (std::size_t i = 0; i < 8; ++i) z[i] = c_ghz * g[i] + c_w * a[i] + c_wt * b[i];
    return PureState3::from_amplitudes(z);
}

double z_tangle_closed(const ZParams& params) {
    require_pq(params.p, params.q);
    const double p = params.p;
    const double q = params.q;
    const double r = remainder(p, q);
    const double sum = params.phi1 + params.phi2;
    const double c = 8.0 * std::sqrt(6.0) / 9.0;
    const cplx value = p * p - 4.0 * p * std::sqrt(q * r) * std::polar(1.0, sum) -
                       4.0 / 3.0 * q * r * std::polar(1.0, 2.0 * sum) -
                       c * std::sqrt(p * q * q * q) * std::polar(1.0, 3.0 * params.phi1) -
                       c * std::sqrt(p * r * r * r) * std::polar(1.0, 3.0 * params.phi2);
    return std::abs(value);
}

DensityMatrix rho(double p, double q) {
    require_pq(p, q);
    const Vector g = ghz().vector();
    const Vector a = w().vector();
    const Vector b = w_tilde().vector();
    const Matrix m = p * g * g.adjoint() + q * a * a.adjoint() + remainder(p, q) * b * b.adjoint();
    return DensityMatrix(m);
}

Ensemble symmetric_ensemble(double p, double q) {
    require_pq(p, q);
    std::vector<EnsembleMember> members;
    for (const auto& phases : kSymmetricPhases) {
        members.push_back({1.0 / 3.0, z_state({p, q, phases.phi1, phases.phi2})});
    }
    return Ensemble(std::move(members));
}

Ensemble optimal_decomposition(double p, const Thresholds& th) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadParams("p must lie in [0, 1]");
    if (!(th.n >= 1.0) || !(th.p0 > 0.0) || !(th.p1 < 1.0)) throw BadParams("invalid thresholds");
    const double n = th.n;
    std::vector<EnsembleMember> members;
    auto add = [&](double weight, const PureState3& state) {
        if (weight > 0.0) members.push_back({weight, state});
    };

    if (p <= th.p0) {
        const double q0 = (1.0 - th.p0) / n;
        for (const auto& phases : kSymmetricPhases) {
            add(p / (3.0 * th.p0), z_state({th.p0, q0, phases.phi1, phases.phi2}));
        }
        add((th.p0 - p) / (n * th.p0), w());
        add((n - 1.0) * (th.p0 - p) / (n * th.p0), w_tilde());
    } else if (p < th.p1) {
        return symmetric_ensemble(p, (1.0 - p) / n);
    } else {
        const double q1 = (1.0 - th.p1) / n;
        add((p - th.p1) / (1.0 - th.p1), ghz());
        for (const auto& phases : kSymmetricPhases) {
            add((1.0 - p) / (3.0 * (1.0 - th.p1)), z_state({th.p1, q1, phases.phi1, phases.phi2}));
        }
    }
    return Ensemble(std::move(members));
}

DensityMatrix pi_state(double p, double n) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadParams("p must lie in [0, 1]");
    if (!(n >= 1.0)) throw BadParams("n must be >= 1 (or +infinity)");
    const double w_weight = std::isinf(n) ? 0.0 : (1.0 - p) / n;
    const double minus_weight = (1.0 - p) - w_weight;
    const Vector plus = ghz().vector();
    const Vector minus = ghz_minus().vector();
    const Vector a = w().vector();
    const Matrix m =
        p * plus * plus.adjoint() + w_weight * a * a.adjoint() + minus_weight * minus * minus.adjoint();
    return DensityMatrix(m);
}

bool is_integer_order(double n) { return n >= 1.0 && std::isfinite(n) && n == std::floor(n); }

}  // namespace tangle3
