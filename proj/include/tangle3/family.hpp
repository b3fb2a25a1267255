#pragma once

#include "tangle3/analytic.hpp"
#include "tangle3/states.hpp"

namespace tangle3 {

PureState3 ghz();        // (|000> + |111>)/sqrt2
PureState3 ghz_minus();  // (|000> - |111>)/sqrt2
PureState3 w();          // (|001> + |010> + |100>)/sqrt3
PureState3 w_tilde();    // (|110> + |101> + |011>)/sqrt3

/// Parameters of Z(p, q, phi1, phi2) = sqrt(p) GHZ - e^{i phi1} sqrt(q) W - e^{i phi2} sqrt(1-p-q) W~.
struct ZParams {
    double p;
    double q;
    double phi1 = 0.0;
    double phi2 = 0.0;
};

/// The three phase pairs of the symmetric ensemble: (0,0), (2pi/3,4pi/3), (4pi/3,2pi/3).
struct PhasePair {
    double phi1;
    double phi2;
};
extern const PhasePair kSymmetricPhases[3];

PureState3 z_state(const ZParams& params);

/// Closed-form three-tangle of z_state(params).
double z_tangle_closed(const ZParams& params);

/// p GHZ + q W + (1 - p - q) W~.
DensityMatrix rho(double p, double q);

/// Equal-weight ensemble of the three symmetric Z states; reconstructs rho(p, q).
Ensemble symmetric_ensemble(double p, double q);

/// Optimal decomposition of rho(p, (1-p)/th.n), chosen by region. Zero-weight
/// members are omitted.
Ensemble optimal_decomposition(double p, const Thresholds& th);

/// p GHZ+ + (1-p)/n W + (n-1)(1-p)/n GHZ-; n may be +infinity (drops the W term).
DensityMatrix pi_state(double p, double n);

/// True when n is a positive integer; only those orders carry the proven
/// largest-zero property, other values are accepted but unvalidated.
bool is_integer_order(double n);

}  // namespace tangle3
