// dephasing.hpp
// Pure dephasing of two-mode N-photon states: populations are untouched,
// the (k, m) coherence decays as exp(-(k-m)^2 (Gamma1+Gamma2) t / 2).
// The closed form is the production path; a matrix-valued RK4 integration
// of the generator serves as its independent oracle.

#pragma once

#include "noonsim/state.hpp"

namespace noonsim {

// Independent dephasing rates of the two modes (inverse time).
struct DephasingParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;

    double total() const { return gamma1 + gamma2; }
    // Single-rate convention used by the visibility formulas: when
    // gamma1 == gamma2 == Gamma this is exactly Gamma.
    double effective() const { return 0.5 * (gamma1 + gamma2); }
};

// Closed-form evolution. Diagonal entries are copied bit-for-bit; both
// triangles of each coherence pair are scaled by the same real factor, so
// Hermiticity and trace are preserved exactly. Throws NegativeTime,
// InvalidRate.
TwoModeNState evolve_analytic(const TwoModeNState& s0, const DephasingParams& p,
                              double t);

// d(rho)/dt of the dephasing flow: -(k-m)^2 (Gamma1+Gamma2)/2 * rho_km off
// the diagonal, exactly zero on it.
ComplexMatrix generator_apply(const TwoModeNState& s, const DephasingParams& p);

// Classic RK4 integration of the generator over [0, t] in `steps` equal
// steps. Requires h * r_max <= 0.1 with r_max = N^2 (Gamma1+Gamma2)/2
// (throws StepTooLarge otherwise).
TwoModeNState evolve_numeric(const TwoModeNState& s0, const DephasingParams& p,
                             double t, int steps);

// Step count keeping the RK4 defect well under 1e-8 elementwise:
// ceil(50 * t * r_max), at least 1, i.e. h * r_max <= 0.02.
int recommended_steps(int n_total, const DephasingParams& p, double t);

}  // namespace noonsim
