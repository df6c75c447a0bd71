// interferometry.hpp
// Fringe pattern and visibility of a two-mode N-photon state read out
// interferometrically. The exposure dosage is modeled at the coherence
// level, <delta>(phi) = 1 + 2 Re(e^{iN phi} rho_N0), which for a dephased
// balanced NOON state gives 1 + e^{-N^2 Gamma t} cos(N phi): an N-fold
// compressed fringe whose contrast decays as e^{-N^2 Gamma t}.

#pragma once

#include <vector>

#include "noonsim/dephasing.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Exposure-dosage samples over a phase grid at one evaluation time.
struct FringeCurve {
    std::vector<double> phi_grid;
    std::vector<double> values;
    double t = 0.0;
};

// Fringe contrast at one time: v = (max - min) / (max + min).
struct VisibilityRecord {
    double t = 0.0;
    double v = 0.0;
    double dosage_max = 0.0;
    double dosage_min = 0.0;
};

// <delta>(phi) = 1 + 2 Re(e^{iN phi} rho_N0).
double fringe(const TwoModeNState& s_t, double phi);

// Samples the fringe on a uniform phi grid over [0, 2pi) and recovers its
// extrema from the single cos(N phi) harmonic the samples contain; with
// phi_samples >= 4N the recovery is exact for this fringe model, so
// v equals 2 |rho_N0| for any input state. Throws UndersampledPhase if
// phi_samples < 4N.
VisibilityRecord visibility(const TwoModeNState& s_t, int phi_samples, double t = 0.0);

// ln(1/v_crit) / (gamma N^2): the time for a dephasing NOON state's
// visibility to fall to v_crit. Throws InvalidVCrit unless
// 0 < v_crit < 1, InvalidRate unless gamma > 0, InvalidN unless N >= 1.
double t_crit(int n_total, double gamma, double v_crit);

// Dephase s0 to each grid time and measure the visibility there.
// Throws EmptyGrid, InvalidArgument for a non-increasing or negative grid.
std::vector<VisibilityRecord> visibility_curve(const TwoModeNState& s0,
                                               const DephasingParams& p,
                                               const std::vector<double>& t_grid,
                                               int phi_samples = 0);

// The raw fringe samples on the uniform [0, 2pi) grid.
FringeCurve fringe_curve(const TwoModeNState& s_t, int phi_samples, double t = 0.0);

// 8N, the CLI default sampling density.
inline int default_phi_samples(int n_total) { return 8 * n_total; }

}  // namespace noonsim
