#include "noonsim/interferometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "noonsim/errors.hpp"

namespace noonsim {

namespace {

std::vector<double> uniform_phi_grid(int samples) {
    std::vector<double> grid(samples);
    const double step = 2.0 * std::numbers::pi / samples;
    for (int j = 0; j < samples; ++j) grid[j] = j * step;
    return grid;
}

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw EmptyGrid("empty time grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || !std::isfinite(t_grid[i])) {
            throw InvalidArgument("grid times must be finite and >= 0");
        }
        if (i > 0 && t_grid[i] <= t_grid[i - 1]) {
            throw InvalidArgument("grid must be strictly increasing");
        }
    }
}

}  // namespace

double fringe(const TwoModeNState& s_t, double phi) {
    const int n = s_t.n_total();
    const Complex extreme = s_t.coherence(n, 0);  // <0,N| rho |N,0>
    const double arg = static_cast<double>(n) * phi;
    const Complex rotated = Complex{std::cos(arg), std::sin(arg)} * extreme;
    return 1.0 + 2.0 * rotated.real();
}

VisibilityRecord visibility(const TwoModeNState& s_t, int phi_samples, double t) {
    const int n = s_t.n_total();
    if (phi_samples < 4 * n) {
        throw UndersampledPhase("need at least 4N phase samples, got " +
                                std::to_string(phi_samples));
    }

    // The sampled fringe is dc + amp * cos(N phi + theta). With more than
    // 2N samples per period the N-th discrete Fourier coefficient isolates
    // that harmonic exactly, which puts the extrema at dc +/- amp without
    // requiring a grid point to land on them.
    const std::vector<double> grid = uniform_phi_grid(phi_samples);
    double dc = 0.0;
    Complex harmonic{0.0, 0.0};
    for (int j = 0; j < phi_samples; ++j) {
        const double value = fringe(s_t, grid[j]);
        const double arg = static_cast<double>(n) * grid[j];
        dc += value;
        harmonic += value * Complex{std::cos(arg), -std::sin(arg)};
    }
    dc /= phi_samples;
    const double amp = 2.0 * std::abs(harmonic) / phi_samples;

    VisibilityRecord rec;
    rec.t = t;
    rec.dosage_max = dc + amp;
    rec.dosage_min = dc - amp;
    rec.v = std::clamp(amp / dc, 0.0, 1.0);
    return rec;
}

double t_crit(int n_total, double gamma, double v_crit) {
    if (n_total < 1) throw InvalidN("photon number N must be >= 1");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidRate("gamma must be finite and > 0");
    }
    if (!(v_crit > 0.0 && v_crit < 1.0)) {
        throw InvalidVCrit("v_crit must lie in (0, 1)");
    }
    const double n_sq = static_cast<double>(n_total) * n_total;
    return -std::log(v_crit) / (gamma * n_sq);
}

std::vector<VisibilityRecord> visibility_curve(const TwoModeNState& s0,
                                               const DephasingParams& p,
                                               const std::vector<double>& t_grid,
                                               int phi_samples) {
    check_grid(t_grid);
    if (phi_samples == 0) phi_samples = default_phi_samples(s0.n_total());
    std::vector<VisibilityRecord> curve;
    curve.reserve(t_grid.size());
    for (const double t : t_grid) {
        curve.push_back(visibility(evolve_analytic(s0, p, t), phi_samples, t));
    }
    return curve;
}

FringeCurve fringe_curve(const TwoModeNState& s_t, int phi_samples, double t) {
    const int n = s_t.n_total();
    if (phi_samples < 4 * n) {
        throw UndersampledPhase("need at least 4N phase samples, got " +
                                std::to_string(phi_samples));
    }
    FringeCurve curve;
    curve.t = t;
    curve.phi_grid = uniform_phi_grid(phi_samples);
    curve.values.reserve(phi_samples);
    for (const double phi : curve.phi_grid) {
        curve.values.push_back(fringe(s_t, phi));
    }
    return curve;
}

}  // namespace noonsim
