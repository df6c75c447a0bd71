#include "noonsim/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "noonsim/errors.hpp"
#include "noonsim/interferometry.hpp"
#include "noonsim/partial_transpose.hpp"
#include "noonsim/state_io.hpp"

namespace noonsim {

namespace {

const char* bool_name(bool b) { return b ? "true" : "false"; }

template <typename... Ts>
bool is_any_of(const std::exception& e) {
    return (... || (dynamic_cast<const Ts*>(&e) != nullptr));
}

int exit_code_for(const std::exception& e) {
    if (is_any_of<ParseError>(e)) return kExitParse;
    if (is_any_of<ValidationFailed, NotNormalized>(e)) return kExitValidation;
    if (is_any_of<NoConvergence, NonHermitianInput>(e)) return kExitNumerical;
    if (is_any_of<InvalidN, InvalidRate, InvalidVCrit, NegativeTime, StepTooLarge,
                  EmptyGrid, UndersampledPhase, InvalidArgument, DimensionMismatch>(e)) {
        return kExitBadArgs;
    }
    return kExitFailure;
}

void check_point(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidArgument("grid times must be finite and >= 0");
    }
}

// Single photon number used by every command except tcrit.
int single_n(const SweepSpec& spec) {
    if (spec.n_list.empty()) throw InvalidArgument("photon number N not set");
    if (spec.n_list.size() > 1) {
        throw InvalidArgument("command '" + command_name(spec.command) +
                              "' takes exactly one N");
    }
    return spec.n_list.front();
}

TwoModeNState initial_state(const SweepSpec& spec) {
    if (const auto* file = std::get_if<FileSource>(&spec.state_source)) {
        TwoModeNState s = parse_state_file(file->path);
        if (!spec.n_list.empty() && spec.n_list.front() != s.n_total()) {
            throw InvalidArgument("state file has N=" + std::to_string(s.n_total()) +
                                  " but N=" + std::to_string(spec.n_list.front()) +
                                  " was requested");
        }
        return s;
    }
    const auto& noon = std::get<NoonSource>(spec.state_source);
    return make_noon(single_n(spec), noon.phase);
}

int resolve_phi_samples(const SweepSpec& spec, int n_total) {
    return spec.phi_samples == 0 ? default_phi_samples(n_total) : spec.phi_samples;
}

void render_evolve(const SweepSpec& spec, std::ostringstream& out) {
    const TwoModeNState s0 = initial_state(spec);
    const DephasingParams p{spec.gamma1, spec.gamma2};
    const int n = s0.n_total();
    out << "t,k,m,re,im\n";
    for (const double t : spec.t_grid.materialize()) {
        const TwoModeNState st = evolve_analytic(s0, p, t);
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                const Complex v = st.rho()(k, m);
                out << fmt17(t) << "," << k << "," << m << "," << fmt17(v.real())
                    << "," << fmt17(v.imag()) << "\n";
            }
        }
    }
}

void render_pt_spectrum(const SweepSpec& spec, std::ostringstream& out) {
    const TwoModeNState s0 = initial_state(spec);
    const DephasingParams p{spec.gamma1, spec.gamma2};
    const double t = spec.t_grid.materialize().front();
    const TwoModeNState st = evolve_analytic(s0, p, t);
    const std::vector<LabeledEigenvalue> eigs =
        labeled_pt_eigenvalues(pt_spectrum_analytic(st));
    out << "index,eigenvalue,provenance\n";
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        out << i << "," << fmt17(eigs[i].value) << "," << eigs[i].provenance << "\n";
    }
}

void render_negativity_scan(const SweepSpec& spec, std::ostringstream& out) {
    const TwoModeNState s0 = initial_state(spec);
    const DephasingParams p{spec.gamma1, spec.gamma2};
    out << "t,negativity,min_eig,log_bound_exponent,entangled,float_underflow\n";
    for (const EsdRecord& r : esd_probe(s0, p, spec.t_grid.materialize())) {
        out << fmt17(r.t) << "," << fmt17(r.negativity) << ","
            << fmt17(r.min_eigenvalue) << "," << fmt17(r.log_bound_exponent) << ","
            << bool_name(r.entangled) << "," << bool_name(r.float_underflow) << "\n";
    }
}

void render_visibility_scan(const SweepSpec& spec, std::ostringstream& out) {
    const TwoModeNState s0 = initial_state(spec);
    const DephasingParams p{spec.gamma1, spec.gamma2};
    const int samples = resolve_phi_samples(spec, s0.n_total());
    out << "t,visibility,dosage_max,dosage_min\n";
    for (const VisibilityRecord& r :
         visibility_curve(s0, p, spec.t_grid.materialize(), samples)) {
        out << fmt17(r.t) << "," << fmt17(r.v) << "," << fmt17(r.dosage_max) << ","
            << fmt17(r.dosage_min) << "\n";
    }
}

void render_fringe(const SweepSpec& spec, std::ostringstream& out) {
    const TwoModeNState s0 = initial_state(spec);
    const DephasingParams p{spec.gamma1, spec.gamma2};
    const double t = spec.t_grid.materialize().front();
    const TwoModeNState st = evolve_analytic(s0, p, t);
    const FringeCurve curve =
        fringe_curve(st, resolve_phi_samples(spec, s0.n_total()), t);
    out << "phi,dosage\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        out << fmt17(curve.phi_grid[i]) << "," << fmt17(curve.values[i]) << "\n";
    }
}

void render_tcrit(const SweepSpec& spec, std::ostringstream& out) {
    if (spec.n_list.empty()) throw InvalidArgument("tcrit requires at least one N");
    const DephasingParams p{spec.gamma1, spec.gamma2};
    const double gamma_eff = p.effective();
    out << "n,gamma_eff,v_crit,t_crit\n";
    for (const int n : spec.n_list) {
        out << n << "," << fmt17(gamma_eff) << "," << fmt17(spec.v_crit) << ","
            << fmt17(t_crit(n, gamma_eff, spec.v_crit)) << "\n";
    }
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Evolve: return "evolve";
        case Command::PtSpectrum: return "pt-spectrum";
        case Command::NegativityScan: return "negativity-scan";
        case Command::VisibilityScan: return "visibility-scan";
        case Command::TCrit: return "tcrit";
        case Command::Fringe: return "fringe";
    }
    return "unknown";
}

std::vector<double> TimeGrid::materialize() const {
    std::vector<double> grid;
    if (!explicit_points.empty()) {
        grid = explicit_points;
    } else {
        if (steps < 1) throw InvalidArgument("t_steps must be >= 1");
        check_point(start);
        if (steps == 1) {
            grid.push_back(start);
        } else {
            check_point(end);
            if (end <= start) {
                throw InvalidArgument("t_end must exceed t_start when t_steps > 1");
            }
            const double h = (end - start) / (steps - 1);
            grid.reserve(steps);
            for (int i = 0; i < steps - 1; ++i) grid.push_back(start + i * h);
            grid.push_back(end);
        }
    }
    if (grid.empty()) throw EmptyGrid("empty time grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        check_point(grid[i]);
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw InvalidArgument("grid must be strictly increasing");
        }
    }
    return grid;
}

std::string render_csv(const SweepSpec& spec) {
    std::ostringstream out;
    switch (spec.command) {
        case Command::Evolve: render_evolve(spec, out); break;
        case Command::PtSpectrum: render_pt_spectrum(spec, out); break;
        case Command::NegativityScan: render_negativity_scan(spec, out); break;
        case Command::VisibilityScan: render_visibility_scan(spec, out); break;
        case Command::TCrit: render_tcrit(spec, out); break;
        case Command::Fringe: render_fringe(spec, out); break;
    }
    return out.str();
}

int run(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        const std::string csv = render_csv(spec);
        if (spec.output_path.empty()) {
            out << csv;
            out.flush();
            if (!out) throw Error("write to output stream failed");
        } else {
            std::ofstream file(spec.output_path, std::ios::binary);
            if (!file) throw Error("cannot open '" + spec.output_path + "' for writing");
            file << csv;
            file.flush();
            if (!file) throw Error("write failed for '" + spec.output_path + "'");
        }
        return kExitSuccess;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace noonsim
