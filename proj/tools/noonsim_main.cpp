// noonsim: dephasing, entanglement, and visibility sweeps for two-mode
// N-photon states, written as deterministic CSV.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noonsim/sweep.hpp"

namespace {

struct CliOptions {
    std::vector<int> n_list;
    double gamma1 = 0.5;
    double gamma2 = 0.5;
    std::string state = "noon:0";
    double t_start = 0.0;
    double t_end = 1.0;
    int t_steps = 1;
    int phi_samples = 0;
    double v_crit = noonsim::kDefaultVCrit;
    std::string out;
};

// "noon:<phase>" or "file:<path>"; bare "noon" means phase 0.
noonsim::StateSource parse_state_flag(const std::string& flag) {
    if (flag == "noon") return noonsim::NoonSource{0.0};
    if (flag.rfind("noon:", 0) == 0) {
        const std::string phase_str = flag.substr(5);
        char* end = nullptr;
        const double phase = std::strtod(phase_str.c_str(), &end);
        if (phase_str.empty() || end != phase_str.c_str() + phase_str.size()) {
            throw noonsim::InvalidArgument("invalid phase in --state '" + flag + "'");
        }
        return noonsim::NoonSource{phase};
    }
    if (flag.rfind("file:", 0) == 0) {
        const std::string path = flag.substr(5);
        if (path.empty()) {
            throw noonsim::InvalidArgument("empty path in --state '" + flag + "'");
        }
        return noonsim::FileSource{path};
    }
    throw noonsim::InvalidArgument("--state must be noon:<phase> or file:<path>, got '" +
                                   flag + "'");
}

enum OptionSet : unsigned {
    kOptState = 1u << 0,
    kOptGrid = 1u << 1,       // --t-start/--t-end/--t-steps
    kOptTStart = 1u << 2,     // --t-start only
    kOptPhi = 1u << 3,
    kOptVCrit = 1u << 4,
    kOptNList = 1u << 5,      // --n takes a comma-separated list
};

struct SubcommandState {
    CLI::App* app = nullptr;
    noonsim::Command command{};
    CliOptions opts;
    CLI::Option* n_opt = nullptr;
};

void add_common_options(SubcommandState& sub, unsigned set) {
    CLI::App* cmd = sub.app;
    CliOptions& o = sub.opts;
    if (set & kOptNList) {
        sub.n_opt = cmd->add_option("--n", o.n_list,
                                    "Photon numbers N (comma-separated list)")
                        ->delimiter(',');
    } else {
        sub.n_opt = cmd->add_option("--n", o.n_list, "Total photon number N")
                        ->expected(1);
    }
    cmd->add_option("--gamma1", o.gamma1, "Dephasing rate of mode 1")
        ->capture_default_str();
    cmd->add_option("--gamma2", o.gamma2, "Dephasing rate of mode 2")
        ->capture_default_str();
    if (set & kOptState) {
        cmd->add_option("--state", o.state,
                        "Initial state: noon:<phase> or file:<path>")
            ->capture_default_str();
    }
    if (set & (kOptGrid | kOptTStart)) {
        cmd->add_option("--t-start", o.t_start, "First grid time")
            ->capture_default_str();
    }
    if (set & kOptGrid) {
        cmd->add_option("--t-end", o.t_end, "Last grid time")->capture_default_str();
        cmd->add_option("--t-steps", o.t_steps, "Number of grid times")
            ->capture_default_str();
    }
    if (set & kOptPhi) {
        cmd->add_option("--phi-samples", o.phi_samples,
                        "Phase samples per fringe scan (0: default 8N)")
            ->capture_default_str();
    }
    if (set & kOptVCrit) {
        cmd->add_option("--v-crit", o.v_crit,
                        "Visibility threshold in (0, 1); default exp(-1)");
    }
    cmd->add_option("--out", o.out, "Output CSV path (default: stdout)");
}

noonsim::SweepSpec build_spec(const SubcommandState& sub) {
    noonsim::SweepSpec spec;
    spec.command = sub.command;
    spec.n_list = sub.opts.n_list;
    spec.gamma1 = sub.opts.gamma1;
    spec.gamma2 = sub.opts.gamma2;
    spec.t_grid.start = sub.opts.t_start;
    spec.t_grid.end = sub.opts.t_end;
    spec.t_grid.steps = sub.opts.t_steps;
    spec.phi_samples = sub.opts.phi_samples;
    spec.v_crit = sub.opts.v_crit;
    spec.state_source = parse_state_flag(sub.opts.state);
    spec.output_path = sub.opts.out;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "noonsim: pure dephasing of two-mode N-photon states.\n"
        "Simulates coherence decay, probes entanglement through the partial\n"
        "transpose, and scans fringe visibility. All commands write CSV and\n"
        "are deterministic (NOONSIM_SEED is reserved, currently unused)."};
    app.require_subcommand(1);

    std::vector<SubcommandState> subs(6);
    const struct {
        const char* name;
        const char* help;
        noonsim::Command command;
        unsigned set;
    } table[] = {
        {"evolve", "Density-matrix entries over a time grid",
         noonsim::Command::Evolve, kOptState | kOptGrid},
        {"pt-spectrum", "Partial-transpose spectrum at one time",
         noonsim::Command::PtSpectrum, kOptState | kOptTStart},
        {"negativity-scan", "Entanglement probe over a time grid",
         noonsim::Command::NegativityScan, kOptState | kOptGrid},
        {"visibility-scan", "Fringe visibility over a time grid",
         noonsim::Command::VisibilityScan, kOptState | kOptGrid | kOptPhi},
        {"tcrit", "Critical times for a list of photon numbers",
         noonsim::Command::TCrit, kOptNList | kOptVCrit},
        {"fringe", "Exposure dosage over one fringe period",
         noonsim::Command::Fringe, kOptState | kOptTStart | kOptPhi},
    };
    for (std::size_t i = 0; i < 6; ++i) {
        subs[i].app = app.add_subcommand(table[i].name, table[i].help);
        subs[i].command = table[i].command;
        add_common_options(subs[i], table[i].set);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return noonsim::kExitBadArgs;
    }

    for (const SubcommandState& sub : subs) {
        if (!app.got_subcommand(sub.app)) continue;
        try {
            return noonsim::run(build_spec(sub), std::cout, std::cerr);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return noonsim::kExitBadArgs;
        }
    }
    std::cerr << "error: no command selected\n";
    return noonsim::kExitBadArgs;
}
