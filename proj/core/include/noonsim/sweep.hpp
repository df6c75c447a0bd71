// sweep.hpp
// Headless orchestration behind the CLI: a SweepSpec describes one run of
// one command; run() renders the corresponding CSV and maps library errors
// onto process exit codes. Identical specs render byte-identical CSVs.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "noonsim/dephasing.hpp"

namespace noonsim {

enum class Command {
    Evolve,          // density matrix entries over the time grid
    PtSpectrum,      // labeled partial-transpose spectrum at one time
    NegativityScan,  // entanglement probe over the time grid
    VisibilityScan,  // fringe contrast over the time grid
    TCrit,           // critical times for a list of N
    Fringe,          // dosage over the phase grid at one time
};

std::string command_name(Command c);

// Time grid: either explicit points or a uniform [start, end] span with
// `steps` points (endpoints included; steps == 1 means just {start}).
struct TimeGrid {
    double start = 0.0;
    double end = 0.0;
    int steps = 1;
    std::vector<double> explicit_points;

    // The concrete grid, validated: nonempty, finite, nonnegative,
    // strictly increasing. Throws InvalidArgument / EmptyGrid.
    std::vector<double> materialize() const;
};

struct NoonSource {
    double phase = 0.0;
};
struct FileSource {
    std::string path;
};
using StateSource = std::variant<NoonSource, FileSource>;

// exp(-1) to the nearest double; default visibility threshold.
inline constexpr double kDefaultVCrit = 0.36787944117144233;

struct SweepSpec {
    Command command = Command::Evolve;
    // Photon numbers: tcrit emits one row per entry; the other commands use
    // the single entry (a file-sourced state must agree with it if given).
    std::vector<int> n_list;
    double gamma1 = 0.5;
    double gamma2 = 0.5;
    TimeGrid t_grid;
    int phi_samples = 0;  // 0: default 8N
    double v_crit = kDefaultVCrit;
    StateSource state_source = NoonSource{};
    std::string output_path;  // empty: write to the stream passed to run()
};

// Process exit codes (also returned by run()).
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;     // I/O or unexpected error
inline constexpr int kExitParse = 2;       // state-file syntax
inline constexpr int kExitValidation = 3;  // not a density matrix
inline constexpr int kExitNumerical = 4;   // eigensolver failure
inline constexpr int kExitBadArgs = 5;     // precondition violation

// The CSV bytes for one spec, header line included. Throws on any error.
std::string render_csv(const SweepSpec& spec);

// Renders and writes the CSV (to output_path, or to `out` when the path is
// empty). Never throws: errors become a "error: ..." line on `err` and a
// nonzero exit code.
int run(const SweepSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace noonsim
