// partial_transpose.hpp
// Partial transpose over mode 2, its spectrum, and the entanglement probes
// built on it. A negative eigenvalue of the partial transpose certifies
// entanglement.
//
// The transposed matrix splits into the N+1 diagonal entries plus
// N(N+1)/2 independent 2x2 coherence blocks, each spanning
// {|N-k, m>, |N-m, k>} with eigenvalues +|rho_km| and -|rho_km|. The
// analytic spectrum is assembled from that decomposition; the dense
// Jacobi solver provides the independent cross-check.

#pragma once

#include <string>
#include <vector>

#include "noonsim/dephasing.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Float-level entanglement detection threshold on the minimum eigenvalue.
inline constexpr double kEntangledFloatThreshold = -1e-14;

// One 2x2 coherence block of the partially transposed state.
struct PTBlock {
    int k = 0;               // k < m
    int m = 0;
    double magnitude = 0.0;  // |rho_km|
    double phase = 0.0;      // arg(rho_km), 0 when magnitude == 0
};

// Full spectrum of the partial transpose with per-eigenvalue provenance.
struct PTSpectrum {
    std::vector<double> diagonal_part;    // rho_kk, k = 0..N
    std::vector<PTBlock> block_part;      // (k, m) lexicographic, k < m
    std::vector<double> all_eigenvalues;  // (N+1)^2 values, ascending
    double min_eigenvalue = 0.0;          // min(-max block magnitude, min diagonal)
    double negativity = 0.0;              // sum of block magnitudes
};

struct LabeledEigenvalue {
    double value = 0.0;
    std::string provenance;  // "diag:k", "block:k:m:+", "block:k:m:-"
};

// Entanglement report at one probe time.
struct EsdRecord {
    double t = 0.0;
    double negativity = 0.0;
    double min_eigenvalue = 0.0;      // floating-point path
    double log_bound_exponent = 0.0;  // ln of the decayed max coherence; -inf if none
    bool entangled = false;           // exact: some initial coherence is nonzero
    bool entangled_float = false;     // min_eigenvalue < kEntangledFloatThreshold
    bool float_underflow = false;     // coherences underflowed to 0, bound still finite
};

// Row index of |a, b> (a photons in mode 1, b in mode 2) in the truncated
// two-mode basis with occupations 0..N per mode.
inline int pt_basis_index(int n_total, int mode1_occ, int mode2_occ) {
    return mode1_occ * (n_total + 1) + mode2_occ;
}

// The (N+1)^2-dimensional matrix of the partial transpose: rho_kk stays on
// |N-k, k><N-k, k|; the (k, m) coherence moves to |N-k, m><N-m, k|.
ComplexMatrix partial_transpose_matrix(const TwoModeNState& s);

// Spectrum from the block decomposition; no eigensolver involved.
PTSpectrum pt_spectrum_analytic(const TwoModeNState& s);

// Dense-eigensolver spectrum of partial_transpose_matrix(s).
Spectrum pt_spectrum_numeric(const TwoModeNState& s);

// Sum over k < m of |rho_km|; positive iff any coherence is nonzero.
double negativity(const TwoModeNState& s);

// All eigenvalues with provenance labels, ascending.
std::vector<LabeledEigenvalue> labeled_pt_eigenvalues(const PTSpectrum& spec);

// Dephase s0 to each grid time and report the minimum eigenvalue, the
// log-space decay bound, and the entanglement flags. Throws EmptyGrid,
// InvalidArgument for a non-increasing or negative grid.
std::vector<EsdRecord> esd_probe(const TwoModeNState& s0, const DephasingParams& p,
                                 const std::vector<double>& t_grid);

}  // namespace noonsim
