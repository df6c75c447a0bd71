// state.hpp
// Two-mode N-photon density matrices in the basis k <-> |N-k, k>, i.e.
// index k means N-k photons in mode 1 and k photons in mode 2.

#pragma once

#include <string>
#include <vector>

#include "noonsim/linalg.hpp"

namespace noonsim {

// Validation tolerances for physical density matrices.
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kCauchySchwarzTol = 1e-10;
inline constexpr double kNormalizationTol = 1e-12;

// Amplitudes c_k of the pure state sum_k c_k |N-k, k>.
struct PureCoefficients {
    int n_total = 0;
    std::vector<Complex> coeffs;  // size n_total + 1
};

struct CheckResult {
    bool passed = false;
    double residual = 0.0;
};

// Per-invariant result of validating a candidate density matrix.
struct ValidationReport {
    CheckResult hermiticity;     // max |rho_km - conj(rho_mk)|
    CheckResult trace;           // |tr(rho) - 1|
    CheckResult positivity;      // max(0, -lambda_min)
    CheckResult cauchy_schwarz;  // max_k<m (|rho_km| - sqrt(rho_kk rho_mm))

    bool all_passed() const {
        return hermiticity.passed && trace.passed && positivity.passed &&
               cauchy_schwarz.passed;
    }
    std::string summary() const;
};

// Density matrix of N photons shared across two bosonic modes.
// rho(k, m) = <N-k, k| rho |N-m, m>. Immutable after construction.
class TwoModeNState {
public:
    // Validates the matrix (Hermiticity, unit trace, positivity,
    // Cauchy-Schwarz); throws ValidationFailed with the report summary,
    // InvalidN if n_total < 1, DimensionMismatch if rho is not
    // (n_total+1) x (n_total+1).
    TwoModeNState(int n_total, ComplexMatrix rho);

    int n_total() const { return n_total_; }
    int dim() const { return n_total_ + 1; }
    const ComplexMatrix& rho() const { return rho_; }
    Complex coherence(int k, int m) const { return rho_(k, m); }

    // tr(rho^2), in [1/(N+1), 1] for valid states
    double purity() const;

    // Skips validation; for construction paths that preserve the
    // invariants by algebra (NOON/pure builders, dephasing evolution).
    static TwoModeNState unchecked(int n_total, ComplexMatrix rho);

private:
    struct UncheckedTag {};
    TwoModeNState(UncheckedTag, int n_total, ComplexMatrix rho);

    int n_total_;
    ComplexMatrix rho_;
};

// (|N,0> + e^{iN phase}|0,N>)/sqrt(2) as a density matrix.
TwoModeNState make_noon(int n_total, double phase);

// rho = c c^dagger. Throws NotNormalized if sum |c_k|^2 deviates from 1
// beyond kNormalizationTol and auto_normalize is off.
TwoModeNState from_pure(const PureCoefficients& c, bool auto_normalize = false);

ValidationReport validate(const ComplexMatrix& rho);
ValidationReport validate(const TwoModeNState& s);

}  // namespace noonsim
