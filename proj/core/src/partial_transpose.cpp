#include "noonsim/partial_transpose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace noonsim {

ComplexMatrix partial_transpose_matrix(const TwoModeNState& s) {
    const int n = s.n_total();
    const int dim = (n + 1) * (n + 1);
    ComplexMatrix sigma(dim);
    for (int k = 0; k <= n; ++k) {
        const int diag = pt_basis_index(n, n - k, k);
        sigma(diag, diag) = s.coherence(k, k);
        for (int m = 0; m <= n; ++m) {
            if (m == k) continue;
            // |N-k, m><N-m, k| carries rho_km; the (m, k) term fills the
            // conjugate position, so sigma is Hermitian by construction.
            const int row = pt_basis_index(n, n - k, m);
            const int col = pt_basis_index(n, n - m, k);
            sigma(row, col) = s.coherence(k, m);
        }
    }
    return sigma;
}

PTSpectrum pt_spectrum_analytic(const TwoModeNState& s) {
    const int n = s.n_total();
    PTSpectrum spec;
    spec.diagonal_part.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        spec.diagonal_part.push_back(s.coherence(k, k).real());
    }
    spec.block_part.reserve(n * (n + 1) / 2);
    for (int k = 0; k <= n; ++k) {
        for (int m = k + 1; m <= n; ++m) {
            const Complex c = s.coherence(k, m);
            const double mag = std::abs(c);
            PTBlock block;
            block.k = k;
            block.m = m;
            block.magnitude = mag;
            block.phase = mag == 0.0 ? 0.0 : std::arg(c);
            spec.block_part.push_back(block);
        }
    }

    spec.all_eigenvalues.reserve((n + 1) * (n + 1));
    spec.all_eigenvalues = spec.diagonal_part;
    double max_mag = 0.0;
    double neg = 0.0;
    for (const PTBlock& b : spec.block_part) {
        spec.all_eigenvalues.push_back(-b.magnitude);
        spec.all_eigenvalues.push_back(b.magnitude);
        max_mag = std::max(max_mag, b.magnitude);
        neg += b.magnitude;
    }
    std::sort(spec.all_eigenvalues.begin(), spec.all_eigenvalues.end());

    const double min_diag =
        *std::min_element(spec.diagonal_part.begin(), spec.diagonal_part.end());
    spec.min_eigenvalue = std::min(-max_mag, min_diag);
    spec.negativity = neg;
    return spec;
}

Spectrum pt_spectrum_numeric(const TwoModeNState& s) {
    return hermitian_eigenvalues(partial_transpose_matrix(s));
}

double negativity(const TwoModeNState& s) {
    const int n = s.n_total();
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        for (int m = k + 1; m <= n; ++m) sum += std::abs(s.coherence(k, m));
    }
    return sum;
}

std::vector<LabeledEigenvalue> labeled_pt_eigenvalues(const PTSpectrum& spec) {
    std::vector<LabeledEigenvalue> out;
    out.reserve(spec.diagonal_part.size() + 2 * spec.block_part.size());
    for (std::size_t k = 0; k < spec.diagonal_part.size(); ++k) {
        out.push_back({spec.diagonal_part[k], "diag:" + std::to_string(k)});
    }
    for (const PTBlock& b : spec.block_part) {
        const std::string tag = std::to_string(b.k) + ":" + std::to_string(b.m);
        out.push_back({-b.magnitude, "block:" + tag + ":-"});
        out.push_back({b.magnitude, "block:" + tag + ":+"});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const LabeledEigenvalue& a, const LabeledEigenvalue& b) {
                         return a.value < b.value;
                     });
    return out;
}

std::vector<EsdRecord> esd_probe(const TwoModeNState& s0, const DephasingParams& p,
                                 const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw EmptyGrid("esd_probe: empty time grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || !std::isfinite(t_grid[i])) {
            throw InvalidArgument("esd_probe: grid times must be finite and >= 0");
        }
        if (i > 0 && t_grid[i] <= t_grid[i - 1]) {
            throw InvalidArgument("esd_probe: grid must be strictly increasing");
        }
    }

    // Initial coherences in log space: the analytic magnitude at time t is
    // exp(log|rho_km(0)| - rate_km * t), finite for every finite t as long
    // as one coherence starts nonzero. That is the exact no-death
    // statement, immune to double underflow.
    const int n = s0.n_total();
    struct Channel {
        double log_mag0;
        double rate;
    };
    std::vector<Channel> channels;
    const double gamma_total = p.gamma1 + p.gamma2;
    for (int k = 0; k <= n; ++k) {
        for (int m = k + 1; m <= n; ++m) {
            const double mag = std::abs(s0.coherence(k, m));
            if (mag > 0.0) {
                const double diff = static_cast<double>(m - k);
                channels.push_back({std::log(mag), 0.5 * diff * diff * gamma_total});
            }
        }
    }
    const bool any_coherence = !channels.empty();

    std::vector<EsdRecord> records;
    records.reserve(t_grid.size());
    for (const double t : t_grid) {
        const TwoModeNState st = evolve_analytic(s0, p, t);
        const PTSpectrum spec = pt_spectrum_analytic(st);

        EsdRecord rec;
        rec.t = t;
        rec.negativity = spec.negativity;
        rec.min_eigenvalue = spec.min_eigenvalue;
        double bound = -std::numeric_limits<double>::infinity();
        for (const Channel& ch : channels) {
            bound = std::max(bound, ch.log_mag0 - ch.rate * t);
        }
        rec.log_bound_exponent = bound;
        rec.entangled = any_coherence;
        rec.entangled_float = spec.min_eigenvalue < kEntangledFloatThreshold;

        double max_mag = 0.0;
        for (const PTBlock& b : spec.block_part) {
            max_mag = std::max(max_mag, b.magnitude);
        }
        rec.float_underflow = any_coherence && max_mag == 0.0;
        records.push_back(rec);
    }
    return records;
}

}  // namespace noonsim
