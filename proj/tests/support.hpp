// Shared generators for randomized tests. Seeds are fixed so failures
// reproduce; the values themselves are arbitrary.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "noonsim/state.hpp"

namespace noonsim::testing {

inline ComplexMatrix random_hermitian(int dim, std::mt19937& gen, double scale = 1.0) {
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = Complex{nd(gen), 0.0};
        for (int j = i + 1; j < dim; ++j) {
            m(i, j) = Complex{nd(gen), nd(gen)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

// rho = G G^dagger / tr(G G^dagger): Hermitian, PSD, unit trace, and
// generically full rank with every coherence nonzero.
inline TwoModeNState random_state(int n_total, std::mt19937& gen) {
    const int dim = n_total + 1;
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<Complex> g(static_cast<std::size_t>(dim) * dim);
    for (auto& e : g) e = Complex{nd(gen), nd(gen)};

    ComplexMatrix rho(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex sum{0.0, 0.0};
            for (int l = 0; l < dim; ++l) {
                sum += g[static_cast<std::size_t>(i) * dim + l] *
                       std::conj(g[static_cast<std::size_t>(j) * dim + l]);
            }
            rho(i, j) = sum;
        }
    }
    const double tr = rho.trace().real();
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) rho(i, j) /= tr;
    }
    return TwoModeNState(n_total, std::move(rho));
}

// Random diagonal (separable) state.
inline TwoModeNState random_diagonal_state(int n_total, std::mt19937& gen) {
    const int dim = n_total + 1;
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> w(dim);
    double tr = 0.0;
    for (auto& x : w) {
        const double v = nd(gen);
        x = v * v + 1e-3;
        tr += x;
    }
    ComplexMatrix rho(dim);
    for (int i = 0; i < dim; ++i) rho(i, i) = Complex{w[i] / tr, 0.0};
    return TwoModeNState(n_total, std::move(rho));
}

// Normalized coefficients; with min_mag > 0, every |c_k| stays above it
// (rejection sampling), keeping all coherences bounded away from zero.
inline PureCoefficients random_pure(int n_total, std::mt19937& gen,
                                    double min_mag = 0.0) {
    std::normal_distribution<double> nd(0.0, 1.0);
    PureCoefficients c;
    c.n_total = n_total;
    for (;;) {
        c.coeffs.assign(n_total + 1, Complex{});
        double norm_sq = 0.0;
        for (auto& a : c.coeffs) {
            a = Complex{nd(gen), nd(gen)};
            norm_sq += std::norm(a);
        }
        const double inv = 1.0 / std::sqrt(norm_sq);
        bool ok = true;
        for (auto& a : c.coeffs) {
            a *= inv;
            ok = ok && std::abs(a) >= min_mag;
        }
        if (ok) return c;
    }
}

inline std::vector<Complex> random_unit_vector(int dim, std::mt19937& gen) {
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<Complex> x(dim);
    double norm_sq = 0.0;
    for (auto& e : x) {
        e = Complex{nd(gen), nd(gen)};
        norm_sq += std::norm(e);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& e : x) e *= inv;
    return x;
}

}  // namespace noonsim::testing
