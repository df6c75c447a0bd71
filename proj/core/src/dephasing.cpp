#include "noonsim/dephasing.hpp"

#include <cmath>
#include <string>

namespace noonsim {

namespace {

void check_rates(const DephasingParams& p) {
    if (!(p.gamma1 >= 0.0) || !std::isfinite(p.gamma1) ||
        !(p.gamma2 >= 0.0) || !std::isfinite(p.gamma2)) {
        throw InvalidRate("dephasing rates must be finite and >= 0");
    }
}

double decay_rate(int k, int m, double gamma_total) {
    const double diff = static_cast<double>(k - m);
    return 0.5 * diff * diff * gamma_total;
}

ComplexMatrix generator_matrix(const ComplexMatrix& rho, double gamma_total) {
    const int dim = rho.dim();
    ComplexMatrix deriv(dim);
    for (int k = 0; k < dim; ++k) {
        for (int m = k + 1; m < dim; ++m) {
            const double rate = decay_rate(k, m, gamma_total);
            deriv(k, m) = -rate * rho(k, m);
            deriv(m, k) = -rate * rho(m, k);
        }
    }
    return deriv;  // diagonal stays exactly zero
}

}  // namespace

TwoModeNState evolve_analytic(const TwoModeNState& s0, const DephasingParams& p,
                              double t) {
    check_rates(p);
    if (t < 0.0 || !std::isfinite(t)) throw NegativeTime("time must be finite and >= 0");

    ComplexMatrix rho = s0.rho();
    const int dim = rho.dim();
    const double gamma_total = p.total();
    for (int k = 0; k < dim; ++k) {
        for (int m = k + 1; m < dim; ++m) {
            const double factor = std::exp(-decay_rate(k, m, gamma_total) * t);
            rho(k, m) *= factor;
            rho(m, k) *= factor;
        }
    }
    return TwoModeNState::unchecked(s0.n_total(), std::move(rho));
}

ComplexMatrix generator_apply(const TwoModeNState& s, const DephasingParams& p) {
    check_rates(p);
    return generator_matrix(s.rho(), p.total());
}

int recommended_steps(int n_total, const DephasingParams& p, double t) {
    check_rates(p);
    const double r_max = 0.5 * static_cast<double>(n_total) * n_total * p.total();
    const double steps = std::ceil(50.0 * t * r_max);
    return steps < 1.0 ? 1 : static_cast<int>(steps);
}

TwoModeNState evolve_numeric(const TwoModeNState& s0, const DephasingParams& p,
                             double t, int steps) {
    check_rates(p);
    if (t < 0.0 || !std::isfinite(t)) throw NegativeTime("time must be finite and >= 0");
    if (steps < 1) throw InvalidArgument("steps must be >= 1");

    const double h = t / steps;
    const double r_max =
        0.5 * static_cast<double>(s0.n_total()) * s0.n_total() * p.total();
    if (h * r_max > 0.1 * (1.0 + 1e-12)) {
        throw StepTooLarge("h * r_max = " + std::to_string(h * r_max) +
                           " exceeds 0.1; increase steps");
    }

    const double gamma_total = p.total();
    ComplexMatrix y = s0.rho();
    for (int step = 0; step < steps; ++step) {
        const ComplexMatrix k1 = generator_matrix(y, gamma_total);
        const ComplexMatrix k2 = generator_matrix(y + (h / 2.0) * k1, gamma_total);
        const ComplexMatrix k3 = generator_matrix(y + (h / 2.0) * k2, gamma_total);
        const ComplexMatrix k4 = generator_matrix(y + h * k3, gamma_total);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return TwoModeNState::unchecked(s0.n_total(), std::move(y));
}

}  // namespace noonsim
