#include "noonsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace noonsim {

namespace {

void append_check(std::ostringstream& os, const char* name, const CheckResult& c) {
    os << name << (c.passed ? " ok" : " FAILED") << " (residual " << c.residual << ")";
}

}  // namespace

std::string ValidationReport::summary() const {
    std::ostringstream os;
    append_check(os, "hermiticity", hermiticity);
    os << ", ";
    append_check(os, "trace", trace);
    os << ", ";
    append_check(os, "positivity", positivity);
    os << ", ";
    append_check(os, "cauchy-schwarz", cauchy_schwarz);
    return os.str();
}

ValidationReport validate(const ComplexMatrix& rho) {
    const int n = rho.dim();
    ValidationReport report;

    report.hermiticity.residual = rho.hermiticity_residual();
    report.hermiticity.passed = report.hermiticity.residual <= kHermitianTol;

    report.trace.residual = std::abs(rho.trace() - Complex{1.0, 0.0});
    report.trace.passed = report.trace.residual <= kTraceTol;

    // Eigenvalues of the Hermitian part; for a matrix passing the
    // hermiticity check the difference is below every tolerance here.
    ComplexMatrix herm(n);
    for (int i = 0; i < n; ++i) {
        herm(i, i) = rho(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            herm(i, j) = avg;
            herm(j, i) = std::conj(avg);
        }
    }
    const Spectrum spec = hermitian_eigenvalues(herm);
    const double min_eig = spec.eigenvalues.front();
    report.positivity.residual = std::max(0.0, -min_eig);
    report.positivity.passed = min_eig >= -kPsdTol;

    double cs_worst = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int m = k + 1; m < n; ++m) {
            const double dk = std::max(0.0, rho(k, k).real());
            const double dm = std::max(0.0, rho(m, m).real());
            cs_worst = std::max(cs_worst, std::abs(rho(k, m)) - std::sqrt(dk * dm));
        }
    }
    report.cauchy_schwarz.residual = std::max(0.0, cs_worst);
    report.cauchy_schwarz.passed = cs_worst <= kCauchySchwarzTol;

    return report;
}

ValidationReport validate(const TwoModeNState& s) { return validate(s.rho()); }

TwoModeNState::TwoModeNState(int n_total, ComplexMatrix rho)
    : n_total_(n_total), rho_(std::move(rho)) {
    if (n_total < 1) throw InvalidN("photon number N must be >= 1");
    if (rho_.dim() != n_total + 1) {
        throw DimensionMismatch("density matrix must be (N+1) x (N+1)");
    }
    const ValidationReport report = validate(rho_);
    if (!report.all_passed()) {
        throw ValidationFailed("not a physical density matrix: " + report.summary());
    }
}

TwoModeNState::TwoModeNState(UncheckedTag, int n_total, ComplexMatrix rho)
    : n_total_(n_total), rho_(std::move(rho)) {}

TwoModeNState TwoModeNState::unchecked(int n_total, ComplexMatrix rho) {
    return TwoModeNState(UncheckedTag{}, n_total, std::move(rho));
}

double TwoModeNState::purity() const {
    // tr(rho^2) = sum |rho_km|^2 for Hermitian rho
    double sum = 0.0;
    for (const Complex& z : rho_.entries()) sum += std::norm(z);
    return sum;
}

TwoModeNState make_noon(int n_total, double phase) {
    if (n_total < 1) throw InvalidN("photon number N must be >= 1");
    ComplexMatrix rho(n_total + 1);
    const double arg = static_cast<double>(n_total) * phase;
    rho(0, 0) = 0.5;
    rho(n_total, n_total) = 0.5;
    rho(0, n_total) = 0.5 * Complex{std::cos(arg), -std::sin(arg)};  // e^{-iN phi}/2
    rho(n_total, 0) = std::conj(rho(0, n_total));
    return TwoModeNState::unchecked(n_total, std::move(rho));
}

TwoModeNState from_pure(const PureCoefficients& c, bool auto_normalize) {
    if (c.n_total < 1) throw InvalidN("photon number N must be >= 1");
    if (static_cast<int>(c.coeffs.size()) != c.n_total + 1) {
        throw DimensionMismatch("expected N+1 coefficients");
    }
    double norm2 = 0.0;
    for (const Complex& z : c.coeffs) norm2 += std::norm(z);
    std::vector<Complex> amps = c.coeffs;
    if (std::abs(norm2 - 1.0) > kNormalizationTol) {
        if (!auto_normalize) {
            throw NotNormalized("coefficient norm^2 = " + std::to_string(norm2));
        }
        if (norm2 == 0.0) throw NotNormalized("all coefficients are zero");
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex& z : amps) z *= inv;
    }

    const int dim = c.n_total + 1;
    ComplexMatrix rho(dim);
    for (int k = 0; k < dim; ++k) {
        for (int m = 0; m < dim; ++m) {
            rho(k, m) = amps[k] * std::conj(amps[m]);
        }
    }
    return TwoModeNState::unchecked(c.n_total, std::move(rho));
}

}  // namespace noonsim
