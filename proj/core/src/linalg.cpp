#include "noonsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace noonsim {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw InvalidArgument("matrix dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex sum{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) sum += std::norm(z);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("matrix dimensions differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (Complex& z : entries_) z *= s;
    return *this;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

double offdiag_max(const ComplexMatrix& a) {
    double worst = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) worst = std::max(worst, std::abs(a(i, j)));
        }
    }
    return worst;
}

// One two-sided unitary rotation in the (p, q) plane annihilating a(p, q).
void jacobi_rotate(ComplexMatrix& a, int p, int q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex eia = apq / mag;  // phase of the pivot

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    // smaller root of t^2 - 2*theta*t - 1 = 0
    const double sgn = theta >= 0.0 ? 1.0 : -1.0;
    const double t = -sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const int n = a.dim();
    // columns: A <- A * V with V = [[c, -s*eia], [s*conj(eia), c]]
    for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(eia) * aiq;
        a(i, q) = -s * eia * aip + c * aiq;
    }
    // rows: A <- V^dagger * A
    for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj + s * eia * aqj;
        a(q, j) = -s * std::conj(eia) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    const int n = m.dim();
    if (n < 1) throw InvalidArgument("hermitian_eigenvalues: empty matrix");
    const double herm = m.hermiticity_residual();
    if (herm > kHermitianTol) {
        throw NonHermitianInput("hermiticity residual " + std::to_string(herm) +
                                " exceeds tolerance");
    }

    // Work on the Hermitian part; the rotations preserve it exactly.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    const double target = 1e-14 * a.frobenius_norm();
    // Elements individually below target/n cannot keep the off-diagonal
    // Frobenius norm above target, so they are not worth a rotation.
    const double skip = target / n;

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > skip) jacobi_rotate(a, p, q);
            }
        }
    }
    if (!converged && offdiag_frobenius(a) > target) {
        throw NoConvergence("Jacobi sweep cap reached before convergence");
    }

    Spectrum spec;
    spec.eigenvalues.reserve(n);
    for (int i = 0; i < n; ++i) spec.eigenvalues.push_back(a(i, i).real());
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
    spec.residual = offdiag_max(a);
    return spec;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
    double sum = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) sum += std::norm(a(i, j) - b(i, j));
    }
    return std::sqrt(sum);
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& x) {
    const int n = m.dim();
    if (static_cast<int>(x.size()) != n) {
        throw DimensionMismatch("vector length does not match matrix dimension");
    }
    std::vector<Complex> y(n, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        Complex sum{0.0, 0.0};
        for (int j = 0; j < n; ++j) sum += m(i, j) * x[j];
        y[i] = sum;
    }
    return y;
}

}  // namespace noonsim
