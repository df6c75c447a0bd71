// linalg.hpp
// Minimal dense complex linear algebra: Hermitian matrix storage and a
// cyclic Jacobi eigensolver. The eigensolver is the independent numerical
// oracle that every analytic spectrum in this library is checked against.

#pragma once

#include <complex>
#include <vector>

#include "noonsim/errors.hpp"

namespace noonsim {

using Complex = std::complex<double>;

// Hermiticity tolerance accepted by the eigensolver and the validators.
inline constexpr double kHermitianTol = 1e-12;

// Dense row-major complex matrix of fixed square dimension.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const;
    double frobenius_norm() const;

    // max |a_ij - conj(a_ji)| over all i, j
    double hermiticity_residual() const;
    bool is_hermitian(double tol = kHermitianTol) const {
        return hermiticity_residual() <= tol;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(double s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator*(double s, ComplexMatrix m) {
        m *= s;
        return m;
    }

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

// Eigenvalues of a Hermitian matrix, ascending, plus the largest
// off-diagonal magnitude left when the solver stopped.
struct Spectrum {
    std::vector<double> eigenvalues;
    double residual = 0.0;
};

// All eigenvalues of a Hermitian matrix via two-sided cyclic Jacobi
// rotations. Stops when the off-diagonal Frobenius norm drops below
// 1e-14 x the initial Frobenius norm; hard cap of 100 sweeps.
// Throws NonHermitianInput if the symmetry residual exceeds kHermitianTol,
// NoConvergence if the sweep cap is hit.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

// sqrt(sum |a_ij - b_ij|^2); throws DimensionMismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// m * x
std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& x);

}  // namespace noonsim
