#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "noonsim/linalg.hpp"
#include "support.hpp"

using namespace noonsim;

namespace {

ComplexMatrix matrix2(Complex a00, Complex a01, Complex a10, Complex a11) {
    ComplexMatrix m(2);
    m(0, 0) = a00;
    m(0, 1) = a01;
    m(1, 0) = a10;
    m(1, 1) = a11;
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("2x2 off-diagonal block has eigenvalues +-|c|") {
    const Complex c{0.3, -0.4};  // |c| = 0.5
    const Spectrum s = hermitian_eigenvalues(matrix2(0.0, c, std::conj(c), 0.0));
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(std::abs(s.eigenvalues[0] + 0.5) <= 1e-14);
    CHECK(std::abs(s.eigenvalues[1] - 0.5) <= 1e-14);
}

TEST_CASE("identity of dim 4") {
    const Spectrum s = hermitian_eigenvalues(ComplexMatrix::identity(4));
    REQUIRE(s.eigenvalues.size() == 4);
    for (const double e : s.eigenvalues) CHECK(e == 1.0);
}

TEST_CASE("fixed 3x3 matrix matches its characteristic-cubic roots") {
    // A = [[2, 1-i, 0], [1+i, 3, i], [0, -i, 1]], char poly l^3 - 6l^2 + 8l - 2,
    // roots solved to 50 digits ahead of time and frozen here.
    ComplexMatrix a(3);
    a(0, 0) = 2.0;
    a(0, 1) = Complex{1.0, -1.0};
    a(1, 0) = Complex{1.0, 1.0};
    a(1, 1) = 3.0;
    a(1, 2) = Complex{0.0, 1.0};
    a(2, 1) = Complex{0.0, -1.0};
    a(2, 2) = 1.0;

    const Spectrum s = hermitian_eigenvalues(a);
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK(std::abs(s.eigenvalues[0] - 0.32486912943335393) < 1e-12);
    CHECK(std::abs(s.eigenvalues[1] - 1.4608111271891109) < 1e-12);
    CHECK(std::abs(s.eigenvalues[2] - 4.2143197433775352) < 1e-12);
    CHECK(s.residual <= 1e-14 * a.frobenius_norm());
}

TEST_CASE("indefinite 2x2 example") {
    const Spectrum s = hermitian_eigenvalues(matrix2(0.5, 0.9, 0.9, 0.5));
    CHECK(std::abs(s.eigenvalues[0] - (-0.4)) < 1e-14);
    CHECK(std::abs(s.eigenvalues[1] - 1.4) < 1e-14);
}

TEST_CASE("real diagonal matrix: eigenvalues are exactly the sorted diagonal") {
    ComplexMatrix m(4);
    m(0, 0) = 0.7;
    m(1, 1) = -2.25;
    m(2, 2) = 0.1;
    m(3, 3) = 0.7;
    const Spectrum s = hermitian_eigenvalues(m);
    CHECK(s.eigenvalues == std::vector<double>{-2.25, 0.1, 0.7, 0.7});
    CHECK(s.residual == 0.0);
}

TEST_CASE("eigenvalue sum equals trace on random Hermitian matrices") {
    std::mt19937 gen(11u);
    for (const int dim : {1, 2, 5, 17, 81}) {
        const ComplexMatrix m = testing::random_hermitian(dim, gen);
        const Spectrum s = hermitian_eigenvalues(m);
        REQUIRE(static_cast<int>(s.eigenvalues.size()) == dim);
        double sum = 0.0;
        for (const double e : s.eigenvalues) sum += e;
        CHECK(std::abs(sum - m.trace().real()) <= 1e-10 * dim);
        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    }
}

TEST_CASE("Rayleigh quotient sits between extreme eigenvalues") {
    std::mt19937 gen(12u);
    for (const int dim : {2, 6, 15}) {
        const ComplexMatrix m = testing::random_hermitian(dim, gen);
        const Spectrum s = hermitian_eigenvalues(m);
        for (int rep = 0; rep < 20; ++rep) {
            const auto x = testing::random_unit_vector(dim, gen);
            const auto mx = noonsim::apply(m, x);
            Complex q{0.0, 0.0};
            for (int i = 0; i < dim; ++i) q += std::conj(x[i]) * mx[i];
            CHECK(q.real() >= s.eigenvalues.front() - 1e-10);
            CHECK(q.real() <= s.eigenvalues.back() + 1e-10);
            CHECK(std::abs(q.imag()) < 1e-12);
        }
    }
}

TEST_CASE("frobenius_distance") {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK(frobenius_distance(id, id) == 0.0);
    CHECK(frobenius_distance(ComplexMatrix(2), id) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(frobenius_distance(matrix2(1, 0, 0, 0), matrix2(0, 0, 0, 1)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(frobenius_distance(ComplexMatrix(2), ComplexMatrix(3)),
                    DimensionMismatch);
}

TEST_CASE("solver rejects bad input") {
    CHECK_THROWS_AS(hermitian_eigenvalues(matrix2(0, 1, 0, 0)), NonHermitianInput);
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix()), InvalidArgument);

    // Just inside the symmetry tolerance: accepted.
    ComplexMatrix nearly = matrix2(1.0, 0.5, 0.5 + 1e-13, 1.0);
    CHECK_NOTHROW(hermitian_eigenvalues(nearly));
}

TEST_CASE("matrix helpers") {
    ComplexMatrix m = matrix2(Complex{1, 0}, Complex{2, 1}, Complex{2, -1}, 3.0);
    CHECK(m.trace() == Complex{4.0, 0.0});
    CHECK(m.hermiticity_residual() == 0.0);
    CHECK(m.is_hermitian());
    CHECK(m.frobenius_norm() ==
          doctest::Approx(std::sqrt(1.0 + 5.0 + 5.0 + 9.0)).epsilon(1e-15));

    const auto y = noonsim::apply(m, {Complex{1, 0}, Complex{0, 1}});
    REQUIRE(y.size() == 2);
    CHECK(y[0] == Complex{1, 0} + Complex{2, 1} * Complex{0, 1});
    CHECK(y[1] == Complex{2, -1} + Complex{3, 0} * Complex{0, 1});

    ComplexMatrix sum = m + m;
    CHECK(sum(0, 1) == 2.0 * m(0, 1));
    ComplexMatrix scaled = 0.5 * m;
    CHECK(scaled(1, 1) == Complex{1.5, 0.0});
    CHECK_THROWS_AS(noonsim::apply(m, std::vector<Complex>(3)), DimensionMismatch);
}

}  // TEST_SUITE
