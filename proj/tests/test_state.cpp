#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "noonsim/state.hpp"
#include "support.hpp"

using namespace noonsim;

TEST_SUITE("state") {

TEST_CASE("make_noon N=3 phase 0") {
    const TwoModeNState s = make_noon(3, 0.0);
    CHECK(s.n_total() == 3);
    CHECK(s.dim() == 4);
    for (int k = 0; k <= 3; ++k) {
        for (int m = 0; m <= 3; ++m) {
            const bool corner = (k == 0 || k == 3) && (m == 0 || m == 3);
            CHECK(s.rho()(k, m) == (corner ? Complex{0.5, 0.0} : Complex{0.0, 0.0}));
        }
    }
    CHECK(validate(s).all_passed());
    CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("make_noon N=1 is the Bell-type matrix") {
    const TwoModeNState s = make_noon(1, 0.0);
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m) CHECK(s.rho()(k, m) == Complex{0.5, 0.0});
}

TEST_CASE("make_noon phase enters as exp(-iN phi) on rho[0][N]") {
    const TwoModeNState s = make_noon(2, std::numbers::pi / 2);  // N phi = pi
    CHECK(s.coherence(0, 2).real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(s.coherence(0, 2).imag()) < 1e-12);
    CHECK(s.coherence(2, 0) == std::conj(s.coherence(0, 2)));
}

TEST_CASE("make_noon diagonal and |rho[0][N]| are phase independent") {
    const TwoModeNState a = make_noon(4, 0.0);
    const TwoModeNState b = make_noon(4, 2.13);
    for (int k = 0; k <= 4; ++k) CHECK(a.rho()(k, k) == b.rho()(k, k));
    CHECK(std::abs(a.coherence(0, 4)) ==
          doctest::Approx(std::abs(b.coherence(0, 4))).epsilon(1e-15));
}

TEST_CASE("make_noon rejects N < 1") {
    CHECK_THROWS_AS(make_noon(0, 0.0), InvalidN);
    CHECK_THROWS_AS(make_noon(-2, 0.0), InvalidN);
}

TEST_CASE("from_pure reproduces make_noon(3, 0)") {
    const double r = 1.0 / std::sqrt(2.0);
    const TwoModeNState s = from_pure({3, {r, 0.0, 0.0, r}});
    const TwoModeNState noon = make_noon(3, 0.0);
    CHECK(frobenius_distance(s.rho(), noon.rho()) < 1e-15);
}

TEST_CASE("from_pure separable and uniform cases") {
    const TwoModeNState sep = from_pure({1, {1.0, 0.0}});
    CHECK(sep.rho()(0, 0) == Complex{1.0, 0.0});
    CHECK(sep.rho()(0, 1) == Complex{0.0, 0.0});
    CHECK(sep.rho()(1, 1) == Complex{0.0, 0.0});

    const TwoModeNState uni = from_pure({3, {0.5, 0.5, 0.5, 0.5}});
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) CHECK(uni.rho()(k, m) == Complex{0.25, 0.0});
}

TEST_CASE("from_pure normalization policy") {
    const PureCoefficients off{1, {1.0, 0.3}};  // norm^2 = 1.09
    CHECK_THROWS_AS(from_pure(off), NotNormalized);
    const TwoModeNState s = from_pure(off, /*auto_normalize=*/true);
    CHECK(s.rho().trace().real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(validate(s).all_passed());
}

TEST_CASE("from_pure validates shape") {
    CHECK_THROWS_AS(from_pure({2, {1.0, 0.0}}), DimensionMismatch);
    CHECK_THROWS_AS(from_pure({0, {1.0}}), InvalidN);
}

TEST_CASE("random pure states validate and have unit purity") {
    std::mt19937 gen(21u);
    for (int n = 1; n <= 10; ++n) {
        const TwoModeNState s = from_pure(testing::random_pure(n, gen));
        CHECK(validate(s).all_passed());
        CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("purity ranges over [1/(N+1), 1]") {
    std::mt19937 gen(22u);
    for (int n = 1; n <= 8; ++n) {
        const TwoModeNState s = testing::random_state(n, gen);
        CHECK(s.purity() >= 1.0 / (n + 1) - 1e-10);
        CHECK(s.purity() <= 1.0 + 1e-10);
    }
    ComplexMatrix mixed(3);
    for (int i = 0; i < 3; ++i) mixed(i, i) = 1.0 / 3.0;
    CHECK(TwoModeNState(2, mixed).purity() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("validate reports per-invariant residuals") {
    SUBCASE("trace deficit") {
        ComplexMatrix m(2);
        m(0, 0) = 0.45;
        m(1, 1) = 0.45;
        const ValidationReport r = validate(m);
        CHECK(r.hermiticity.passed);
        CHECK_FALSE(r.trace.passed);
        CHECK(r.trace.residual == doctest::Approx(0.1).epsilon(1e-12));
        CHECK_FALSE(r.all_passed());
        CHECK(r.summary().find("trace FAILED") != std::string::npos);
    }
    SUBCASE("negative eigenvalue breaks PSD and Cauchy-Schwarz") {
        // eigenvalues of [[0.5, 0.9], [0.9, 0.5]] are -0.4 and 1.4
        ComplexMatrix m(2);
        m(0, 0) = 0.5;
        m(1, 1) = 0.5;
        m(0, 1) = 0.9;
        m(1, 0) = 0.9;
        const ValidationReport r = validate(m);
        CHECK(r.hermiticity.passed);
        CHECK(r.trace.passed);
        CHECK_FALSE(r.positivity.passed);
        CHECK(r.positivity.residual == doctest::Approx(0.4).epsilon(1e-12));
        CHECK_FALSE(r.cauchy_schwarz.passed);
        CHECK(r.cauchy_schwarz.residual == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("non-Hermitian input") {
        ComplexMatrix m(2);
        m(0, 0) = 0.5;
        m(1, 1) = 0.5;
        m(0, 1) = Complex{0.0, 0.2};
        m(1, 0) = Complex{0.0, 0.2};  // conj would be -0.2i
        const ValidationReport r = validate(m);
        CHECK_FALSE(r.hermiticity.passed);
        CHECK(r.hermiticity.residual == doctest::Approx(0.4).epsilon(1e-12));
    }
}

TEST_CASE("constructor enforces the invariants") {
    ComplexMatrix bad(2);
    bad(0, 0) = 0.45;
    bad(1, 1) = 0.45;
    CHECK_THROWS_AS(TwoModeNState(1, bad), ValidationFailed);
    CHECK_THROWS_AS(TwoModeNState(2, bad), DimensionMismatch);
    CHECK_THROWS_AS(TwoModeNState(0, ComplexMatrix(1)), InvalidN);

    // unchecked() is the explicit escape hatch.
    const TwoModeNState s = TwoModeNState::unchecked(1, bad);
    CHECK(s.rho().trace().real() == doctest::Approx(0.9).epsilon(1e-15));
}

}  // TEST_SUITE
