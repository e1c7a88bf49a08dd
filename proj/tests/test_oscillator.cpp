#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "hahnosc/oscillator.hpp"

using namespace hahnosc;

namespace {
RepParams rep(long long two_j, double alpha) { return RepParams::from_two_j(two_j, alpha); }
const std::complex<double> I{0.0, 1.0};
} // namespace

TEST_CASE("position off-diagonal") {
    // j = 3/2, alpha = -1/2: 2 q^ couples with (sqrt 3, 2, sqrt 3).
    Eigen::VectorXd m = position_offdiagonal(rep(3, -0.5));
    REQUIRE(m.size() == 3);
    CHECK(m(0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(m(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m(2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    // Generic alpha: the even slots carry sqrt((2a+2)(2a+4)).
    double a = 0.8;
    m = position_offdiagonal(rep(3, a));
    double even = std::sqrt((2 * a + 2) * (2 * a + 4));
    CHECK(m(0) == doctest::Approx(even).epsilon(1e-15));
    CHECK(m(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m(2) == doctest::Approx(even).epsilon(1e-15));

    // 2 q^ is exactly the tridiagonal assembled from these couplings.
    RepParams p = rep(9, 0.3);
    Eigen::VectorXd off = position_offdiagonal(p);
    OperatorMatrix q2 = 2.0 * build_position(p);
    for (int r = 0; r < p.dim(); ++r)
        for (int c = 0; c < p.dim(); ++c) {
            double want = (r == c + 1) ? off(c) : (c == r + 1 ? off(r) : 0.0);
            CHECK(std::abs(q2(r, c) - want) <= 1e-15 * p.dim());
        }
}

TEST_CASE("hamiltonian spectrum is n + 1/2") {
    for (long long two_j : {1LL, 5LL, 65LL}) {
        RepParams p = rep(two_j, 0.7);
        OperatorMatrix H = build_hamiltonian(p);
        for (int n = 0; n < p.dim(); ++n) {
            CHECK(H(n, n).real() == n + 0.5);
            CHECK(H(n, n).imag() == 0.0);
        }
        CHECK((H - OperatorMatrix(H.diagonal().asDiagonal())).norm() == 0.0);
    }
}

TEST_CASE("oscillator commutators") {
    // [H, q] + i p = 0 and [H, p] - i q = 0 close exactly on every V_j.
    for (long long two_j : {1LL, 3LL, 9LL, 65LL})
        for (double alpha : {-0.9, -0.5, 0.0, 1.0, 5.0}) {
            RepParams p = rep(two_j, alpha);
            OperatorMatrix q = build_position(p);
            OperatorMatrix pm = build_momentum(p);
            OperatorMatrix H = build_hamiltonian(p);
            double r1 = (H * q - q * H + I * pm).norm();
            double r2 = (H * pm - pm * H - I * q).norm();
            INFO("two_j=", two_j, " alpha=", alpha);
            CHECK(r1 <= 1e-12 * p.dim());
            CHECK(r2 <= 1e-12 * p.dim());
        }
}

TEST_CASE("closed-form position spectrum") {
    // j = 5/2, alpha = 0: q = -3, -2, -1, 1, 2, 3.
    PositionSpectrum s = position_spectrum_closed_form(rep(5, 0.0));
    REQUIRE(s.eigenvalues.size() == 6);
    const double expect[] = {-3, -2, -1, 1, 2, 3};
    for (int i = 0; i < 6; ++i)
        CHECK(s.eigenvalues(i) == doctest::Approx(expect[i]).epsilon(1e-15));

    CHECK(s.q(HalfInt::from_twice(1)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.q(HalfInt::from_twice(-3)) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(s.middle_gap() == doctest::Approx(2.0).epsilon(1e-15));

    // Generic alpha: gap 2 alpha + 2, outer eigenvalue alpha + j + 1/2.
    double a = -0.7;
    s = position_spectrum_closed_form(rep(65, a));
    CHECK(s.middle_gap() == doctest::Approx(2 * a + 2).epsilon(1e-12));
    CHECK(s.eigenvalues(65) == doctest::Approx(a + 33.0).epsilon(1e-15));
    CHECK(s.eigenvalues(0) == doctest::Approx(-(a + 33.0)).epsilon(1e-15));
}

TEST_CASE("solver spectrum matches closed form") {
    for (long long two_j : {3LL, 5LL, 65LL})
        for (double alpha : {-0.7, -0.5, 0.0, 1.0}) {
            RepParams p = rep(two_j, alpha);
            Eigen::VectorXd numeric = position_spectrum_numeric(p);
            PositionSpectrum closed = position_spectrum_closed_form(p);
            REQUIRE(numeric.size() == p.dim());
            double worst = (numeric - closed.eigenvalues).cwiseAbs().maxCoeff();
            INFO("two_j=", two_j, " alpha=", alpha, " worst=", worst);
            CHECK(worst <= 1e-10);
        }

    Eigen::VectorXd v = position_spectrum_numeric(rep(3, -0.5));
    const double expect[] = {-1.5, -0.5, 0.5, 1.5};
    for (int i = 0; i < 4; ++i)
        CHECK(v(i) == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("momentum spectrum equals position spectrum") {
    for (long long two_j : {5LL, 65LL})
        for (double alpha : {-0.7, 0.0, 1.0}) {
            RepParams p = rep(two_j, alpha);
            Eigen::VectorXd qs = position_spectrum_numeric(p);
            Eigen::VectorXd ps = momentum_spectrum_numeric(p);
            CHECK((qs - ps).cwiseAbs().maxCoeff() <= 1e-10);
            // Symmetric about zero.
            for (int i = 0; i < p.dim(); ++i)
                CHECK(std::abs(ps(i) + ps(p.dim() - 1 - i)) <= 1e-10);
        }
}

TEST_CASE("eigenvector matrix at j = 1/2") {
    Eigen::MatrixXd U = eigenvector_matrix(rep(1, 0.4));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(U(0, 0) == doctest::Approx(s).epsilon(1e-15));
    CHECK(U(0, 1) == doctest::Approx(s).epsilon(1e-15));
    CHECK(U(1, 0) == doctest::Approx(-s).epsilon(1e-15));
    CHECK(U(1, 1) == doctest::Approx(s).epsilon(1e-15));
}

TEST_CASE("eigenvector matrix is orthogonal and diagonalises 2q") {
    for (auto [two_j, alpha] : {std::pair<long long, double>{9, 0.3},
                                {65, 1.0},
                                {65, -0.7},
                                {65, -0.5}}) {
        RepParams p = rep(two_j, alpha);
        Eigen::MatrixXd U = eigenvector_matrix(p);
        int d = p.dim();

        double ortho = std::max((U * U.transpose() - Eigen::MatrixXd::Identity(d, d)).norm(),
                                (U.transpose() * U - Eigen::MatrixXd::Identity(d, d)).norm());
        INFO("two_j=", two_j, " alpha=", alpha, " ortho=", ortho);
        CHECK(ortho <= 1e-12);

        Eigen::MatrixXd q2 = (2.0 * build_position(p)).real();
        PositionSpectrum s = position_spectrum_closed_form(p);
        for (int i = 0; i < d; ++i) {
            double res = (q2 * U.col(i) - 2.0 * s.eigenvalues(i) * U.col(i)).norm();
            CHECK(res <= 1e-10);
        }
    }
}

TEST_CASE("numeric eigenvectors match the Hahn construction") {
    RepParams p = rep(9, 0.3);
    Eigen::MatrixXd q = build_position(p).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    REQUIRE(es.info() == Eigen::Success);
    Eigen::MatrixXd U = eigenvector_matrix(p);
    for (int i = 0; i < p.dim(); ++i) {
        Eigen::VectorXd v = es.eigenvectors().col(i);
        if (v.dot(U.col(i)) < 0)
            v = -v;
        CHECK((v - U.col(i)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("direct wavefunction route agrees with the eigenvector matrix") {
    // wavefunction_table cross-checks every entry internally and throws on
    // disagreement, so constructing it is the assertion.
    for (auto [two_j, alpha] : {std::pair<long long, double>{5, -0.7},
                                {65, -0.7},
                                {65, -0.5},
                                {65, 1.0}}) {
        RepParams p = rep(two_j, alpha);
        WavefunctionTable t = wavefunction_table(p);
        REQUIRE(t.values.rows() == p.dim());
        REQUIRE(t.values.cols() == p.dim());

        // Rows are unit vectors (orthonormality over the spectrum).
        for (int n = 0; n < p.dim(); ++n)
            CHECK(std::abs(t.values.row(n).squaredNorm() - 1.0) <= 1e-12);

        // Parity through the table: Phi_n(-q) = (-1)^n Phi_n(q), exactly by
        // construction.
        for (int n = 0; n < p.dim(); ++n)
            for (int i = 0; i < p.dim(); ++i) {
                double mirrored = t.values(n, p.dim() - 1 - i);
                CHECK(t.values(n, i) == (n % 2 == 0 ? mirrored : -mirrored));
            }

        // Ground state never changes sign.
        for (int i = 0; i < p.dim(); ++i)
            CHECK(t.values(0, i) > 0.0);

        // Abscissae are the closed-form eigenvalues.
        PositionSpectrum s = position_spectrum_closed_form(p);
        CHECK((t.abscissae - s.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("wavefunction_direct and wavefunction_row") {
    RepParams p = rep(5, 0.3);
    WavefunctionTable t = wavefunction_table(p);
    for (int n = 0; n < p.dim(); ++n) {
        Eigen::VectorXd row = wavefunction_row(p, n);
        for (int i = 0; i < p.dim(); ++i) {
            HalfInt k = HalfInt::from_twice(-5 + 2 * i);
            double direct = wavefunction_direct(p, n, k);
            CHECK(direct == row(i));
            CHECK(std::abs(direct - t.values(n, i)) <= 1e-12);
            // Parity of the direct route.
            CHECK(wavefunction_direct(p, n, -k) == (n % 2 == 0 ? direct : -direct));
        }
    }
}
