#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nadrc/linalg.hpp"
#include "nadrc/lyapunov.hpp"
#include "nadrc/noise.hpp"
#include "nadrc/observer.hpp"

using namespace nadrc;

namespace {

double lyapunov_residual(const Matrix& A, const Matrix& P) {
    const Matrix R = A.transpose() * P;
    const Matrix S = P * A;
    Matrix res(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            res.at(i, j) = R.at(i, j) + S.at(i, j) + (i == j ? 1.0 : 0.0);
    return res.max_abs();
}

}  // namespace

TEST_CASE("matrix basics") {
    const Matrix I = Matrix::identity(3);
    CHECK(I.at(0, 0) == 1.0);
    CHECK(I.at(0, 1) == 0.0);

    Matrix A(2);
    A.at(0, 0) = 1.0;
    A.at(0, 1) = 2.0;
    A.at(1, 0) = 3.0;
    A.at(1, 1) = 4.0;
    const Matrix At = A.transpose();
    CHECK(At.at(0, 1) == 3.0);
    CHECK(At.at(1, 0) == 2.0);

    const Matrix AA = A * Matrix::identity(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(AA.at(i, j) == A.at(i, j));

    CHECK(A.max_abs() == 4.0);
    CHECK_FALSE(A.symmetric(1e-12));
    A.at(1, 0) = 2.0;
    CHECK(A.symmetric(1e-12));
}

TEST_CASE("solve_linear recovers a known solution and rejects singularity") {
    Matrix A(2);
    A.at(0, 0) = 2.0;
    A.at(0, 1) = 1.0;
    A.at(1, 0) = 1.0;
    A.at(1, 1) = 3.0;
    const std::vector<double> x = solve_linear(A, {5.0, 10.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-12));

    Matrix S(2);
    S.at(0, 0) = 1.0;
    S.at(0, 1) = 2.0;
    S.at(1, 0) = 2.0;
    S.at(1, 1) = 4.0;
    CHECK_THROWS_AS(solve_linear(S, {1.0, 2.0}), std::runtime_error);
}

TEST_CASE("jacobi_eigenvalues on known symmetric matrices") {
    Matrix D(3);
    D.at(0, 0) = 3.0;
    D.at(1, 1) = 1.0;
    D.at(2, 2) = 2.0;
    const std::vector<double> ed = jacobi_eigenvalues(D);
    CHECK(ed[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ed[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ed[2] == doctest::Approx(3.0).epsilon(1e-12));

    Matrix S(2);
    S.at(0, 0) = 2.0;
    S.at(0, 1) = 1.0;
    S.at(1, 0) = 1.0;
    S.at(1, 1) = 2.0;
    const std::vector<double> es = jacobi_eigenvalues(S);
    CHECK(es[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("companion_matrix layout") {
    const Matrix A = companion_matrix({2.0, 1.0});
    CHECK(A.n == 2);
    CHECK(A.at(0, 0) == -2.0);
    CHECK(A.at(0, 1) == 1.0);
    CHECK(A.at(1, 0) == -1.0);
    CHECK(A.at(1, 1) == 0.0);

    const Matrix B = companion_matrix({3.0, 3.0, 1.0});
    CHECK(B.n == 3);
    CHECK(B.at(0, 0) == -3.0);
    CHECK(B.at(1, 0) == -3.0);
    CHECK(B.at(2, 0) == -1.0);
    CHECK(B.at(0, 1) == 1.0);
    CHECK(B.at(1, 2) == 1.0);
    CHECK(B.at(2, 1) == 0.0);

    CHECK_THROWS_AS(companion_matrix({}), std::invalid_argument);
}

TEST_CASE("solve_lyapunov hand oracles") {
    Matrix negI(2);
    negI.at(0, 0) = -1.0;
    negI.at(1, 1) = -1.0;
    const LyapunovResult balanced = solve_lyapunov(negI);
    CHECK(balanced.P.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(balanced.P.at(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(balanced.lambda_min == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(balanced.lambda_max == doctest::Approx(0.5).epsilon(1e-10));

    Matrix scalar(1);
    scalar.at(0, 0) = -1.0;
    CHECK(solve_lyapunov(scalar).P.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    const LyapunovResult n1 = solve_lyapunov(companion_matrix({2.0, 1.0}));
    CHECK(std::abs(n1.P.at(0, 0) - 0.5) < 1e-9);
    CHECK(std::abs(n1.P.at(0, 1) - -0.5) < 1e-9);
    CHECK(std::abs(n1.P.at(1, 0) - -0.5) < 1e-9);
    CHECK(std::abs(n1.P.at(1, 1) - 1.5) < 1e-9);
}

TEST_CASE("solve_lyapunov rejects non-Hurwitz dynamics") {
    // eigenvalues 1 and 2: the equation is solvable but P is negative definite
    Matrix A(2);
    A.at(0, 0) = 1.0;
    A.at(1, 1) = 2.0;
    CHECK_THROWS_WITH_AS(solve_lyapunov(A), doctest::Contains("not Hurwitz"),
                         std::runtime_error);
}

TEST_CASE("lyapunov solution quality for binomial coefficient sets") {
    for (int n = 1; n <= 3; ++n) {
        const Matrix A = companion_matrix(bandwidth_gains(n, 1.0));
        const LyapunovResult r = solve_lyapunov(A);
        CAPTURE(n);
        CHECK(r.P.symmetric(1e-12));
        CHECK(r.lambda_min > 0.0);
        CHECK(lyapunov_residual(A, r.P) < 1e-10);
    }
}

TEST_CASE("quadratic form is pinched by the eigenvalue extremes") {
    const LyapunovResult r = solve_lyapunov(companion_matrix(bandwidth_gains(2, 1.0)));
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        double eta[3], norm2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            eta[i] = gaussian_sample(7, trial * 3 + static_cast<std::uint64_t>(i));
            norm2 += eta[i] * eta[i];
        }
        double V = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) V += eta[i] * r.P.at(i, j) * eta[j];
        CHECK(V >= r.lambda_min * norm2 * (1.0 - 1e-9));
        CHECK(V <= r.lambda_max * norm2 * (1.0 + 1e-9));
        CHECK(std::sqrt(norm2) <= std::sqrt(V / r.lambda_min) * (1.0 + 1e-9));
    }
}

TEST_CASE("theorem1_bound oracle and shape") {
    LyapunovResult lyap;
    lyap.lambda_min = 0.5;
    lyap.lambda_max = 2.0;
    CHECK(theorem1_bound(0.0, lyap, 10.0, 2, 1) == 0.0);
    CHECK(theorem1_bound(1.0, lyap, 10.0, 2, 3) == doctest::Approx(1.6).epsilon(1e-12));
    // exponent n+2-i = 1 at the extended state: doubling omega0 halves the bound
    CHECK(theorem1_bound(1.0, lyap, 20.0, 2, 3) ==
          doctest::Approx(0.5 * theorem1_bound(1.0, lyap, 10.0, 2, 3)).epsilon(1e-12));

    for (const double M : {0.5, 1.0, 2.0})
        for (const double w : {1.0, 2.0, 5.0, 10.0})
            for (int i = 1; i <= 3; ++i) {
                CHECK(theorem1_bound(M, lyap, 2.0 * w, 2, i) <=
                      theorem1_bound(M, lyap, w, 2, i));
                CHECK(theorem1_bound(2.0 * M, lyap, w, 2, i) >=
                      theorem1_bound(M, lyap, w, 2, i));
            }

    CHECK_THROWS_AS(theorem1_bound(1.0, lyap, 10.0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_bound(1.0, lyap, 10.0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_bound(1.0, lyap, 0.0, 2, 1), std::invalid_argument);
}
