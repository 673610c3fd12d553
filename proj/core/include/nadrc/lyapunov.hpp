#pragma once

#include <vector>

#include "nadrc/linalg.hpp"

namespace nadrc {

struct LyapunovResult {
    Matrix P;  // symmetric positive definite, A^T P + P A = -I
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

// Companion form of the scaled estimation-error dynamics: first column
// -a_1..-a_{n+1}, ones on the superdiagonal, zero elsewhere.
Matrix companion_matrix(const std::vector<double>& coeffs);

// Solve A^T P + P A = -I by vectorizing P into an n^2-unknown dense linear
// system (Gaussian elimination), then symmetrize and extract eigenvalue
// extremes via Jacobi iteration. Throws std::runtime_error("not Hurwitz...")
// when P is not positive definite.
LyapunovResult solve_lyapunov(const Matrix& A);

// Convergence bound on lim sup |x_i - xhat_i|:
//   (1 / omega0^{n+2-i}) * 2 M lambda_max(P)^2 / lambda_min(P)
// with P solved for the omega0-free (scaled) companion matrix.
double theorem1_bound(double M, const LyapunovResult& lyap, double omega0, int n, int i);

}  // namespace nadrc
