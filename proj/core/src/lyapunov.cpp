#include "nadrc/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

Matrix companion_matrix(const std::vector<double>& coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("companion matrix needs at least one coefficient");
    const int n = static_cast<int>(coeffs.size());
    Matrix A(n);
    for (int i = 0; i < n; ++i) {
        A.at(i, 0) = -coeffs[i];
        if (i + 1 < n) A.at(i, i + 1) = 1.0;
    }
    return A;
}

LyapunovResult solve_lyapunov(const Matrix& A) {
    const int n = A.n;
    // Vectorize A^T P + P A = -I: unknown vec(P) indexed (i, j) -> i*n + j.
    // Row (i, j): sum_k A(k,i) P(k,j) + sum_k P(i,k) A(k,j) = -delta_ij.
    Matrix M(n * n);
    std::vector<double> rhs(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                M.at(row, k * n + j) += A.at(k, i);
                M.at(row, i * n + k) += A.at(k, j);
            }
            rhs[row] = (i == j) ? -1.0 : 0.0;
        }

    const std::vector<double> p = solve_linear(std::move(M), std::move(rhs));

    LyapunovResult out;
    out.P = Matrix(n);
    // the exact solution is symmetric; averaging removes elimination round-off
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.P.at(i, j) = 0.5 * (p[static_cast<std::size_t>(i) * n + j] +
                                    p[static_cast<std::size_t>(j) * n + i]);

    const std::vector<double> eig = jacobi_eigenvalues(out.P);
    out.lambda_min = eig.front();
    out.lambda_max = eig.back();
    if (!(out.lambda_min > 0.0))
        throw std::runtime_error("not Hurwitz: Lyapunov solution is not positive definite");
    return out;
}

double theorem1_bound(double M, const LyapunovResult& lyap, double omega0, int n, int i) {
    if (i < 1 || i > n + 1)
        throw std::invalid_argument("state index out of range");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("omega0 must be > 0");
    if (!(M >= 0.0))
        throw std::invalid_argument("disturbance-rate bound M must be >= 0");
    const double c = 2.0 * M * lyap.lambda_max * lyap.lambda_max / lyap.lambda_min;
    return c / std::pow(omega0, n + 2 - i);
}

}  // namespace nadrc
