#include "nadrc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nadrc {

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (n != rhs.n) throw std::invalid_argument("matrix dimension mismatch");
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) m.at(i, j) += aik * rhs.at(k, j);
        }
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::symmetric(double tol) const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

std::vector<double> solve_linear(Matrix A, std::vector<double> b) {
    const int n = A.n;
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("right-hand side dimension mismatch");

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A.at(r, col)) > std::abs(A.at(pivot, col))) pivot = r;
        if (std::abs(A.at(pivot, col)) < 1e-300)
            throw std::runtime_error("singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        const double inv = 1.0 / A.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = A.at(r, col) * inv;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) A.at(r, j) -= f * A.at(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int j = r + 1; j < n; ++j) s -= A.at(r, j) * x[j];
        x[r] = s / A.at(r, r);
    }
    return x;
}

std::vector<double> jacobi_eigenvalues(Matrix S, double tol, int max_sweeps) {
    const int n = S.n;
    if (!S.symmetric(1e-9))
        throw std::invalid_argument("Jacobi eigensolver requires a symmetric matrix");

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(S.at(i, j)));
        if (off < tol) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = S.at(p, q);
                if (std::abs(apq) < tol) continue;
                const double theta = (S.at(q, q) - S.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = S.at(k, p), skq = S.at(k, q);
                    S.at(k, p) = c * skp - s * skq;
                    S.at(k, q) = s * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = S.at(p, k), sqk = S.at(q, k);
                    S.at(p, k) = c * spk - s * sqk;
                    S.at(q, k) = s * spk + c * sqk;
                }
            }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = S.at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace nadrc
