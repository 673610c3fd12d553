#pragma once

#include <vector>

namespace nadrc {

// Small dense square matrix, row-major. Sized for observer-order work
// (n <= 5); not a general linear-algebra library.
struct Matrix {
    int n = 0;
    std::vector<double> a;

    Matrix() = default;
    explicit Matrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Matrix identity(int dim);
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;

    double max_abs() const;
    bool symmetric(double tol) const;
};

// Solve A x = b by Gaussian elimination with partial pivoting.
// Throws std::runtime_error on a (numerically) singular system.
std::vector<double> solve_linear(Matrix A, std::vector<double> b);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(Matrix S, double tol = 1e-12, int max_sweeps = 100);

}  // namespace nadrc
