#pragma once

#include <complex>
#include <vector>

namespace qbethe {

using Complex = std::complex<double>;

// Dense complex matrix, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Complex s) const;
    Matrix adjoint() const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    double max_abs() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> a_;
};

// Solve A x = b by LU with partial pivoting; A square. Throws on singular A.
std::vector<Complex> lu_solve(Matrix a, std::vector<Complex> b);

// Inverse via LU; throws on singular input.
Matrix inverse(const Matrix& a);

// Least squares min |A x - b| via Householder QR; requires rows >= cols.
std::vector<Complex> qr_least_squares(Matrix a, std::vector<Complex> b);

// Full complex eigendecomposition via Hessenberg reduction and shifted QR.
// vectors.col(k) is the right eigenvector of values[k], normalized to unit
// 2-norm. Throws if the QR iteration fails to converge.
struct Eigen {
    std::vector<Complex> values;
    Matrix vectors;
};
Eigen eigendecompose(const Matrix& a);

}  // namespace qbethe
