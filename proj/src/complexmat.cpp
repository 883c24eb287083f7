#include "qbethe/complexmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qbethe {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Complex aik = (*this)(i, k);
            if (aik == Complex(0)) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::scaled(Complex s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

std::vector<Complex> Matrix::apply(const std::vector<Complex>& v) const {
    std::vector<Complex> r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Complex s = 0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<Complex> lu_solve(Matrix a, std::vector<Complex> b) {
    int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("lu_solve: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < 1e-300) throw std::runtime_error("lu_solve: singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            Complex f = a(r, col) / a(col, col);
            if (f == Complex(0)) continue;
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<Complex> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Complex s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
        x[r] = s / a(r, r);
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    int n = a.rows();
    Matrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> e(n);
        e[j] = 1.0;
        auto col = lu_solve(a, e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

std::vector<Complex> qr_least_squares(Matrix a, std::vector<Complex> b) {
    int m = a.rows(), n = a.cols();
    if (m < n || static_cast<int>(b.size()) != m)
        throw std::invalid_argument("qr_least_squares: need rows >= cols");
    // Householder triangularization applied to [A | b]
    for (int k = 0; k < n; ++k) {
        double xnorm = 0;
        for (int i = k; i < m; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm < 1e-300) continue;
        Complex akk = a(k, k);
        double aabs = std::abs(akk);
        Complex phase = aabs > 0 ? akk / aabs : Complex(1);
        Complex alpha = -phase * xnorm;
        std::vector<Complex> v(m - k);
        v[0] = akk - alpha;
        for (int i = k + 1; i < m; ++i) v[i - k] = a(i, k);
        double vnorm2 = 0;
        for (const auto& vi : v) vnorm2 += std::norm(vi);
        if (vnorm2 < 1e-300) continue;
        auto reflect = [&](auto&& get, auto&& set) {
            Complex dot = 0;
            for (int i = k; i < m; ++i) dot += std::conj(v[i - k]) * get(i);
            Complex f = 2.0 * dot / vnorm2;
            for (int i = k; i < m; ++i) set(i, get(i) - f * v[i - k]);
        };
        for (int j = k; j < n; ++j)
            reflect([&](int i) { return a(i, j); }, [&](int i, Complex val) { a(i, j) = val; });
        reflect([&](int i) { return b[i]; }, [&](int i, Complex val) { b[i] = val; });
    }
    std::vector<Complex> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Complex s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
        if (std::abs(a(r, r)) < 1e-300)
            throw std::runtime_error("qr_least_squares: rank deficient system");
        x[r] = s / a(r, r);
    }
    return x;
}

namespace {

// Householder reduction to upper Hessenberg, accumulating the similarity.
void hessenberg(Matrix& h, Matrix& q) {
    int n = h.rows();
    q = Matrix::identity(n);
    for (int k = 0; k < n - 2; ++k) {
        double xnorm = 0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm < 1e-300) continue;
        Complex x0 = h(k + 1, k);
        double x0abs = std::abs(x0);
        Complex phase = x0abs > 0 ? x0 / x0abs : Complex(1);
        Complex alpha = -phase * xnorm;
        std::vector<Complex> v(n - k - 1);
        v[0] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
        double vnorm2 = 0;
        for (const auto& vi : v) vnorm2 += std::norm(vi);
        if (vnorm2 < 1e-300) continue;
        // H <- P H P, Q <- Q P with P = I - 2 v v*/|v|^2 acting on rows k+1..n
        for (int j = 0; j < n; ++j) {
            Complex dot = 0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i - k - 1]) * h(i, j);
            Complex f = 2.0 * dot / vnorm2;
            for (int i = k + 1; i < n; ++i) h(i, j) -= f * v[i - k - 1];
        }
        for (int i = 0; i < n; ++i) {
            Complex dot = 0;
            for (int j = k + 1; j < n; ++j) dot += h(i, j) * v[j - k - 1];
            Complex f = 2.0 * dot / vnorm2;
            for (int j = k + 1; j < n; ++j) h(i, j) -= f * std::conj(v[j - k - 1]);
        }
        for (int i = 0; i < n; ++i) {
            Complex dot = 0;
            for (int j = k + 1; j < n; ++j) dot += q(i, j) * v[j - k - 1];
            Complex f = 2.0 * dot / vnorm2;
            for (int j = k + 1; j < n; ++j) q(i, j) -= f * std::conj(v[j - k - 1]);
        }
    }
}

}  // namespace

Eigen eigendecompose(const Matrix& a) {
    int n = a.rows();
    if (n == 0) return {{}, Matrix(0, 0)};
    if (a.cols() != n) throw std::invalid_argument("eigendecompose: square matrix required");

    Matrix h = a, q;
    hessenberg(h, q);

    double scale = std::max(h.max_abs(), 1e-300);
    const double eps = 1e-15;

    // shifted QR with Givens rotations; deflate from the bottom
    int hi = n - 1;
    int iter_total = 0;
    while (hi > 0) {
        int lo = hi;
        while (lo > 0) {
            double sub = std::abs(h(lo, lo - 1));
            if (sub < eps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)) + scale * 1e-2)) {
                h(lo, lo - 1) = 0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            continue;
        }
        if (++iter_total > 60 * n)
            throw std::runtime_error("eigendecompose: QR iteration did not converge");

        // Wilkinson shift from the trailing 2x2 of the active block
        Complex t11 = h(hi - 1, hi - 1), t12 = h(hi - 1, hi);
        Complex t21 = h(hi, hi - 1), t22 = h(hi, hi);
        Complex tr = t11 + t22;
        Complex det = t11 * t22 - t12 * t21;
        Complex disc = std::sqrt(tr * tr - 4.0 * det);
        Complex mu1 = (tr + disc) / 2.0, mu2 = (tr - disc) / 2.0;
        Complex mu = std::abs(mu1 - t22) < std::abs(mu2 - t22) ? mu1 : mu2;
        if (iter_total % 17 == 0) mu += Complex(0.501, 0.273) * std::abs(h(hi, hi - 1));

        // explicit shifted QR sweep on the active block
        std::vector<std::array<Complex, 2>> rot(hi - lo);
        for (int k = lo; k <= hi; ++k) h(k, k) -= mu;
        for (int k = lo; k < hi; ++k) {
            Complex x = h(k, k), z = h(k + 1, k);
            double r = std::sqrt(std::norm(x) + std::norm(z));
            Complex c, s;
            if (r < 1e-300) {
                c = 1;
                s = 0;
            } else {
                c = x / r;
                s = z / r;
            }
            rot[k - lo] = {c, s};
            for (int j = k; j <= n - 1; ++j) {
                Complex h1 = h(k, j), h2 = h(k + 1, j);
                h(k, j) = std::conj(c) * h1 + std::conj(s) * h2;
                h(k + 1, j) = -s * h1 + c * h2;
            }
        }
        for (int k = lo; k < hi; ++k) {
            Complex c = rot[k - lo][0], s = rot[k - lo][1];
            int top = std::min(k + 2, hi);
            for (int i = 0; i <= top; ++i) {
                Complex h1 = h(i, k), h2 = h(i, k + 1);
                h(i, k) = h1 * c + h2 * s;
                h(i, k + 1) = -h1 * std::conj(s) + h2 * std::conj(c);
            }
            for (int i = 0; i < n; ++i) {
                Complex q1 = q(i, k), q2 = q(i, k + 1);
                q(i, k) = q1 * c + q2 * s;
                q(i, k + 1) = -q1 * std::conj(s) + q2 * std::conj(c);
            }
        }
        for (int k = lo; k <= hi; ++k) h(k, k) += mu;
    }

    // eigenvectors of the triangular factor by back substitution
    Eigen out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = h(k, k);
    Matrix y(n, n);
    for (int k = 0; k < n; ++k) {
        y(k, k) = 1.0;
        for (int i = k - 1; i >= 0; --i) {
            Complex s = 0;
            for (int j = i + 1; j <= k; ++j) s += h(i, j) * y(j, k);
            Complex denom = h(i, i) - h(k, k);
            if (std::abs(denom) < 1e-12 * scale)
                denom = Complex(1e-12 * scale, 1e-12 * scale);
            y(i, k) = -s / denom;
        }
    }
    out.vectors = q * y;
    for (int k = 0; k < n; ++k) {
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += std::norm(out.vectors(i, k));
        norm = std::sqrt(norm);
        if (norm > 0)
            for (int i = 0; i < n; ++i) out.vectors(i, k) /= norm;
    }
    return out;
}

}  // namespace qbethe
