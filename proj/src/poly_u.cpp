#include "qbethe/poly_u.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbethe {

void PolyU::trim() {
    while (!c_.empty() && c_.back() == Complex(0)) c_.pop_back();
}

PolyU PolyU::from_roots(const std::vector<Complex>& roots, Complex leading) {
    std::vector<Complex> c{leading};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i] -= r * c[i];
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return PolyU(std::move(c));
}

Complex PolyU::eval(Complex u) const {
    Complex r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * u + c_[i];
    return r;
}

PolyU PolyU::operator+(const PolyU& o) const {
    std::vector<Complex> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return PolyU(std::move(c));
}

PolyU PolyU::operator-(const PolyU& o) const { return *this + o.scaled(-1.0); }

PolyU PolyU::operator*(const PolyU& o) const {
    if (c_.empty() || o.c_.empty()) return PolyU();
    std::vector<Complex> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return PolyU(std::move(c));
}

PolyU PolyU::scaled(Complex s) const {
    std::vector<Complex> c = c_;
    for (auto& v : c) v *= s;
    return PolyU(std::move(c));
}

PolyU PolyU::scale_arg(Complex s) const {
    std::vector<Complex> c = c_;
    Complex p = 1;
    for (auto& v : c) {
        v *= p;
        p *= s;
    }
    return PolyU(std::move(c));
}

PolyU PolyU::trimmed(double tol) const {
    double m = max_abs_coeff();
    std::vector<Complex> c = c_;
    while (!c.empty() && std::abs(c.back()) <= tol * m) c.pop_back();
    return PolyU(std::move(c));
}

double PolyU::max_abs_coeff() const {
    double m = 0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

void PolyU::divmod(const PolyU& div, PolyU& quot, PolyU& rem) const {
    if (div.is_zero()) throw std::invalid_argument("PolyU::divmod: zero divisor");
    std::vector<Complex> r = c_;
    int dn = div.degree();
    Complex lead = div.c_.back();
    std::vector<Complex> q(std::max<int>(0, static_cast<int>(c_.size()) - dn), Complex(0));
    for (int k = static_cast<int>(r.size()) - 1; k >= dn; --k) {
        Complex f = r[k] / lead;
        q[k - dn] = f;
        if (f == Complex(0)) continue;
        for (int j = 0; j <= dn; ++j) r[k - dn + j] -= f * div.c_[j];
        r[k] = 0;
    }
    quot = PolyU(std::move(q));
    rem = PolyU(std::move(r));
}

std::vector<Complex> PolyU::roots() const {
    PolyU p = trimmed(1e-14);
    int n = p.degree();
    if (n <= 0) return {};
    Matrix comp(n, n);
    Complex lead = p.c_.back();
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.c_[i] / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    auto eig = eigendecompose(comp);
    // Newton polish with the analytic derivative
    std::vector<Complex> dc(n);
    for (int k = 1; k <= n; ++k) dc[k - 1] = p.c_[k] * static_cast<double>(k);
    PolyU dp(std::move(dc));
    std::vector<Complex> out = eig.values;
    for (auto& z : out) {
        for (int it = 0; it < 8; ++it) {
            Complex f = p.eval(z);
            Complex df = dp.eval(z);
            if (std::abs(df) < 1e-300) break;
            Complex step = f / df;
            z -= step;
            if (std::abs(step) < 1e-15 * (std::abs(z) + 1.0)) break;
        }
    }
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

}  // namespace qbethe
