#pragma once

#include <vector>

#include "qbethe/complexmat.hpp"

namespace qbethe {

// Complex polynomial in the spectral variable u, coefficients low to high.
class PolyU {
public:
    PolyU() = default;
    explicit PolyU(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyU one() { return PolyU({Complex(1)}); }
    static PolyU from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);

    const std::vector<Complex>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }

    Complex eval(Complex u) const;  // Horner
    Complex operator()(Complex u) const { return eval(u); }

    PolyU operator+(const PolyU& o) const;
    PolyU operator-(const PolyU& o) const;
    PolyU operator*(const PolyU& o) const;
    PolyU scaled(Complex s) const;

    // p(s * u): coefficient k gets multiplied by s^k.
    PolyU scale_arg(Complex s) const;

    // Drop trailing coefficients below tol * max|coeff|.
    PolyU trimmed(double tol) const;

    double max_abs_coeff() const;

    // Polynomial division: *this = q * div + r. Throws on zero divisor.
    void divmod(const PolyU& div, PolyU& quot, PolyU& rem) const;

    // Roots via the companion matrix. Degree 0 gives no roots.
    std::vector<Complex> roots() const;

private:
    std::vector<Complex> c_;
    void trim();
};

}  // namespace qbethe
