#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qbethe/rational.hpp"
#include "qbethe/root_data.hpp"

namespace qbethe {

// A spectral point base * q^k. Bases are formal symbols ("a", "b", ...);
// distinct bases are algebraically independent. Every shift appearing in
// the implemented formulas is an integer power of q, so k stays an int.
struct SpectralPoint {
    std::string base = "a";
    int qexp = 0;

    SpectralPoint() = default;
    SpectralPoint(std::string b, int k) : base(std::move(b)), qexp(k) {}

    SpectralPoint shifted(int dk) const { return SpectralPoint(base, qexp + dk); }

    bool operator==(const SpectralPoint& o) const { return base == o.base && qexp == o.qexp; }
    bool operator<(const SpectralPoint& o) const {
        return std::tie(base, qexp) < std::tie(o.base, o.qexp);
    }
    std::string to_string() const;
};

// Canonical Laurent monomial: sparse X-exponents over (node, spectral point)
// plus rational y-exponents per node. Zero exponents are never stored, so
// equality of maps is equality of monomials.
class LMonomial {
public:
    using XKey = std::pair<int, SpectralPoint>;  // (node, point)

    LMonomial() = default;

    static LMonomial X(int node, const SpectralPoint& a, int exp = 1);
    static LMonomial y(int node, const Rational& b);

    const std::map<XKey, int>& xexp() const { return x_; }
    const std::map<int, Rational>& yexp() const { return y_; }

    bool is_unit() const { return x_.empty() && y_.empty(); }
    bool is_pure_y() const { return x_.empty(); }

    int x_exponent(int node, const SpectralPoint& a) const;

    void mul_x(int node, const SpectralPoint& a, int exp);
    void mul_y(int node, const Rational& b);

    LMonomial operator*(const LMonomial& o) const;
    LMonomial inverse() const;
    LMonomial operator/(const LMonomial& o) const { return *this * o.inverse(); }

    bool operator==(const LMonomial& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const LMonomial& o) const { return !(*this == o); }
    bool operator<(const LMonomial& o) const;

    std::string to_string() const;

private:
    std::map<XKey, int> x_;
    std::map<int, Rational> y_;
};

// One factor of a formal symbol product fed to canonicalize().
struct Symbol {
    enum class Kind { X, Y, A, y, qalpha };

    Kind kind = Kind::X;
    int node = 1;
    SpectralPoint point;   // for X/Y/A
    int exp = 1;           // integer exponent for X/Y/A/qalpha
    Rational yexp;         // exponent for y

    static Symbol X(int node, SpectralPoint a, int e = 1) { return {Kind::X, node, std::move(a), e, {}}; }
    static Symbol Y(int node, SpectralPoint a, int e = 1) { return {Kind::Y, node, std::move(a), e, {}}; }
    static Symbol A(int node, SpectralPoint a, int e = 1) { return {Kind::A, node, std::move(a), e, {}}; }
    static Symbol y(int node, Rational b) { return {Kind::y, node, {}, 1, b}; }
    static Symbol qalpha(int node, int e = 1) { return {Kind::qalpha, node, {}, e, {}}; }
};

// Rewrites a formal product of X/Y/A/y/q^alpha symbols into the canonical
// X/y form via
//   Y_{i,a} = X_{i,a q_i^{-1}} / X_{i,a q_i},
//   A_{i,a} = prod_j X_{j,a q_{j,i}^{-1}} / X_{j,a q_{j,i}},
//   q^{alpha_i} = prod_j y_j^{C_{j,i}}.
LMonomial canonicalize(const std::vector<Symbol>& expr, const RootData& rd);

// Convenience canonical factors.
LMonomial canonical_Y(int node, const SpectralPoint& a, const RootData& rd, int exp = 1);
LMonomial canonical_A(int node, const SpectralPoint& a, const RootData& rd, int exp = 1);
LMonomial canonical_qalpha(int node, const RootData& rd, int exp = 1);

// d_i(m): sum of the i-indexed X-exponents.
int d_degree(const LMonomial& m, int node);

}  // namespace qbethe
