#include "qbethe/monomial.hpp"

#include <sstream>

namespace qbethe {

std::string SpectralPoint::to_string() const {
    if (qexp == 0) return base;
    std::ostringstream os;
    os << base << "q";
    if (qexp != 1) os << "^" << qexp;
    return os.str();
}

LMonomial LMonomial::X(int node, const SpectralPoint& a, int exp) {
    LMonomial m;
    m.mul_x(node, a, exp);
    return m;
}

LMonomial LMonomial::y(int node, const Rational& b) {
    LMonomial m;
    m.mul_y(node, b);
    return m;
}

int LMonomial::x_exponent(int node, const SpectralPoint& a) const {
    auto it = x_.find({node, a});
    return it == x_.end() ? 0 : it->second;
}

void LMonomial::mul_x(int node, const SpectralPoint& a, int exp) {
    if (exp == 0) return;
    XKey key{node, a};
    auto it = x_.try_emplace(key, 0).first;
    it->second += exp;
    if (it->second == 0) x_.erase(it);
}

void LMonomial::mul_y(int node, const Rational& b) {
    if (b.is_zero()) return;
    auto it = y_.try_emplace(node, Rational(0)).first;
    it->second += b;
    if (it->second.is_zero()) y_.erase(it);
}

LMonomial LMonomial::operator*(const LMonomial& o) const {
    LMonomial r = *this;
    for (const auto& [k, e] : o.x_) r.mul_x(k.first, k.second, e);
    for (const auto& [n, b] : o.y_) r.mul_y(n, b);
    return r;
}

LMonomial LMonomial::inverse() const {
    LMonomial r;
    for (const auto& [k, e] : x_) r.x_[k] = -e;
    for (const auto& [n, b] : y_) r.y_[n] = -b;
    return r;
}

bool LMonomial::operator<(const LMonomial& o) const {
    if (x_ != o.x_)
        return std::lexicographical_compare(
            x_.begin(), x_.end(), o.x_.begin(), o.x_.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
    return std::lexicographical_compare(
        y_.begin(), y_.end(), o.y_.begin(), o.y_.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

std::string LMonomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : x_) {
        if (!first) os << "*";
        first = false;
        os << "X[" << k.first << "," << k.second.to_string() << "]";
        if (e != 1) os << "^" << e;
    }
    for (const auto& [n, b] : y_) {
        if (!first) os << "*";
        first = false;
        os << "y[" << n << "]^" << b.to_string();
    }
    return os.str();
}

LMonomial canonical_Y(int node, const SpectralPoint& a, const RootData& rd, int exp) {
    int di = rd.symmetrizer(node);
    LMonomial m;
    m.mul_x(node, a.shifted(-di), exp);
    m.mul_x(node, a.shifted(di), -exp);
    return m;
}

LMonomial canonical_A(int node, const SpectralPoint& a, const RootData& rd, int exp) {
    LMonomial m;
    for (int j = 1; j <= rd.rank(); ++j) {
        int e = rd.qij_exponent(j, node);
        if (e == 0) continue;  // X_{j,a}/X_{j,a} cancels
        m.mul_x(j, a.shifted(-e), exp);
        m.mul_x(j, a.shifted(e), -exp);
    }
    return m;
}

LMonomial canonical_qalpha(int node, const RootData& rd, int exp) {
    LMonomial m;
    for (int j = 1; j <= rd.rank(); ++j)
        m.mul_y(j, Rational(static_cast<long long>(rd.cartan(j, node)) * exp));
    return m;
}

LMonomial canonicalize(const std::vector<Symbol>& expr, const RootData& rd) {
    LMonomial m;
    for (const auto& s : expr) {
        switch (s.kind) {
            case Symbol::Kind::X:
                m.mul_x(s.node, s.point, s.exp);
                break;
            case Symbol::Kind::Y:
                m = m * canonical_Y(s.node, s.point, rd, s.exp);
                break;
            case Symbol::Kind::A:
                m = m * canonical_A(s.node, s.point, rd, s.exp);
                break;
            case Symbol::Kind::y:
                m.mul_y(s.node, s.yexp);
                break;
            case Symbol::Kind::qalpha:
                m = m * canonical_qalpha(s.node, rd, s.exp);
                break;
        }
    }
    return m;
}

int d_degree(const LMonomial& m, int node) {
    int d = 0;
    for (const auto& [k, e] : m.xexp())
        if (k.first == node) d += e;
    return d;
}

}  // namespace qbethe
