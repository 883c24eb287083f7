#include "qbethe/qchar.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qbethe {

void QChar::add_term(const LMonomial& m, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.try_emplace(m, BigInt()).first;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string QChar::to_string() const {
    std::ostringstream os;
    os << "head=" << head_.to_string() << " depth=";
    if (depth_ == kDepthInf)
        os << "inf";
    else
        os << depth_;
    os << " [" << terms_.size() << " terms]";
    for (const auto& [m, c] : terms_) os << "\n  " << c.to_string() << " * " << m.to_string();
    return os.str();
}

std::optional<std::vector<int>> weight_drop_coords(const LMonomial& rel, const RootData& rd) {
    int n = rd.rank();
    // y-content of varpi(rel): w_j = yexp_j - (1/(2 d_j)) * sum_k e_{j,*,k} k,
    // valid only when the X-exponents balance per (node, base).
    std::vector<Rational> w(n);
    for (const auto& [node, b] : rel.yexp()) {
        if (node < 1 || node > n) return std::nullopt;
        w[node - 1] += b;
    }
    std::map<std::pair<int, std::string>, long long> base_balance;
    for (const auto& [key, e] : rel.xexp()) {
        int node = key.first;
        if (node < 1 || node > n) return std::nullopt;
        base_balance[{node, key.second.base}] += e;
        w[node - 1] += Rational(-static_cast<long long>(e) * key.second.qexp,
                                2LL * rd.symmetrizer(node));
    }
    for (const auto& [k, s] : base_balance)
        if (s != 0) return std::nullopt;

    // Solve w = -C beta by rational Gaussian elimination.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rational(-rd.cartan(i + 1, j + 1));
        aug[i][n] = w[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!aug[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;  // Cartan matrices are invertible; defensive only
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col] / aug[col][col];
            for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i) {
        Rational bi = aug[i][n] / aug[i][i];
        if (!bi.is_integer() || bi.num < 0) return std::nullopt;
        beta[i] = static_cast<int>(bi.num);
    }
    return beta;
}

std::optional<int> weight_drop_height(const LMonomial& rel, const RootData& rd) {
    auto coords = weight_drop_coords(rel, rd);
    if (!coords) return std::nullopt;
    return std::accumulate(coords->begin(), coords->end(), 0);
}

static int term_height(const LMonomial& m, const QChar& x, const RootData& rd) {
    auto h = weight_drop_height(m / x.head(), rd);
    if (!h)
        throw std::logic_error("QChar: term " + m.to_string() +
                               " does not factor over A^{-1} relative to the head");
    return *h;
}

QChar multiply(const QChar& x, const QChar& y, int depth, const RootData& rd) {
    if (depth > x.depth() || depth > y.depth())
        throw std::invalid_argument("multiply: requested depth exceeds an input depth");
    QChar r(x.head() * y.head(), depth);
    // pre-grade both factors so the product loop can cut off early
    std::vector<std::pair<const LMonomial*, int>> xg, yg;
    std::vector<const BigInt*> xc, yc;
    for (const auto& [m, c] : x.terms()) {
        int h = term_height(m, x, rd);
        if (depth == kDepthInf || h <= depth) {
            xg.push_back({&m, h});
            xc.push_back(&c);
        }
    }
    for (const auto& [m, c] : y.terms()) {
        int h = term_height(m, y, rd);
        if (depth == kDepthInf || h <= depth) {
            yg.push_back({&m, h});
            yc.push_back(&c);
        }
    }
    for (size_t i = 0; i < xg.size(); ++i) {
        for (size_t j = 0; j < yg.size(); ++j) {
            if (depth != kDepthInf && xg[i].second + yg[j].second > depth) continue;
            r.add_term(*xg[i].first * *yg[j].first, *xc[i] * *yc[j]);
        }
    }
    return r;
}

QChar truncate(const QChar& x, int depth, const RootData& rd) {
    if (depth > x.depth())
        throw std::invalid_argument("truncate: depth exceeds input depth");
    QChar r(x.head(), depth);
    for (const auto& [m, c] : x.terms())
        if (depth == kDepthInf || term_height(m, x, rd) <= depth) r.add_term(m, c);
    return r;
}

CollapsedChar weight_collapse(const QChar& x, const RootData& rd) {
    CollapsedChar out;
    out.head = x.head();
    out.depth = x.depth();
    for (const auto& [m, c] : x.terms()) {
        auto coords = weight_drop_coords(m / x.head(), rd);
        if (!coords)
            throw std::logic_error("weight_collapse: term " + m.to_string() +
                                   " not factorable over A^{-1}");
        auto it = out.terms.try_emplace(*coords, BigInt()).first;
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
    }
    return out;
}

BigInt dimension(const QChar& x) {
    if (x.depth() != kDepthInf)
        throw std::invalid_argument("dimension: character is truncated, not exactly finite");
    BigInt d;
    for (const auto& [m, c] : x.terms()) d += c;
    return d;
}

}  // namespace qbethe
