#include "qbethe/tq.hpp"

#include <stdexcept>

namespace qbethe {

namespace {

void accumulate(std::map<LMonomial, BigInt>& acc, const LMonomial& m, const BigInt& c) {
    auto it = acc.try_emplace(m, BigInt()).first;
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

// Keep only terms whose height relative to `head` is <= depth.
std::map<LMonomial, BigInt> filtered_relative(const std::map<LMonomial, BigInt>& terms,
                                              const LMonomial& head, int depth,
                                              const RootData& rd) {
    std::map<LMonomial, BigInt> out;
    for (const auto& [m, c] : terms) {
        auto h = weight_drop_height(m / head, rd);
        if (!h)
            throw std::logic_error("verify_tq_identity: term does not lie under the common head");
        if (*h <= depth) out.emplace(m, c);
    }
    return out;
}

}  // namespace

TQReport verify_tq_identity(const RootData& rd, int i, const SpectralPoint& a, int depth) {
    if (depth < 1) throw std::invalid_argument("verify_tq_identity: depth must be >= 1");

    TQReport rep;
    rep.type = rd.type_label();
    rep.node = i;
    rep.depth = depth;
    rep.conjectural_barchi = !barchi_is_proved(rd);

    QChar lhs = multiply(nplus_char(i, a, rd, depth), mplus_char(i, a, rd, depth), depth, rd);

    // The two product characters; their heads are head(lhs) and
    // head(lhs) * A^{-1}_{i,a}, so both live under the common head.
    auto product_side = [&](int sign) {
        QChar acc;
        bool first = true;
        for (int j = 1; j <= rd.rank(); ++j) {
            if (rd.cartan(j, i) == 0) continue;
            QChar f = mplus_char(j, a.shifted(sign * rd.qij_exponent(j, i)), rd, depth);
            acc = first ? f : multiply(acc, f, depth, rd);
            first = false;
        }
        return acc;
    };
    QChar p_minus = product_side(-1);
    QChar p_plus = product_side(+1);

    rep.lhs = lhs.terms();
    std::map<LMonomial, BigInt> rhs_raw;
    for (const auto& [m, c] : p_minus.terms()) accumulate(rhs_raw, m, c);
    for (const auto& [m, c] : p_plus.terms()) accumulate(rhs_raw, m, c);
    rep.rhs = filtered_relative(rhs_raw, lhs.head(), depth, rd);

    for (const auto& [m, c] : rep.lhs) accumulate(rep.diff, m, c);
    for (const auto& [m, c] : rep.rhs) accumulate(rep.diff, m, -c);
    rep.exact_equal = rep.diff.empty();
    return rep;
}

namespace {

std::optional<std::vector<std::pair<int, SpectralPoint>>> peel_a_inverses(
    const LMonomial& rel, const RootData& rd, int budget) {
    if (!rel.yexp().empty()) return std::nullopt;
    if (rel.xexp().empty()) return std::vector<std::pair<int, SpectralPoint>>{};
    if (budget <= 0) return std::nullopt;

    // Any negative X-leg must be the leg X^{-1}_{k, c q_{k,j}^{-1}} of some
    // factor A^{-1}_{j,c}; try each admissible j for the first such leg and
    // recurse on the rest.
    for (const auto& [key, e] : rel.xexp()) {
        if (e >= 0) continue;
        int k = key.first;
        for (int j = 1; j <= rd.rank(); ++j) {
            int shift = rd.qij_exponent(k, j);
            if (shift == 0) continue;
            SpectralPoint c = key.second.shifted(shift);
            LMonomial rest = rel * canonical_A(j, c, rd, 1);
            auto sub = peel_a_inverses(rest, rd, budget - 1);
            if (sub) {
                sub->push_back({j, c});
                return sub;
            }
        }
        return std::nullopt;  // this leg fits no factor
    }
    return std::nullopt;  // positive exponents only: not a product of A^{-1}'s
}

}  // namespace

std::optional<std::vector<std::pair<int, SpectralPoint>>> factor_into_a_inverses(
    const LMonomial& rel, const RootData& rd) {
    auto height = weight_drop_height(rel, rd);
    if (!height) return std::nullopt;
    return peel_a_inverses(rel, rd, *height);
}

bool tensor_irreducible_sufficient(const std::vector<std::pair<int, SpectralPoint>>& v_a_indices,
                                   const LMonomial& m_head) {
    for (const auto& [key, e] : m_head.xexp()) {
        if (e < 0)
            throw std::invalid_argument(
                "tensor_irreducible_sufficient: head is not of polynomial type");
        for (const auto& [j, c] : v_a_indices)
            if (key.first == j && key.second == c) return false;
    }
    return true;
}

bool tensor_irreducible_sufficient(const QChar& v_char, const LMonomial& m_head,
                                   const RootData& rd) {
    std::vector<std::pair<int, SpectralPoint>> indices;
    for (const auto& [m, c] : v_char.terms()) {
        auto f = factor_into_a_inverses(m / v_char.head(), rd);
        if (!f)
            throw std::invalid_argument(
                "tensor_irreducible_sufficient: character term is not in factored A^{-1} form");
        indices.insert(indices.end(), f->begin(), f->end());
    }
    return tensor_irreducible_sufficient(indices, m_head);
}

}  // namespace qbethe
