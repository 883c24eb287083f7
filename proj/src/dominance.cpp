#include "qbethe/dominance.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbethe {

LMonomial DominanceWitness::reassemble(const RootData& rd) const {
    LMonomial m;
    for (const auto& [node, pt, e] : y_factors) m = m * canonical_Y(node, pt, rd, e);
    for (const auto& [node, pt, e] : x_factors) m.mul_x(node, pt, e);
    for (const auto& [node, b] : yexp) m.mul_y(node, b);
    return m;
}

namespace {

struct StringKey {
    int node;
    std::string base;
    int residue;  // qexp mod 2 d_i, normalized to [0, 2 d_i)
    bool operator<(const StringKey& o) const {
        return std::tie(node, base, residue) < std::tie(o.node, o.base, o.residue);
    }
};

}  // namespace

DominanceResult is_dominant(const LMonomial& m, const RootData& rd) {
    // group X-exponents into q_i^2-strings
    std::map<StringKey, std::vector<std::pair<int, int>>> strings;  // key -> [(qexp, exp)]
    for (const auto& [key, e] : m.xexp()) {
        int node = key.first;
        int step = 2 * rd.symmetrizer(node);
        int res = ((key.second.qexp % step) + step) % step;
        strings[{node, key.second.base, res}].push_back({key.second.qexp, e});
    }

    DominanceWitness w;
    w.yexp = m.yexp();
    for (auto& [key, pts] : strings) {
        std::sort(pts.begin(), pts.end());
        int n = static_cast<int>(pts.size());
        std::vector<int> prefix(n);
        int run = 0;
        for (int t = 0; t < n; ++t) {
            run += pts[t].second;
            prefix[t] = run;
            if (run < 0) return {false, std::nullopt};
        }
        // minimal-carry split: X-part is the running minimum of the suffix,
        // Y-chains absorb the rest
        std::vector<int> xpart(n);
        int suffix_min = prefix[n - 1];
        for (int t = n - 1; t >= 0; --t) {
            suffix_min = std::min(suffix_min, prefix[t]);
            xpart[t] = suffix_min;
        }
        int step = 2 * rd.symmetrizer(key.node);
        int prev_x = 0;
        for (int t = 0; t < n; ++t) {
            int dx = xpart[t] - prev_x;
            prev_x = xpart[t];
            if (dx > 0)
                w.x_factors.push_back({key.node, SpectralPoint(key.base, pts[t].first), dx});
            int ycount = prefix[t] - xpart[t];
            if (ycount > 0) {
                // Y_{i,c} with c = point * q_i sits between this lattice point
                // and the next; chains repeat across every gap step.
                int until = (t + 1 < n) ? pts[t + 1].first : pts[t].first + step;
                for (int k = pts[t].first; k < until; k += step) {
                    int di = rd.symmetrizer(key.node);
                    w.y_factors.push_back({key.node, SpectralPoint(key.base, k + di), ycount});
                }
            }
        }
    }
    return {true, w};
}

bool generic_relative_to(const SpectralPoint& c, const Sl2String& s) {
    if (c.base != s.tail.base) return true;
    int diff = s.tail.qexp - c.qexp;  // c = tail * q^{-diff}
    if (diff % 2 != 0) return true;
    int t = diff / 2;
    return !(t >= 0 && t <= s.size() - 2);
}

Sl2Factorization sl2_factor(const LMonomial& m, const RootData& rd) {
    if (rd.type_label() != "A1")
        throw std::invalid_argument("sl2_factor: root data must be A1");
    if (!is_dominant(m, rd).dominant)
        throw std::invalid_argument("sl2_factor: monomial is not dominant");

    Sl2Factorization out;
    for (const auto& [node, b] : m.yexp()) out.m1.mul_y(node, b);

    // per (base, parity) lattice: pair each tail with the nearest available
    // head below it (shortest string first)
    std::map<std::pair<std::string, int>, std::vector<std::pair<int, int>>> lattices;
    for (const auto& [key, e] : m.xexp()) {
        int res = ((key.second.qexp % 2) + 2) % 2;
        lattices[{key.second.base, res}].push_back({key.second.qexp, e});
    }
    for (auto& [key, pts] : lattices) {
        std::sort(pts.begin(), pts.end());
        std::map<int, int> avail;  // qexp -> remaining positive exponent
        for (const auto& [k, e] : pts)
            if (e > 0) avail[k] = e;
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            auto [k, e] = *it;
            if (e >= 0) continue;
            for (int copy = 0; copy < -e; ++copy) {
                // largest available head with qexp < k
                auto hit = avail.lower_bound(k);
                if (hit == avail.begin())
                    throw std::logic_error("sl2_factor: unmatched tail in dominant monomial");
                --hit;
                Sl2String s{SpectralPoint(key.first, hit->first), SpectralPoint(key.first, k)};
                out.strings.push_back(s);
                out.m0.mul_x(1, s.head, 1);
                out.m0.mul_x(1, s.tail, -1);
                if (--hit->second == 0) avail.erase(hit);
            }
        }
        for (const auto& [k, cnt] : avail)
            for (int copy = 0; copy < cnt; ++copy)
                out.generic_points.push_back(SpectralPoint(key.first, k));
    }
    out.mp = LMonomial();
    for (const auto& pt : out.generic_points) out.mp.mul_x(1, pt, 1);
    for (const auto& pt : out.generic_points)
        for (const auto& s : out.strings)
            if (!generic_relative_to(pt, s))
                throw std::logic_error("sl2_factor: greedy pairing left a non-generic point");
    return out;
}

}  // namespace qbethe
