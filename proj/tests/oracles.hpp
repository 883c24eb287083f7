#pragma once

// Test-side oracles, independent of the library implementation paths they
// check.

#include <cmath>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "qbethe/char_constructors.hpp"
#include "qbethe/dominance.hpp"

namespace qbethe::oracles {

// Hook content formula: #SSYT(lambda, m) = prod_box (m + c) / h.
inline long long ssyt_hook_content(const Partition& lambda, int m) {
    Partition dual = lambda.dual();
    long long num = 1, den = 1;
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        for (int j = 1; j <= lambda.parts[i]; ++j) {
            int content = j - static_cast<int>(i) - 1;
            int hook = lambda.parts[i] - j + dual.parts[j - 1] - static_cast<int>(i) - 1 + 1;
            num *= m + content;
            den *= hook;
        }
    }
    return num / den;
}

// Dominance by exhaustive search over bounded nonnegative Y/X assignments
// per string lattice. Y at a midpoint adds +1 below and -1 above; X adds +1.
inline bool dominant_by_search(const LMonomial& m, const RootData& rd) {
    std::map<std::tuple<int, std::string, int>, std::map<int, int>> strings;
    for (const auto& [key, e] : m.xexp()) {
        int step = 2 * rd.symmetrizer(key.first);
        int res = ((key.second.qexp % step) + step) % step;
        strings[{key.first, key.second.base, res}][key.second.qexp] = e;
    }
    for (const auto& [key, pts] : strings) {
        int node = std::get<0>(key);
        int step = 2 * rd.symmetrizer(node);
        int lo = pts.begin()->first, hi = pts.rbegin()->first;
        int npos = (hi - lo) / step + 1;
        std::vector<int> target(npos, 0);
        int bound = 0;
        for (const auto& [k, e] : pts) {
            target[(k - lo) / step] = e;
            bound += std::abs(e);
        }
        int ny = npos - 1;
        if (ny <= 0) {
            bool ok = true;
            for (int e : target)
                if (e < 0) ok = false;
            if (!ok) return false;
            continue;
        }
        std::vector<int> y(ny, 0);
        bool found = false;
        std::function<void(int)> search = [&](int t) {
            if (found) return;
            if (t == ny) {
                for (int pos = 0; pos < npos; ++pos) {
                    int x = target[pos] - (pos < ny ? y[pos] : 0) + (pos > 0 ? y[pos - 1] : 0);
                    if (x < 0) return;
                }
                found = true;
                return;
            }
            for (int v = 0; v <= bound && !found; ++v) {
                y[t] = v;
                search(t + 1);
            }
            y[t] = 0;
        };
        search(0);
        if (!found) return false;
    }
    return true;
}

}  // namespace qbethe::oracles
