#include "qbethe/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qbethe {

RootData::RootData(const std::string& type_label) : label_(type_label) {
    if (type_label.size() < 2)
        throw std::invalid_argument("RootData: bad type label '" + type_label + "'");
    family_ = type_label[0];
    try {
        rank_ = std::stoi(type_label.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("RootData: bad rank in '" + type_label + "'");
    }
    if (rank_ < 1 || rank_ > 8)
        throw std::invalid_argument("RootData: rank out of supported range 1..8");
    switch (family_) {
        case 'A':
            break;
        case 'B':
        case 'C':
            if (rank_ < 2) throw std::invalid_argument("RootData: " + type_label + " needs rank >= 2");
            break;
        case 'D':
            if (rank_ < 3) throw std::invalid_argument("RootData: D needs rank >= 3");
            break;
        case 'E':
            if (rank_ < 6 || rank_ > 8) throw std::invalid_argument("RootData: E rank must be 6, 7 or 8");
            break;
        case 'F':
            if (rank_ != 4) throw std::invalid_argument("RootData: F rank must be 4");
            break;
        case 'G':
            if (rank_ != 2) throw std::invalid_argument("RootData: G rank must be 2");
            break;
        default:
            throw std::invalid_argument("RootData: unknown family '" + std::string(1, family_) + "'");
    }
    build_cartan();
    enumerate_positive_roots();

    if (static_cast<int>(positive_roots_.size()) != expected_root_count(family_, rank_))
        throw std::logic_error("RootData: positive-root closure produced wrong count for " + label_);
}

int RootData::idx(int node) const {
    if (node < 1 || node > rank_)
        throw std::out_of_range("RootData: node " + std::to_string(node) + " outside 1.." + std::to_string(rank_));
    return node - 1;
}

void RootData::build_cartan() {
    int n = rank_;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j, int cij, int cji) {
        cartan_[i - 1][j - 1] = cij;
        cartan_[j - 1][i - 1] = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    d_.assign(n, 1);
    switch (family_) {
        case 'A':
            chain(1, n);
            break;
        case 'B':
            // last node short: d = (2,...,2,1)
            chain(1, n - 1);
            bond(n - 1, n, -1, -2);
            for (int i = 0; i < n - 1; ++i) d_[i] = 2;
            break;
        case 'C':
            // last node long: d = (1,...,1,2)
            chain(1, n - 1);
            bond(n - 1, n, -2, -1);
            d_[n - 1] = 2;
            break;
        case 'D':
            chain(1, n - 2);
            bond(n - 2, n - 1, -1, -1);
            bond(n - 2, n, -1, -1);
            break;
        case 'E':
            // Bourbaki: node 2 attaches to node 4; nodes 1-3-4-5-... form the chain.
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
            break;
        case 'F':
            // nodes 1,2 long, 3,4 short
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);
            bond(3, 4, -1, -1);
            d_[0] = d_[1] = 2;
            break;
        case 'G':
            // node 1 short, node 2 long; d = (1,3)
            bond(1, 2, -3, -1);
            d_[1] = 3;
            break;
    }
    // sanity: D*C symmetric
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
                throw std::logic_error("RootData: D*C not symmetric for " + label_);
}

void RootData::enumerate_positive_roots() {
    int n = rank_;
    std::set<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
    }
    // Closure by root strings: alpha + alpha_j is a root iff the string
    // length q = p - <alpha, alpha_j^vee> is >= 1, where p is the largest k
    // with alpha - k*alpha_j already a root.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(roots.begin(), roots.end());
        for (const auto& alpha : snapshot) {
            for (int j = 0; j < n; ++j) {
                int pairing = 0;  // <alpha, alpha_j^vee> = sum_i c_i C_{j,i}
                for (int i = 0; i < n; ++i) pairing += alpha[i] * cartan_[j][i];
                int p = 0;
                std::vector<int> down = alpha;
                while (true) {
                    down[j] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
                    bool is_simple_neg = false;  // alpha - k alpha_j could reach 0, not a root
                    if (!nonneg || std::all_of(down.begin(), down.end(), [](int c) { return c == 0; }))
                        is_simple_neg = true;
                    if (is_simple_neg || !roots.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int> up = alpha;
                    up[j] += 1;
                    if (roots.insert(up).second) grew = true;
                }
            }
        }
    }
    positive_roots_.assign(roots.begin(), roots.end());
    // order by height then lexicographically, simple roots first
    std::sort(positive_roots_.begin(), positive_roots_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int ha = std::accumulate(a.begin(), a.end(), 0);
                  int hb = std::accumulate(b.begin(), b.end(), 0);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });
}

int RootData::coweight_pairing(int i, const std::vector<int>& alpha) const {
    int ii = idx(i);
    if (std::find(positive_roots_.begin(), positive_roots_.end(), alpha) == positive_roots_.end())
        throw std::invalid_argument("coweight_pairing: not a positive root of " + label_);
    return alpha[ii];
}

int RootData::expected_root_count(char family, int rank) {
    switch (family) {
        case 'A': return rank * (rank + 1) / 2;
        case 'B':
        case 'C': return rank * rank;
        case 'D': return rank * (rank - 1);
        case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: return -1;
    }
}

}  // namespace qbethe
