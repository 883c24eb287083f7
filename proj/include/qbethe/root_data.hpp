#pragma once

#include <string>
#include <vector>

namespace qbethe {

// Exact Cartan data for one finite simple Lie type. Immutable after
// construction; shared freely.
//
// Conventions: nodes are 1..n (Bourbaki labels). The symmetrizers d_i are
// relatively prime positive integers with D*C symmetric; the invariant form
// is fixed by (alpha_i, alpha_i) = 2 d_i. In type B the last node is short,
// in type C the last node is long, in G2 the first node is short (d = (1,3)).
class RootData {
public:
    // type_label is e.g. "A1", "A3", "B2", "D4", "E8", "F4", "G2".
    explicit RootData(const std::string& type_label);

    const std::string& type_label() const { return label_; }
    char family() const { return family_; }
    int rank() const { return rank_; }

    // Cartan matrix entry C_{i,j}, 1-based nodes.
    int cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
    int symmetrizer(int i) const { return d_[idx(i)]; }

    // (alpha_i, alpha_j) = d_i C_{i,j}; q_{i,j} = q^{(alpha_i,alpha_j)}.
    int qij_exponent(int i, int j) const { return d_[idx(i)] * cartan_[idx(i)][idx(j)]; }

    // Positive roots in simple-root coordinates, simple roots first.
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

    // <omega_i^vee, alpha> = i-th coordinate of alpha in the simple-root basis.
    // alpha must be a positive root of this system.
    int coweight_pairing(int i, const std::vector<int>& alpha) const;

    // Number of positive roots for the given family/rank.
    static int expected_root_count(char family, int rank);

private:
    int idx(int node) const;

    std::string label_;
    char family_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<std::vector<int>> positive_roots_;

    void build_cartan();
    void enumerate_positive_roots();
};

}  // namespace qbethe
