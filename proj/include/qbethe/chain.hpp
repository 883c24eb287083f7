#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbethe/complexmat.hpp"
#include "qbethe/poly_u.hpp"
#include "qbethe/root_data.hpp"

namespace qbethe {

// Quantum space W = tensor of fundamental factors L(Y_{node, b}) with a
// diagonal twist, plus the numeric deformation parameter q.
struct ChainFactor {
    int node = 1;
    Complex b{1.0, 0.0};
};

struct ChainSpec {
    Complex q{0.8, 0.0};
    std::vector<Complex> twist;        // \tilde p_i per node
    std::vector<ChainFactor> factors;  // |factors| >= 1
    uint64_t seed = 1;

    int length() const { return static_cast<int>(factors.size()); }
    bool is_a1() const;

    // p_i = prod_j \tilde p_j^{C_{j,i}}.
    Complex twist_p(const RootData& rd, int i) const;

    // Throws std::invalid_argument when the invariants fail: at least one
    // factor, q != 0 and q^m != 1 for m <= 24, twists nonzero.
    void validate() const;

    // Only the q invariants; an empty quantum space is allowed here.
    void validate_q() const;

    // a_i(u) = prod_b (q_i u - b)^{m_{i,b}}, d_i(u) = prod_b (u - q_i b)^{m_{i,b}}.
    std::pair<PolyU, PolyU> ad_polynomials(const RootData& rd, int i) const;

    std::string to_json_string() const;
    static ChainSpec from_json_string(const std::string& text);

    // L=4 homogeneous A1 chain at q = 4/5 with twist giving p = 0.6 + 0.5i.
    static ChainSpec default_a1(int length = 4);
};

}  // namespace qbethe
