#pragma once

#include <optional>
#include <vector>

#include "qbethe/monomial.hpp"

namespace qbethe {

// Nonnegative Y/X factorization of a dominant monomial. y-exponents are
// carried through unchanged.
struct DominanceWitness {
    std::vector<std::tuple<int, SpectralPoint, int>> y_factors;  // (node, point, exp >= 0)
    std::vector<std::tuple<int, SpectralPoint, int>> x_factors;  // (node, point, exp >= 0)
    std::map<int, Rational> yexp;                                // weight part, unconstrained

    // Rebuild the monomial this witness encodes.
    LMonomial reassemble(const RootData& rd) const;
};

struct DominanceResult {
    bool dominant = false;
    std::optional<DominanceWitness> witness;
};

// A monomial is dominant iff for every node i, on every q_i^2-string of the
// i-indexed X-exponents (same base, q-exponents congruent mod 2 d_i, ordered
// by increasing q-exponent) all prefix sums are nonnegative. The witness is
// the minimal-carry decomposition: X-exponents are the running minimum of
// the remaining prefix sums, Y-exponents take up the slack.
DominanceResult is_dominant(const LMonomial& m, const RootData& rd);

// sl2 factorization of a dominant A1 monomial into m1 * m0 * mp:
// m1 pure y, m0 a product of finite strings X_head X_tail^{-1}, mp a product
// of X factors each generic relative to every chosen string.
struct Sl2String {
    SpectralPoint head;
    SpectralPoint tail;
    int size() const { return (tail.qexp - head.qexp) / 2 + 1; }
};

struct Sl2Factorization {
    LMonomial m1;
    LMonomial m0;
    LMonomial mp;
    std::vector<Sl2String> strings;             // the factors of m0
    std::vector<SpectralPoint> generic_points;  // the factors of mp, with multiplicity
};

// Throws std::invalid_argument if m is not dominant or rd is not A1.
Sl2Factorization sl2_factor(const LMonomial& m, const RootData& rd);

// c is generic relative to a finite string (head, tail) of size s iff c is
// not on the lattice tail * q^{-2t} for 0 <= t <= s-2.
bool generic_relative_to(const SpectralPoint& c, const Sl2String& s);

}  // namespace qbethe
