#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbethe/char_constructors.hpp"

namespace qbethe {

// Result of checking [N^+_{i,a}][M^+_{i,a}] =
//   prod_{j: C_{j,i} != 0} [M^+_{j, a q_{j,i}^{-1}}]
// + prod_{j: C_{j,i} != 0} [M^+_{j, a q_{j,i}}]
// through exact truncated q-characters at a common height cutoff.
struct TQReport {
    std::string type;
    int node = 0;
    int depth = 0;
    bool exact_equal = false;
    bool conjectural_barchi = false;
    std::map<LMonomial, BigInt> lhs;
    std::map<LMonomial, BigInt> rhs;
    std::map<LMonomial, BigInt> diff;  // lhs - rhs, empty iff exact_equal
};

TQReport verify_tq_identity(const RootData& rd, int i, const SpectralPoint& a, int depth);

// Sufficient irreducibility criterion for V (x) M: true when no X-index of the
// polynomial head m collides with any A^{-1} index appearing in chi_q(V).
// False means "inconclusive", never "reducible".
bool tensor_irreducible_sufficient(const std::vector<std::pair<int, SpectralPoint>>& v_a_indices,
                                   const LMonomial& m_head);

// Convenience overload: recovers the A^{-1} index multiset of every term of
// v_char by peeling factors; throws if some term is not a product of A^{-1}'s.
bool tensor_irreducible_sufficient(const QChar& v_char, const LMonomial& m_head,
                                   const RootData& rd);

// Peel rel into a multiset of A^{-1}_{j,c} indices; nullopt if impossible.
std::optional<std::vector<std::pair<int, SpectralPoint>>> factor_into_a_inverses(
    const LMonomial& rel, const RootData& rd);

}  // namespace qbethe
