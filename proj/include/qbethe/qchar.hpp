#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "qbethe/bigint.hpp"
#include "qbethe/monomial.hpp"

namespace qbethe {

inline constexpr int kDepthInf = std::numeric_limits<int>::max();

// Truncated q-character: exact integer combination of monomials with a
// distinguished highest monomial. depth == kDepthInf means the character is
// exactly finite. Terms are stored as absolute monomials (head included).
//
// Every term m satisfies weight_drop(m/head) in Q^+ with height <= depth:
// the quotient collapses to q^{-beta} for beta a nonnegative integral
// combination of simple roots, and the height of beta is the truncation
// grading. A spectral A^{-1}_{j,c} factor has height 1.
class QChar {
public:
    QChar() = default;
    QChar(LMonomial head, int depth) : head_(std::move(head)), depth_(depth) {}

    const LMonomial& head() const { return head_; }
    int depth() const { return depth_; }
    const std::map<LMonomial, BigInt>& terms() const { return terms_; }

    void add_term(const LMonomial& m, const BigInt& coeff);
    void set_depth(int depth) { depth_ = depth; }

    bool operator==(const QChar& o) const {
        return head_ == o.head_ && depth_ == o.depth_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    LMonomial head_;
    int depth_ = kDepthInf;
    std::map<LMonomial, BigInt> terms_;
};

// Height of beta in Q^+ where varpi(rel) = q^{-beta}; rel must be a product
// of A^{-1} factors and weight-only q^{-alpha} factors. Returns nullopt when
// rel does not collapse to such a weight (corrupted character).
std::optional<int> weight_drop_height(const LMonomial& rel, const RootData& rd);

// Simple-root coordinates of beta, same contract as weight_drop_height.
std::optional<std::vector<int>> weight_drop_coords(const LMonomial& rel, const RootData& rd);

// Product of truncated characters. Both inputs must be truncated at least to
// `depth` (inputs shallower than the request throw std::invalid_argument).
QChar multiply(const QChar& x, const QChar& y, int depth, const RootData& rd);

// Truncate a character to a smaller depth.
QChar truncate(const QChar& x, int depth, const RootData& rd);

// The ordinary character relative to the highest weight: the head is kept as
// an opaque token and each term maps to q^{-beta}. Coefficients accumulate
// per beta (simple-root coordinates).
struct CollapsedChar {
    LMonomial head;                          // opaque highest-weight token
    int depth = kDepthInf;
    std::map<std::vector<int>, BigInt> terms;  // beta coords -> multiplicity
};
CollapsedChar weight_collapse(const QChar& x, const RootData& rd);

// Sum of all coefficients; requires depth == kDepthInf.
BigInt dimension(const QChar& x);

}  // namespace qbethe
