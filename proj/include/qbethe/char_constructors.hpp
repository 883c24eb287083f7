#pragma once

#include <string>
#include <vector>

#include "qbethe/qchar.hpp"

namespace qbethe {

// Partition with weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int boxes() const;
    Partition dual() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// Number of semistandard tableaux of shape lambda with entries in 1..max_entry,
// counted by direct backtracking enumeration.
long long count_ssyt(const Partition& lambda, int max_entry);

// Evaluation-module character for type A_n: one term per semistandard tableau
// of shape lambda with entries <= n+1. Exactly finite (depth inf).
QChar eval_module_char_slN(const Partition& lambda, const SpectralPoint& a, int n,
                           const RootData& rd);

// Parabolic Verma character for type A_n: one term per plane partition over
// the strip {1..i} x Z_{>=1} of height <= n+1-i, truncated at total
// A^{-1}-degree <= depth. The head is X_{i, a q^K} X_{i,a}^{-1} with K an
// opaque tag (realized as an auxiliary formal base); no term touches K.
QChar parabolic_verma_char_slN(int i, const SpectralPoint& a, int n, int depth,
                               const RootData& rd, const std::string& k_tag = "K");

// Negative prefundamental character, type A only: same term set with head
// X_{i,a}^{-1} (the q^K prefactor cancelled).
QChar mminus_char(int i, const SpectralPoint& a, int n, int depth, const RootData& rd);

// Weight-only series prod_{alpha>0} (1 - q^{-alpha})^{-<omega_i^vee,alpha>}
// truncated at height <= depth. Head is the unit monomial.
QChar barchi(int i, const RootData& rd, int depth);

// The product formula behind barchi is proved for types A,B,C,D and G2;
// elsewhere it is conjectural and downstream reports flag it.
bool barchi_is_proved(const RootData& rd);

// chi_q(M^+_{i,a}) = X_{i,a} * barchi_i, truncated at depth.
QChar mplus_char(int i, const SpectralPoint& a, const RootData& rd, int depth);

// Head of the 2-finite module: X_{i,a}^{-1} prod_{j: C_{j,i} != 0} X_{j, a q_{j,i}^{-1}}.
LMonomial nplus_head(int i, const SpectralPoint& a, const RootData& rd);

// chi_q(N^+_{i,a}) = head * (1 + A^{-1}_{i,a}) * prod_{j: C_{j,i} < 0} barchi_j.
QChar nplus_char(int i, const SpectralPoint& a, const RootData& rd, int depth);

// Y_{i,a} (1 + A^{-1}_{i,a q_i} + A^{-1}_{i,a q_i} sum_{j: C_{j,i}<0}
// A^{-1}_{j, a q_i q_{j,i}^{-1}}), a depth-2 truncation of the fundamental
// character (exact only for A1).
QChar fundamental_top_terms(int i, const SpectralPoint& a, const RootData& rd);

// Finite sl2 string L(X_a X_b^{-1}) with a = b q^{-2s+2}:
// X_a X_b^{-1} (1 + sum_{r=1}^{s-1} prod_{t=0}^{r-1} A^{-1}_{b q^{-2t}}).
QChar sl2_string_char(const SpectralPoint& a, const SpectralPoint& b, const RootData& rd);

// Infinite-size string: the same sum with s = infinity, truncated at depth.
QChar sl2_string_char_infinite(const SpectralPoint& a, const SpectralPoint& b, int depth,
                               const RootData& rd);

// Number of distinct joint Cartan-current eigenvalue classes visible in the
// character: terms grouped by the X-part of term/head, weight-only factors
// ignored.
int spectral_class_count(const QChar& x);

struct LiftChar {
    QChar chi;
    int finiteness = 0;
};

// Lift of the (s+1)-dimensional sl2 evaluation string to node i of A_n:
// head X_{i-1,aq^2} X_{i+1,aq^2} prod_{p=0}^{s-1} Y_{i,a q^{-2p}} (boundary
// nodes keep only existing neighbors), essential part
// 1 + sum_{j=1}^{s} prod_{r=1}^{j} A^{-1}_{i, a q^{-2r+3}}, times the barchi
// of each neighbor. (s+1)-finite.
LiftChar slN_string_lift(int i, const SpectralPoint& a, int s, int n, int depth,
                         const RootData& rd);

// The two explicit sl3 modules over the head Y_{1,aq^{-2}} Y_{1,a} X_{2,*}:
// which == 1 gives the 3-finite lift (X at a q^2), which == 2 the 5-finite
// module (X at a) whose essential part keeps five of the six tableau classes
// of the 6-dimensional evaluation module.
LiftChar sl3_example(const SpectralPoint& a, int which, int depth, const RootData& rd);

}  // namespace qbethe
