#pragma once

#include <string>
#include <vector>

#include "qbethe/chain.hpp"

namespace qbethe {

// Closed-form h_{i,r} eigenvalues on highest vectors, derived by expanding
// the logarithm of the Cartan-current eigenvalue
//   phi_i^+(z) = k_i exp((q_i - q_i^{-1}) sum_{r>0} h_{i,r} z^r).
//
// On L(Y_{i,b}):  <h_{i,r}>  = b^r [r]_{q_i} / r          (r > 0)
//                 <h_{i,-r}> = [r]_{q_i} / (r b^r)        (r > 0)
// On M^+_{i,a}:   <h_{i,r}>  = -a^r / (r (q_i - q_i^{-1})) (r > 0)
// All other nodes give 0. r must be nonzero (and positive for M^+).
Complex hr_fundamental(int i, Complex b, int r, int node, Complex q, const RootData& rd);
Complex hr_mplus(int i, Complex a, int r, int node, Complex q, const RootData& rd);

// Truncated power series with the constant term first.
using Series = std::vector<Complex>;

Series series_mul(const Series& a, const Series& b);
Series series_inverse(const Series& a);          // a[0] != 0
Series series_exp(const Series& a);              // a[0] == 0
Series series_scale_arg(const Series& a, Complex s);
Series series_from_poly(const PolyU& p, int order);

// Exponential part of f_{V,W}(u) for V = M^+_{i,1}, truncated at u^depth.
// The weight prefactor q^{-(wt v0, wt w0)} is not evaluated; it is reported
// as a symbolic tag alongside the series.
struct FSeries {
    Series series;       // constant term 1
    std::string weight_prefactor_tag;
};
FSeries f_series_mplus(int i, const ChainSpec& chain, const RootData& rd, int depth);

// Max |coefficient difference| through u^depth between d_i(u)/a_i(u) and
//   q_i^{m_i} prod_{j: C_{j,i} != 0} f_{M^+_{j,1},W}(q_{j,i} u) / f_{M^+_{j,1},W}(q_{j,i}^{-1} u),
// where m_i counts the node-i factors of W. The constant q_i^{m_i} is the
// exactly-known ratio of the weight prefactors (integral spectral shifts).
double verify_f_identity(const ChainSpec& chain, const RootData& rd, int i, int depth);

}  // namespace qbethe
