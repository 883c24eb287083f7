#pragma once

#include <map>

#include "qbethe/chain.hpp"

namespace qbethe {

// Baxter polynomial recovery: find Q with Q(0) = 1 and deg Q = n_magnons
// minimizing the coefficient residual of
//   Lambda(u) Q(u) - a(u) Q(q_i^{-2} u) - p d(u) Q(q_i^{2} u)
// over u^0 .. u^{deg Lambda + N}. residual is relative to the scale of the
// matched coefficients; success means residual < 1e-8.
struct QRecovery {
    PolyU q_poly;
    double residual = 0.0;
    bool ok = false;
};
QRecovery recover_q(const PolyU& lambda, const PolyU& a, const PolyU& d, Complex p,
                    int n_magnons, Complex q_i);

// Eigenvalue from recovered Q polynomials by exact polynomial division:
//   Lambda(u) = [a_i prod_j Q_j(q_{j,i}^{-1} u) + p_i d_i prod_j Q_j(q_{j,i} u)] / Q_i(u).
// Throws when the division leaves a remainder above 1e-8 relative (a BAE
// violation). q_polys maps node -> Q_i.
Complex eigenvalue_from_q(const std::map<int, PolyU>& q_polys, const ChainSpec& chain,
                          const RootData& rd, int i, Complex u);

// One sector's Bethe roots.
struct BetheState {
    std::map<int, std::vector<Complex>> roots;  // node -> zeta_{i,nu}
    std::map<int, std::vector<double>> residuals;
    std::map<int, PolyU> q_polys;  // Q_i(u) = prod (1 - u/zeta)
};

// Residuals |LHS + 1| of the printed Bethe equations, per node and root.
// include_self_factor = true keeps the mu = nu factor (the constant -q_i^2);
// false uses the conventional product over mu != nu with the right side
// q_i^{-2} instead of -1. Root sets agree. A root placed on a pole of the
// equation reports +infinity.
std::map<int, std::vector<double>> check_bae(const BetheState& state, const ChainSpec& chain,
                                             const RootData& rd, bool include_self_factor = true);

struct BaeSolveConfig {
    int starts = 200;
    int max_iterations = 80;
    double tolerance = 1e-10;
    double dedup_scale = 1e-6;
    bool include_self_factor = true;
};

struct BaeSolveStats {
    int non_converged = 0;  // starts dropped by the Newton loop
    int singular = 0;       // starts abandoned on a pole or singular Jacobian
    int invalid = 0;        // converged to coinciding/forbidden roots
    int duplicates = 0;     // converged to an already known state
};

// Multi-start damped Newton on the logarithmic Bethe equations for the given
// magnon sector (node -> N_i). Returns deduplicated converged states, roots
// sorted within each node.
std::vector<BetheState> solve_bae(const ChainSpec& chain, const RootData& rd,
                                  const std::map<int, int>& sector,
                                  const BaeSolveConfig& config = {},
                                  BaeSolveStats* stats = nullptr);

}  // namespace qbethe
