#pragma once

#include "qbethe/chain.hpp"

namespace qbethe {

// Twisted A1 transfer matrix on (C^2)^{\otimes L}, built from the polynomial
// six-vertex R matrix
//   R(u,v) = [[qu - v/q, 0, 0, 0],
//             [0, u - v, (q - 1/q)u, 0],
//             [0, (q - 1/q)v, u - v, 0],
//             [0, 0, 0, qu - v/q]]
// with site parameters v_k = q b_k, as
//   T(u) = q^{-Nhat} A(u) + p q^{+Nhat} D(u),
// where A, D are the diagonal auxiliary blocks of the monodromy
// R_{0L} ... R_{01} and Nhat counts flipped spins. The magnon-graded factors
// realize the Cartan part of the R matrix, and the normalization pins the
// eigenvalue on the all-up vector to a(u) + p d(u) exactly. Basis index bit
// k-1 is the state of site k (set = flipped).
Matrix build_transfer_matrix_sl2(const ChainSpec& chain, Complex u);

// A(u), D(u) blocks, exposed for tests.
std::pair<Matrix, Matrix> monodromy_blocks_sl2(const ChainSpec& chain, Complex u);

struct EigenMode {
    int sector = 0;                 // magnon number N
    std::vector<int> basis;         // global basis indices of the sector
    std::vector<Complex> vector_;   // eigenvector within the sector basis
    PolyU lambda;                   // interpolated eigenvalue polynomial
    double heldout_residual = 0.0;  // |Lambda(u_held) - lambda_held| / scale
};

// Diagonalize the commuting family at one generic base point per sector,
// reuse the eigenvectors across L+2 sample points, interpolate each
// eigenvalue to a polynomial of degree <= L and validate it at a held-out
// point. Throws when eigenvalues collide at every retry or validation fails.
std::vector<EigenMode> diagonalize_and_interpolate(const ChainSpec& chain);

}  // namespace qbethe
