#include "qbethe/transfer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qbethe {

namespace {

int popcount(int x) {
    int n = 0;
    while (x) {
        n += x & 1;
        x >>= 1;
    }
    return n;
}

}  // namespace

std::pair<Matrix, Matrix> monodromy_blocks_sl2(const ChainSpec& chain, Complex u) {
    if (!chain.is_a1())
        throw std::invalid_argument("monodromy_blocks_sl2: chain must be type A1");
    chain.validate();
    int length = chain.length();
    if (length > 12)
        throw std::invalid_argument("monodromy_blocks_sl2: dense build capped at L = 12");

    Complex q = chain.q;
    // aux-indexed 2x2 blocks of operators on the growing quantum space;
    // site k is tensored in as the high bit
    std::array<std::array<Matrix, 2>, 2> blk;
    blk[0][0] = Matrix::identity(1);
    blk[0][1] = Matrix(1, 1);
    blk[1][0] = Matrix(1, 1);
    blk[1][1] = Matrix::identity(1);

    for (int k = 0; k < length; ++k) {
        Complex v = q * chain.factors[k].b;
        Complex w_a = q * u - v / q;           // no-flip, equal states
        Complex w_b = u - v;                   // no-flip, opposite states
        Complex w_c1 = (q - 1.0 / q) * u;      // aux lowers, site raises
        Complex w_c2 = (q - 1.0 / q) * v;      // aux raises, site lowers
        // site operator for a fixed aux transition a_in -> a_out; site indices
        // are (s_out, s_in), 0 = up. The flips exchange aux and site states:
        // c1 takes (aux 1, site 0) -> (aux 0, site 1), c2 the reverse.
        int dim = blk[0][0].rows();
        std::array<std::array<Matrix, 2>, 2> next;
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap) next[a][ap] = Matrix(2 * dim, 2 * dim);
        auto site_entry = [&](int a_out, int a_in, int s_out, int s_in) -> Complex {
            if (a_out == 0 && a_in == 0) return s_out == s_in ? (s_out == 0 ? w_a : w_b) : Complex(0);
            if (a_out == 1 && a_in == 1) return s_out == s_in ? (s_out == 0 ? w_b : w_a) : Complex(0);
            if (a_out == 0 && a_in == 1) return (s_out == 1 && s_in == 0) ? w_c1 : Complex(0);
            return (s_out == 0 && s_in == 1) ? w_c2 : Complex(0);
        };
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int c = 0; c < 2; ++c)
                    for (int s = 0; s < 2; ++s)
                        for (int sp = 0; sp < 2; ++sp) {
                            Complex r = site_entry(a, c, s, sp);
                            if (r == Complex(0)) continue;
                            const Matrix& m = blk[c][ap];
                            for (int i = 0; i < dim; ++i)
                                for (int j = 0; j < dim; ++j) {
                                    Complex val = m(i, j);
                                    if (val == Complex(0)) continue;
                                    next[a][ap](s * dim + i, sp * dim + j) += r * val;
                                }
                        }
        blk = std::move(next);
    }
    return {blk[0][0], blk[1][1]};
}

Matrix build_transfer_matrix_sl2(const ChainSpec& chain, Complex u) {
    auto [a_blk, d_blk] = monodromy_blocks_sl2(chain, u);
    RootData rd("A1");
    Complex p = chain.twist_p(rd, 1);
    Complex q = chain.q;
    int dim = a_blk.rows();
    Matrix t(dim, dim);
    for (int i = 0; i < dim; ++i) {
        Complex qn = std::pow(q, popcount(i));
        for (int j = 0; j < dim; ++j)
            t(i, j) = a_blk(i, j) / qn + p * qn * d_blk(i, j);
    }
    return t;
}

std::vector<EigenMode> diagonalize_and_interpolate(const ChainSpec& chain) {
    if (!chain.is_a1())
        throw std::invalid_argument("diagonalize_and_interpolate: chain must be type A1");
    int length = chain.length();
    if (length > 12)
        throw std::invalid_argument("diagonalize_and_interpolate: L capped at 12");
    int dim = 1 << length;

    std::mt19937_64 rng(chain.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // sector bases
    std::vector<std::vector<int>> sectors(length + 1);
    for (int i = 0; i < dim; ++i) sectors[popcount(i)].push_back(i);

    const int n_points = length + 2;  // fit on L+1, validate on the last
    for (int attempt = 0; attempt < 5; ++attempt) {
        // generic sample points on a jittered circle
        std::vector<Complex> us(n_points + 1);
        double rho = 0.9 + 0.4 * unit(rng);
        double phase0 = 2 * M_PI * unit(rng);
        for (int s = 0; s <= n_points; ++s) {
            double ang = phase0 + 2 * M_PI * s / (n_points + 1);
            double r = rho * (1.0 + 0.05 * (unit(rng) - 0.5));
            us[s] = Complex(r * std::cos(ang), r * std::sin(ang)) + Complex(0.11, 0.07);
        }
        std::vector<Matrix> t_at(us.size());
        for (size_t s = 0; s < us.size(); ++s) t_at[s] = build_transfer_matrix_sl2(chain, us[s]);

        std::vector<EigenMode> modes;
        bool ok = true;
        for (int sector = 0; sector <= length && ok; ++sector) {
            const auto& basis = sectors[sector];
            int sdim = static_cast<int>(basis.size());
            Matrix sub(sdim, sdim);
            for (int r = 0; r < sdim; ++r)
                for (int c = 0; c < sdim; ++c) sub(r, c) = t_at[0](basis[r], basis[c]);
            Eigen eig = eigendecompose(sub);

            // eigenvalue separation at the base point
            double scale = std::max(sub.max_abs(), 1e-30);
            for (int i = 0; i < sdim && ok; ++i)
                for (int j = i + 1; j < sdim; ++j)
                    if (std::abs(eig.values[i] - eig.values[j]) < 1e-8 * scale) {
                        ok = false;
                        break;
                    }
            if (!ok) break;

            Matrix vinv = inverse(eig.vectors);
            // eigenvalues at every sample point through the common eigenvectors
            std::vector<std::vector<Complex>> lam(us.size(), std::vector<Complex>(sdim));
            for (size_t s = 0; s < us.size(); ++s) {
                Matrix subs(sdim, sdim);
                for (int r = 0; r < sdim; ++r)
                    for (int c = 0; c < sdim; ++c) subs(r, c) = t_at[s](basis[r], basis[c]);
                Matrix d = vinv * (subs * eig.vectors);
                double offdiag = 0, ondiag = 0;
                for (int r = 0; r < sdim; ++r)
                    for (int c = 0; c < sdim; ++c) {
                        if (r == c)
                            ondiag = std::max(ondiag, std::abs(d(r, c)));
                        else
                            offdiag = std::max(offdiag, std::abs(d(r, c)));
                    }
                if (offdiag > 1e-8 * std::max(ondiag, 1e-30)) {
                    ok = false;
                    break;
                }
                for (int k = 0; k < sdim; ++k) lam[s][k] = d(k, k);
            }
            if (!ok) break;

            for (int k = 0; k < sdim; ++k) {
                // Vandermonde fit of degree <= L on the first L+1 points
                int npts = length + 1;
                Matrix vand(npts, length + 1);
                std::vector<Complex> rhs(npts);
                for (int r = 0; r < npts; ++r) {
                    Complex pw = 1;
                    for (int c = 0; c <= length; ++c) {
                        vand(r, c) = pw;
                        pw *= us[r];
                    }
                    rhs[r] = lam[r][k];
                }
                PolyU poly(lu_solve(vand, rhs));
                double lam_scale = 0;
                for (size_t s = 0; s < us.size(); ++s)
                    lam_scale = std::max(lam_scale, std::abs(lam[s][k]));
                lam_scale = std::max(lam_scale, 1e-30);
                double resid = 0;
                for (size_t s = npts; s < us.size(); ++s)
                    resid = std::max(resid, std::abs(poly.eval(us[s]) - lam[s][k]) / lam_scale);
                if (resid > 1e-8) {
                    ok = false;
                    break;
                }
                EigenMode mode;
                mode.sector = sector;
                mode.basis = basis;
                mode.vector_.resize(sdim);
                for (int r = 0; r < sdim; ++r) mode.vector_[r] = eig.vectors(r, k);
                mode.lambda = poly.trimmed(1e-12);
                mode.heldout_residual = resid;
                modes.push_back(std::move(mode));
            }
        }
        if (ok) return modes;
    }
    throw std::runtime_error(
        "diagonalize_and_interpolate: no generic base point found in 5 attempts");
}

}  // namespace qbethe
