#include "qbethe/baxter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qbethe {

namespace {

constexpr double kPi = 3.14159265358979323846;

PolyU one_minus_u_over(const std::vector<Complex>& zeros) {
    PolyU p = PolyU::one();
    for (const auto& z : zeros) p = p * PolyU({Complex(1.0), -1.0 / z});
    return p;
}

}  // namespace

QRecovery recover_q(const PolyU& lambda, const PolyU& a, const PolyU& d, Complex p,
                    int n_magnons, Complex q_i) {
    if (n_magnons < 0) throw std::invalid_argument("recover_q: negative magnon number");
    if (n_magnons > a.degree())
        throw std::invalid_argument("recover_q: sector exceeds the chain length");

    int rows = std::max(lambda.degree(), a.degree()) + n_magnons + 1;
    auto coeff = [](const PolyU& f, int k) -> Complex {
        if (k < 0 || k > f.degree()) return Complex(0);
        return f.coeffs()[k];
    };
    double scale = std::max({lambda.max_abs_coeff(), a.max_abs_coeff(),
                             std::abs(p) * d.max_abs_coeff(), 1e-30});

    Complex qm2 = 1.0 / (q_i * q_i), qp2 = q_i * q_i;
    std::vector<Complex> rhs(rows);
    for (int m = 0; m < rows; ++m)
        rhs[m] = -(coeff(lambda, m) - coeff(a, m) - p * coeff(d, m));

    QRecovery out;
    if (n_magnons == 0) {
        double resid = 0;
        for (const auto& r : rhs) resid = std::max(resid, std::abs(r));
        out.q_poly = PolyU::one();
        out.residual = resid / scale;
        out.ok = out.residual < 1e-8;
        return out;
    }

    Matrix sys(rows, n_magnons);
    Complex qm2k = 1.0, qp2k = 1.0;
    for (int k = 1; k <= n_magnons; ++k) {
        qm2k *= qm2;
        qp2k *= qp2;
        for (int m = 0; m < rows; ++m)
            sys(m, k - 1) =
                coeff(lambda, m - k) - coeff(a, m - k) * qm2k - p * coeff(d, m - k) * qp2k;
    }
    std::vector<Complex> x = qr_least_squares(sys, rhs);
    double resid = 0;
    for (int m = 0; m < rows; ++m) {
        Complex s = -rhs[m];
        for (int k = 0; k < n_magnons; ++k) s += sys(m, k) * x[k];
        resid = std::max(resid, std::abs(s));
    }
    std::vector<Complex> qc(n_magnons + 1);
    qc[0] = 1.0;
    for (int k = 1; k <= n_magnons; ++k) qc[k] = x[k - 1];
    out.q_poly = PolyU(std::move(qc));
    out.residual = resid / scale;
    out.ok = out.residual < 1e-8;
    return out;
}

Complex eigenvalue_from_q(const std::map<int, PolyU>& q_polys, const ChainSpec& chain,
                          const RootData& rd, int i, Complex u) {
    auto [a, d] = chain.ad_polynomials(rd, i);
    Complex p = chain.twist_p(rd, i);
    auto q_of = [&](int j) -> const PolyU& {
        static const PolyU unit = PolyU::one();
        auto it = q_polys.find(j);
        return it == q_polys.end() ? unit : it->second;
    };
    PolyU left = a, right = d.scaled(p);
    for (int j = 1; j <= rd.rank(); ++j) {
        if (rd.cartan(j, i) == 0) continue;
        Complex qji = std::pow(chain.q, rd.qij_exponent(j, i));
        left = left * q_of(j).scale_arg(1.0 / qji);
        right = right * q_of(j).scale_arg(qji);
    }
    PolyU numerator = left + right;
    PolyU quot, rem;
    numerator.divmod(q_of(i), quot, rem);
    double scale = std::max(numerator.max_abs_coeff(), 1e-30);
    if (rem.max_abs_coeff() > 1e-8 * scale)
        throw std::runtime_error(
            "eigenvalue_from_q: division leaves a remainder (Bethe equations violated)");
    return quot.eval(u);
}

namespace {

struct BaeSystem {
    const ChainSpec& chain;
    const RootData& rd;
    std::vector<std::pair<int, int>> index;  // flattened (node, nu)
    std::map<int, std::vector<int>> offsets;  // node -> flat indices
    bool include_self_factor;

    Complex qi(int node) const { return std::pow(chain.q, rd.symmetrizer(node)); }
    Complex qji(int j, int i) const { return std::pow(chain.q, rd.qij_exponent(j, i)); }

    // log-form residual G and Jacobian at z; returns false on a singular
    // configuration (pole hit)
    bool evaluate(const std::vector<Complex>& z, std::vector<Complex>& g, Matrix* jac) const {
        int n = static_cast<int>(z.size());
        g.assign(n, Complex(0));
        if (jac) *jac = Matrix(n, n);
        const double tiny = 1e-13;
        for (int row = 0; row < n; ++row) {
            int i = index[row].first;
            Complex zeta = z[row];
            Complex qi_ = qi(i);
            Complex f = std::log(chain.twist_p(rd, i));
            Complex dself = 0;
            if (std::abs(zeta) < tiny) return false;
            for (const auto& fac : chain.factors) {
                if (fac.node != i) continue;
                Complex dnum = zeta - qi_ * fac.b;   // d_i factor
                Complex anum = qi_ * zeta - fac.b;   // a_i factor
                if (std::abs(dnum) < tiny || std::abs(anum) < tiny) return false;
                f += std::log(dnum) - std::log(anum);
                dself += 1.0 / dnum - qi_ / anum;
            }
            for (int col = 0; col < n; ++col) {
                int j = index[col].first;
                Complex qv = qji(j, i);
                if (col == row) {
                    if (include_self_factor) f += std::log(-(qi_ * qi_));
                    continue;
                }
                Complex num = 1.0 - qv * zeta / z[col];
                Complex den = 1.0 - zeta / (qv * z[col]);
                if (std::abs(num) < tiny || std::abs(den) < tiny) return false;
                f += std::log(num) - std::log(den);
                if (jac) {
                    Complex dnum_dzeta = -qv / z[col];
                    Complex dden_dzeta = -1.0 / (qv * z[col]);
                    (*jac)(row, row) += dnum_dzeta / num - dden_dzeta / den;
                    Complex dnum_dcol = qv * zeta / (z[col] * z[col]);
                    Complex dden_dcol = zeta / (qv * z[col] * z[col]);
                    (*jac)(row, col) += dnum_dcol / num - dden_dcol / den;
                }
            }
            if (jac) (*jac)(row, row) += dself;
            // target: product = -1 with the self factor, q_i^{-2} without
            Complex target = include_self_factor ? Complex(0.0, kPi) : -2.0 * std::log(qi_);
            double k = std::round((f - target).imag() / (2.0 * kPi));
            g[row] = f - target - Complex(0.0, 2.0 * kPi * k);
        }
        return true;
    }
};

double max_abs(const std::vector<Complex>& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

std::map<int, std::vector<double>> check_bae(const BetheState& state, const ChainSpec& chain,
                                             const RootData& rd, bool include_self_factor) {
    std::map<int, std::vector<double>> out;
    const double tiny = 1e-13;
    for (const auto& [i, roots] : state.roots) {
        Complex qi = std::pow(chain.q, rd.symmetrizer(i));
        std::vector<double>& res = out[i];
        for (size_t nu = 0; nu < roots.size(); ++nu) {
            Complex zeta = roots[nu];
            Complex lhs = chain.twist_p(rd, i);
            bool pole = false;
            for (const auto& fac : chain.factors) {
                if (fac.node != i) continue;
                Complex anum = qi * zeta - fac.b;
                if (std::abs(anum) < tiny) {
                    pole = true;
                    break;
                }
                lhs *= (zeta - qi * fac.b) / anum;
            }
            if (!pole) {
                for (const auto& [j, rootsj] : state.roots) {
                    Complex qv = std::pow(chain.q, rd.qij_exponent(j, i));
                    for (size_t mu = 0; mu < rootsj.size(); ++mu) {
                        if (j == i && mu == nu) {
                            if (include_self_factor) lhs *= -(qi * qi);
                            continue;
                        }
                        Complex den = 1.0 - zeta / (qv * rootsj[mu]);
                        if (std::abs(den) < tiny) {
                            pole = true;
                            break;
                        }
                        lhs *= (1.0 - qv * zeta / rootsj[mu]) / den;
                    }
                    if (pole) break;
                }
            }
            if (pole)
                res.push_back(std::numeric_limits<double>::infinity());
            else if (include_self_factor)
                res.push_back(std::abs(lhs + 1.0));
            else
                res.push_back(std::abs(lhs - 1.0 / (qi * qi)));
        }
    }
    return out;
}

std::vector<BetheState> solve_bae(const ChainSpec& chain, const RootData& rd,
                                  const std::map<int, int>& sector, const BaeSolveConfig& config,
                                  BaeSolveStats* stats) {
    BaeSolveStats local;
    if (!stats) stats = &local;
    chain.validate();
    int total = 0;
    for (const auto& [node, count] : sector) {
        if (node < 1 || node > rd.rank())
            throw std::invalid_argument("solve_bae: sector node out of range");
        if (count < 0) throw std::invalid_argument("solve_bae: negative magnon count");
        total += count;
    }

    BaeSystem sys{chain, rd, {}, {}, config.include_self_factor};
    for (const auto& [node, count] : sector)
        for (int nu = 0; nu < count; ++nu) {
            sys.offsets[node].push_back(static_cast<int>(sys.index.size()));
            sys.index.push_back({node, nu});
        }

    std::vector<BetheState> states;
    if (total == 0) {
        states.push_back(BetheState{});
        for (const auto& entry : sector) {
            states.back().roots[entry.first] = {};
            states.back().residuals[entry.first] = {};
            states.back().q_polys[entry.first] = PolyU::one();
        }
        return states;
    }

    double scale = 0;
    for (const auto& f : chain.factors) scale = std::max(scale, std::abs(f.b));
    scale = std::max(scale, 1.0);

    std::mt19937_64 rng(chain.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // The one-root equation at a single node is polynomial,
    // p_i q_i^2 d_i(z) = a_i(z), so its solutions come from a companion
    // matrix, completely and deterministically. They seed the sector
    // directly when it has one root, and combination seeds (the
    // non-interacting approximation) when it has several.
    std::map<int, std::vector<Complex>> pools;
    for (const auto& [node, count] : sector) {
        if (count < 1) continue;
        auto [a_poly, d_poly] = chain.ad_polynomials(rd, node);
        Complex qi = std::pow(chain.q, rd.symmetrizer(node));
        Complex pi = chain.twist_p(rd, node);
        PolyU bae_poly = d_poly.scaled(pi * qi * qi) - a_poly;
        for (const auto& z : bae_poly.roots())
            if (std::abs(z) > config.dedup_scale * scale) pools[node].push_back(z);
    }

    auto annulus_seed = [&](int node) {
        std::vector<Complex> zeros;
        Complex qi = std::pow(chain.q, rd.symmetrizer(node));
        for (const auto& f : chain.factors)
            if (f.node == node) zeros.push_back(f.b / qi);
        Complex center = zeros.empty()
                             ? Complex(1.0, 0.0)
                             : zeros[static_cast<size_t>(unit(rng) * zeros.size()) % zeros.size()];
        double r = unit(rng) < 0.8
                       ? 0.4 + 1.8 * unit(rng)
                       : std::exp(std::log(0.2) + unit(rng) * (std::log(5.0) - std::log(0.2)));
        double ang = 2 * kPi * unit(rng);
        return center * Complex(r * std::cos(ang), r * std::sin(ang));
    };

    std::vector<std::vector<Complex>> found;
    for (int start = 0; start < config.starts; ++start) {
        std::vector<Complex> z(sys.index.size());
        // first sweep the pool combinations with shrinking jitter, then mix
        // pool picks with annulus draws; a pool element drawn twice for one
        // node gets a symmetric split, seeding close pairs
        bool from_pool = !pools.empty() && (start < config.starts / 2 || start % 2 == 0);
        double jitter_size = start < config.starts / 4 ? 0.02 : 0.1;
        std::map<int, std::vector<size_t>> drawn;
        for (size_t k = 0; k < sys.index.size(); ++k) {
            int node = sys.index[k].first;
            const auto& pool = pools[node];
            if (from_pool && !pool.empty()) {
                size_t pick = static_cast<size_t>(unit(rng) * pool.size()) % pool.size();
                int repeats = 0;
                for (size_t prev : drawn[node])
                    if (prev == pick) ++repeats;
                drawn[node].push_back(pick);
                if (repeats == 0) {
                    Complex jitter(jitter_size * (unit(rng) - 0.5),
                                   jitter_size * (unit(rng) - 0.5));
                    z[k] = pool[pick] * (1.0 + jitter);
                } else if (unit(rng) < 0.5) {
                    double sigma = 0.05 + 0.35 * unit(rng);
                    double phase = 2 * kPi * unit(rng);
                    Complex split = sigma * Complex(std::cos(phase), std::sin(phase));
                    z[k] = pool[pick] * (1.0 + (repeats % 2 ? split : -split));
                } else {
                    // string ladder: repeated roots stacked on the q^2 lattice
                    Complex qi2 = std::pow(chain.q, 2 * rd.symmetrizer(node));
                    Complex jitter(0.05 * (unit(rng) - 0.5), 0.05 * (unit(rng) - 0.5));
                    z[k] = pool[pick] * std::pow(qi2, repeats) * (1.0 + jitter);
                }
            } else {
                z[k] = annulus_seed(node);
            }
        }

        std::vector<Complex> g;
        Matrix jac;
        if (!sys.evaluate(z, g, &jac)) {
            ++stats->singular;
            continue;
        }
        double gn = max_abs(g);
        bool converged = false;
        bool hit_singular = false;
        for (int it = 0; it < config.max_iterations; ++it) {
            if (gn < 1e-12) {
                converged = true;
                break;
            }
            std::vector<Complex> rhs(g);
            for (auto& v : rhs) v = -v;
            std::vector<Complex> step;
            try {
                step = lu_solve(jac, rhs);
            } catch (const std::runtime_error&) {
                ++stats->singular;
                hit_singular = true;
                break;
            }
            double damp = 1.0;
            bool improved = false;
            for (int half = 0; half < 12; ++half) {
                std::vector<Complex> trial = z;
                for (size_t k = 0; k < z.size(); ++k) trial[k] += damp * step[k];
                std::vector<Complex> gt;
                if (sys.evaluate(trial, gt, nullptr)) {
                    double gtn = max_abs(gt);
                    if (gtn < gn) {
                        z = std::move(trial);
                        gn = gtn;
                        improved = true;
                        break;
                    }
                }
                damp /= 2;
            }
            if (!improved) break;
            if (!sys.evaluate(z, g, &jac)) break;
            gn = max_abs(g);
        }
        if (!converged) {
            if (!hit_singular) ++stats->non_converged;
            continue;
        }

        // validity: distinct roots within a node, away from 0 and zeros of a_i
        bool valid = true;
        for (const auto& [node, idxs] : sys.offsets) {
            Complex qi = std::pow(chain.q, rd.symmetrizer(node));
            for (size_t a = 0; a < idxs.size() && valid; ++a) {
                Complex za = z[idxs[a]];
                if (std::abs(za) < config.dedup_scale * scale) valid = false;
                for (const auto& f : chain.factors)
                    if (f.node == node && std::abs(za - f.b / qi) < config.dedup_scale * scale)
                        valid = false;
                for (size_t b = a + 1; b < idxs.size(); ++b)
                    if (std::abs(za - z[idxs[b]]) < config.dedup_scale * scale) valid = false;
            }
        }
        if (!valid) {
            ++stats->invalid;
            continue;
        }

        // canonical order within nodes, then dedup
        std::vector<Complex> canon = z;
        for (const auto& [node, idxs] : sys.offsets) {
            std::vector<Complex> vals;
            for (int id : idxs) vals.push_back(canon[id]);
            std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
                if (a.real() != b.real()) return a.real() < b.real();
                return a.imag() < b.imag();
            });
            for (size_t t = 0; t < idxs.size(); ++t) canon[idxs[t]] = vals[t];
        }
        bool duplicate = false;
        for (const auto& prev : found) {
            double dist = 0;
            for (size_t k = 0; k < canon.size(); ++k)
                dist = std::max(dist, std::abs(canon[k] - prev[k]));
            if (dist < config.dedup_scale * scale) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) {
            ++stats->duplicates;
            continue;
        }
        found.push_back(canon);
    }

    for (const auto& z : found) {
        BetheState st;
        for (const auto& [node, idxs] : sys.offsets) {
            for (int id : idxs) st.roots[node].push_back(z[id]);
            st.q_polys[node] = one_minus_u_over(st.roots[node]);
        }
        auto res = check_bae(st, chain, rd, config.include_self_factor);
        bool pass = true;
        for (const auto& [node, rs] : res)
            for (double r : rs)
                if (!(r < config.tolerance)) pass = false;
        if (!pass) continue;
        st.residuals = res;
        states.push_back(std::move(st));
    }
    return states;
}

}  // namespace qbethe
