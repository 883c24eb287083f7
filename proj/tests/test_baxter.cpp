#include <doctest.h>

#include "qbethe/baxter.hpp"
#include "qbethe/spectrum.hpp"
#include "qbethe/transfer.hpp"

using namespace qbethe;

namespace {

Complex closed_form_root(Complex b, Complex p, Complex q) {
    return b * (p * q * q * q - 1.0) / (q * (p * q - 1.0));
}

}  // namespace

TEST_CASE("N=0 recovery succeeds exactly when Lambda = a + p d") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    auto [a, d] = chain.ad_polynomials(rd, 1);
    Complex p = chain.twist_p(rd, 1);
    PolyU lambda = a + d.scaled(p);
    QRecovery rec = recover_q(lambda, a, d, p, 0, chain.q);
    CHECK(rec.ok);
    CHECK(rec.residual < 1e-14);
    CHECK(rec.q_poly.degree() == 0);

    // a wrong eigenvalue fails loudly
    PolyU wrong = lambda + PolyU({Complex(0.1)});
    CHECK_FALSE(recover_q(wrong, a, d, p, 0, chain.q).ok);
}

TEST_CASE("L=1 N=1 closed-form Bethe root") {
    ChainSpec chain = ChainSpec::default_a1(1);
    RootData rd("A1");
    Complex q = chain.q, b = chain.factors[0].b, p = chain.twist_p(rd, 1);
    Complex zeta = closed_form_root(b, p, q);

    // from the diagonalized 2x2 transfer matrix
    auto modes = diagonalize_and_interpolate(chain);
    auto [a, d] = chain.ad_polynomials(rd, 1);
    bool seen = false;
    for (const auto& mode : modes) {
        if (mode.sector != 1) continue;
        seen = true;
        QRecovery rec = recover_q(mode.lambda, a, d, p, 1, q);
        REQUIRE(rec.ok);
        REQUIRE(rec.q_poly.degree() == 1);
        Complex root = -1.0 / rec.q_poly.coeffs()[1];
        CHECK(std::abs(root - zeta) < 1e-10);
    }
    CHECK(seen);

    // from the printed Bethe equation with the self factor
    BetheState st;
    st.roots[1] = {zeta};
    auto res = check_bae(st, chain, rd, true);
    CHECK(res[1][0] < 1e-12);
    // and in the conventional form
    auto res2 = check_bae(st, chain, rd, false);
    CHECK(res2[1][0] < 1e-12);
}

TEST_CASE("deg Q equals the magnon number on every eigenvector, L <= 5") {
    for (int length : {2, 3, 4, 5}) {
        ChainSpec chain = ChainSpec::default_a1(length);
        RootData rd("A1");
        auto [a, d] = chain.ad_polynomials(rd, 1);
        Complex p = chain.twist_p(rd, 1);
        auto modes = diagonalize_and_interpolate(chain);
        for (const auto& mode : modes) {
            QRecovery rec = recover_q(mode.lambda, a, d, p, mode.sector, chain.q);
            CHECK(rec.ok);
            CHECK(rec.q_poly.trimmed(1e-9).degree() == mode.sector);
        }
    }
}

TEST_CASE("recover_q rejects oversized sectors") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    auto [a, d] = chain.ad_polynomials(rd, 1);
    CHECK_THROWS_AS(recover_q(a, a, d, Complex(1), 3, chain.q), std::invalid_argument);
}

TEST_CASE("solve_bae finds the closed-form root for L=1") {
    ChainSpec chain = ChainSpec::default_a1(1);
    RootData rd("A1");
    Complex zeta = closed_form_root(chain.factors[0].b, chain.twist_p(rd, 1), chain.q);
    BaeSolveConfig cfg;
    cfg.starts = 40;
    auto states = solve_bae(chain, rd, {{1, 1}}, cfg);
    REQUIRE(states.size() == 1);
    CHECK(std::abs(states[0].roots[1][0] - zeta) < 1e-10);
    for (double r : states[0].residuals[1]) CHECK(r < 1e-10);
}

TEST_CASE("solve_bae on the homogeneous L=2 chain matches the quadratic") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    Complex q = chain.q, p = chain.twist_p(rd, 1);
    // p q^2 (z - q)^2 = (q z - 1)^2
    Complex c = p * q * q;
    PolyU quadratic({c * q * q - 1.0, -2.0 * c * q + 2.0 * q, c - q * q});
    auto expected = quadratic.roots();
    BaeSolveConfig cfg;
    cfg.starts = 80;
    auto states = solve_bae(chain, rd, {{1, 1}}, cfg);
    REQUIRE(states.size() == 2);
    std::vector<Complex> got = {states[0].roots[1][0], states[1].roots[1][0]};
    std::sort(got.begin(), got.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (size_t k = 0; k < 2; ++k) CHECK(std::abs(got[k] - expected[k]) < 1e-9);
}

TEST_CASE("printed and conventional Bethe forms have the same solutions") {
    ChainSpec chain = ChainSpec::default_a1(3);
    RootData rd("A1");
    BaeSolveConfig printed, conventional;
    printed.starts = conventional.starts = 120;
    conventional.include_self_factor = false;
    auto s1 = solve_bae(chain, rd, {{1, 1}}, printed);
    auto s2 = solve_bae(chain, rd, {{1, 1}}, conventional);
    REQUIRE(s1.size() == s2.size());
    for (size_t k = 0; k < s1.size(); ++k)
        CHECK(std::abs(s1[k].roots[1][0] - s2[k].roots[1][0]) < 1e-10);
}

TEST_CASE("empty sector returns the trivial state") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    auto states = solve_bae(chain, rd, {{1, 0}});
    REQUIRE(states.size() == 1);
    CHECK(states[0].roots.at(1).empty());
    CHECK(check_bae(states[0], chain, rd).at(1).empty());
}

TEST_CASE("perturbed roots fail the residual check") {
    ChainSpec chain = ChainSpec::default_a1(1);
    RootData rd("A1");
    Complex zeta = closed_form_root(chain.factors[0].b, chain.twist_p(rd, 1), chain.q);
    BetheState st;
    st.roots[1] = {zeta * (1.0 + 1e-3)};
    auto res = check_bae(st, chain, rd);
    CHECK(res[1][0] > 1e-6);
    // a root on a pole of the equation reports +infinity
    BetheState pole;
    pole.roots[1] = {chain.factors[0].b / chain.q};
    auto pres = check_bae(pole, chain, rd);
    CHECK(std::isinf(pres[1][0]));
}

TEST_CASE("eigenvalue_from_q matches the interpolated eigenvalues") {
    ChainSpec chain = ChainSpec::default_a1(3);
    RootData rd("A1");
    auto [a, d] = chain.ad_polynomials(rd, 1);
    Complex p = chain.twist_p(rd, 1);
    auto modes = diagonalize_and_interpolate(chain);
    for (const auto& mode : modes) {
        QRecovery rec = recover_q(mode.lambda, a, d, p, mode.sector, chain.q);
        REQUIRE(rec.ok);
        std::map<int, PolyU> qp{{1, rec.q_poly}};
        for (Complex u : {Complex(0.37, 0.22), Complex(-0.9, 0.61)}) {
            Complex lhs = eigenvalue_from_q(qp, chain, rd, 1, u);
            CHECK(std::abs(lhs - mode.lambda.eval(u)) < 1e-8);
        }
    }
}

TEST_CASE("eigenvalue_from_q flags a remainder when the roots are wrong") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    std::map<int, PolyU> qp{{1, PolyU({Complex(1.0), Complex(-0.513, 0.21)})}};
    CHECK_THROWS_AS(eigenvalue_from_q(qp, chain, rd, 1, Complex(0.4, 0.1)), std::runtime_error);
}

TEST_CASE("full spectrum report for the L=3 default chain") {
    qbethe::SpectrumReport rep = qbethe::spectrum_report(qbethe::ChainSpec::default_a1(3));
    CHECK(rep.rows.size() == 8);
    CHECK(rep.sector_counts == std::vector<int>{1, 3, 3, 1});
    CHECK(rep.sector_counts_ok);
    CHECK(rep.completeness_ok);
    CHECK(rep.substitution_two_terms_ok);
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) {
        CHECK(row.ok);
        CHECK(row.q_poly.degree() == row.sector);
    }
    // report renders in both formats
    CHECK_FALSE(rep.to_json_string().empty());
    CHECK_FALSE(rep.to_text().empty());
}

TEST_CASE("ad polynomials per node, including empty nodes") {
    RootData a2("A2");
    ChainSpec chain;
    chain.q = Complex(0.8, 0.0);
    chain.twist = {Complex(1.0, 0.1), Complex(0.9, -0.2)};
    chain.factors = {{1, Complex(2.0, 0.0)}};
    // single factor at node 1: a(u) = qu - b, d(u) = u - qb
    auto [a1, d1] = chain.ad_polynomials(a2, 1);
    CHECK(a1.degree() == 1);
    CHECK(std::abs(a1.coeffs()[1] - chain.q) < 1e-15);
    CHECK(std::abs(a1.coeffs()[0] + Complex(2.0)) < 1e-15);
    CHECK(std::abs(d1.coeffs()[0] + chain.q * 2.0) < 1e-15);
    // empty node 2: a = d = 1
    auto [a2p, d2p] = chain.ad_polynomials(a2, 2);
    CHECK(a2p.degree() == 0);
    CHECK(d2p.degree() == 0);
    CHECK(a2p.coeffs()[0] == Complex(1.0));

    // L = 2 homogeneous: a(u) = (qu-1)^2, d(u) = (u-q)^2
    RootData a1rd("A1");
    ChainSpec homog = ChainSpec::default_a1(2);
    auto [ah, dh] = homog.ad_polynomials(a1rd, 1);
    Complex q = homog.q;
    CHECK(std::abs(ah.eval(Complex(1.7, 0.4)) -
                   (q * Complex(1.7, 0.4) - 1.0) * (q * Complex(1.7, 0.4) - 1.0)) < 1e-13);
    CHECK(std::abs(dh.eval(Complex(0.3, -0.8)) -
                   (Complex(0.3, -0.8) - q) * (Complex(0.3, -0.8) - q)) < 1e-13);
}

TEST_CASE("solver statistics are recorded") {
    ChainSpec chain = ChainSpec::default_a1(2);
    RootData rd("A1");
    BaeSolveConfig cfg;
    cfg.starts = 60;
    BaeSolveStats stats;
    auto states = solve_bae(chain, rd, {{1, 1}}, cfg, &stats);
    CHECK(states.size() == 2);
    // most starts re-find a known solution
    CHECK(stats.duplicates > 0);
    CHECK(stats.duplicates + stats.non_converged + stats.singular + stats.invalid +
              static_cast<int>(states.size()) ==
          cfg.starts);
}

TEST_CASE("solve_bae states rebuild the diagonalized eigenvalues, L=3 N=2") {
    ChainSpec chain = ChainSpec::default_a1(3);
    RootData rd("A1");
    BaeSolveConfig cfg;
    cfg.starts = 200;
    auto states = solve_bae(chain, rd, {{1, 2}}, cfg);
    REQUIRE(states.size() == 3);  // weight-space dimension C(3,2)

    // each Bethe state reproduces one interpolated eigenvalue
    auto modes = diagonalize_and_interpolate(chain);
    std::vector<Complex> probe = {Complex(0.41, 0.18), Complex(-0.73, 0.52)};
    int matched = 0;
    for (const auto& st : states) {
        for (const auto& mode : modes) {
            if (mode.sector != 2) continue;
            bool same = true;
            for (const auto& u : probe) {
                Complex from_roots = eigenvalue_from_q(st.q_polys, chain, rd, 1, u);
                if (std::abs(from_roots - mode.lambda.eval(u)) > 1e-8) same = false;
            }
            if (same) ++matched;
        }
    }
    CHECK(matched == 3);
}

TEST_CASE("rank-general Bethe equations on an A2 chain") {
    RootData rd("A2");
    ChainSpec chain;
    chain.q = Complex(0.8, 0.0);
    chain.twist = {Complex(1.05, 0.31), Complex(0.87, -0.22)};
    chain.factors = {{1, Complex(1.0, 0.0)}, {2, Complex(1.2, 0.1)}};
    chain.seed = 77;

    BaeSolveConfig cfg;
    cfg.starts = 250;
    auto states = solve_bae(chain, rd, {{1, 1}, {2, 1}}, cfg);
    REQUIRE_FALSE(states.empty());
    for (const auto& st : states) {
        for (const auto& [node, rs] : st.residuals)
            for (double r : rs) CHECK(r < 1e-10);
        // pole cancellation: the eigenvalue from the TQ form is a polynomial
        // at both nodes, so the division must leave no remainder
        for (int i = 1; i <= 2; ++i) {
            Complex val = eigenvalue_from_q(st.q_polys, chain, rd, i, Complex(0.9, 0.2));
            CHECK(std::isfinite(val.real()));
            CHECK(std::isfinite(val.imag()));
        }
    }
}

TEST_CASE("multi-start Newton finds the full N=2 sector at L=4") {
    ChainSpec chain = ChainSpec::default_a1(4);
    RootData rd("A1");
    BaeSolveConfig cfg;
    cfg.starts = 400;
    auto states = solve_bae(chain, rd, {{1, 2}}, cfg);
    CHECK(states.size() == 6);  // C(4,2) for generic twist

    // every state matches one recovered-Q root set from the diagonalization
    auto modes = diagonalize_and_interpolate(chain);
    auto [a, d] = chain.ad_polynomials(rd, 1);
    Complex p = chain.twist_p(rd, 1);
    std::vector<std::vector<Complex>> recovered;
    for (const auto& mode : modes) {
        if (mode.sector != 2) continue;
        QRecovery rec = recover_q(mode.lambda, a, d, p, 2, chain.q);
        REQUIRE(rec.ok);
        recovered.push_back(rec.q_poly.roots());
    }
    int matched = 0;
    for (const auto& st : states) {
        for (const auto& roots : recovered) {
            double dist = 0;
            for (size_t k = 0; k < roots.size(); ++k)
                dist = std::max(dist, std::abs(roots[k] - st.roots.at(1)[k]));
            if (dist < 1e-8) ++matched;
        }
    }
    CHECK(matched == 6);
}

TEST_CASE("default solver config sweeps every sector of the L<=4 chains") {
    RootData rd("A1");
    for (int length = 1; length <= 4; ++length) {
        ChainSpec chain = ChainSpec::default_a1(length);
        long long expect = 1;
        for (int n = 1; n <= length; ++n) {
            expect = expect * (length - n + 1) / n;  // binomial(L, n)
            auto states = solve_bae(chain, rd, {{1, n}});
            CHECK(static_cast<long long>(states.size()) == expect);
        }
    }
}

TEST_CASE("eigenvalue from the trivial Q is a + p d") {
    ChainSpec chain = ChainSpec::default_a1(3);
    RootData rd("A1");
    auto [a, d] = chain.ad_polynomials(rd, 1);
    Complex p = chain.twist_p(rd, 1);
    std::map<int, PolyU> empty_qp;
    for (Complex u : {Complex(0.5, 0.1), Complex(-1.1, 0.7)}) {
        Complex val = eigenvalue_from_q(empty_qp, chain, rd, 1, u);
        CHECK(std::abs(val - (a.eval(u) + p * d.eval(u))) < 1e-12);
    }
}
