#include <doctest.h>

#include <random>

#include "qbethe/monomial.hpp"

using namespace qbethe;

namespace {
const SpectralPoint a_pt("a", 0);
}

TEST_CASE("Y canonical form in A1") {
    RootData rd("A1");
    LMonomial y = canonical_Y(1, a_pt, rd);
    CHECK(y.x_exponent(1, SpectralPoint("a", -1)) == 1);
    CHECK(y.x_exponent(1, SpectralPoint("a", 1)) == -1);
    CHECK(y.xexp().size() == 2);
    CHECK(y.yexp().empty());
}

TEST_CASE("A canonical form in A1 uses q^{±2}") {
    RootData rd("A1");
    LMonomial a = canonical_A(1, a_pt, rd);
    CHECK(a.x_exponent(1, SpectralPoint("a", -2)) == 1);
    CHECK(a.x_exponent(1, SpectralPoint("a", 2)) == -1);
    CHECK(a.xexp().size() == 2);
}

TEST_CASE("q^alpha in A2 is y1^2 y2^{-1}") {
    RootData rd("A2");
    LMonomial qa = canonical_qalpha(1, rd);
    CHECK(qa.yexp().at(1) == Rational(2));
    CHECK(qa.yexp().at(2) == Rational(-1));
    CHECK(qa.xexp().empty());
}

TEST_CASE("A_{i,a} in A2 touches both nodes") {
    RootData rd("A2");
    LMonomial a = canonical_A(1, a_pt, rd);
    CHECK(a.x_exponent(1, SpectralPoint("a", -2)) == 1);
    CHECK(a.x_exponent(1, SpectralPoint("a", 2)) == -1);
    CHECK(a.x_exponent(2, SpectralPoint("a", 1)) == 1);
    CHECK(a.x_exponent(2, SpectralPoint("a", -1)) == -1);
}

TEST_CASE("canonicalize is a monoid homomorphism on random products") {
    RootData rd("B2");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> kind(0, 4), node(1, 2), shift(-3, 3), expo(-2, 2);
    auto random_symbol = [&]() {
        int e = expo(rng);
        if (e == 0) e = 1;
        switch (kind(rng)) {
            case 0: return Symbol::X(node(rng), SpectralPoint("a", shift(rng)), e);
            case 1: return Symbol::Y(node(rng), SpectralPoint("a", shift(rng)), e);
            case 2: return Symbol::A(node(rng), SpectralPoint("a", shift(rng)), e);
            case 3: return Symbol::y(node(rng), Rational(shift(rng), 2));
            default: return Symbol::qalpha(node(rng), e);
        }
    };
    for (int t = 0; t < 200; ++t) {
        std::vector<Symbol> e1, e2, joined;
        for (int k = 0; k < 3; ++k) e1.push_back(random_symbol());
        for (int k = 0; k < 3; ++k) e2.push_back(random_symbol());
        joined = e1;
        joined.insert(joined.end(), e2.begin(), e2.end());
        CHECK(canonicalize(joined, rd) == canonicalize(e1, rd) * canonicalize(e2, rd));
    }
}

TEST_CASE("inverse and cancellation") {
    RootData rd("A2");
    LMonomial m = canonical_Y(1, a_pt, rd) * canonical_A(2, SpectralPoint("b", 3), rd, -2);
    CHECK((m * m.inverse()).is_unit());
    CHECK((m / m).is_unit());
}

TEST_CASE("d_degree counts X exponents per node") {
    RootData rd("A2");
    CHECK(d_degree(LMonomial::X(1, a_pt), 1) == 1);
    CHECK(d_degree(canonical_Y(1, a_pt, rd), 1) == 0);
    // head of the 2-finite module in A2: d_1 = 0, d_2 = 1
    LMonomial m2;
    m2.mul_x(1, a_pt, -1);
    m2.mul_x(1, SpectralPoint("a", -2), 1);
    m2.mul_x(2, SpectralPoint("a", 1), 1);
    CHECK(d_degree(m2, 1) == 0);
    CHECK(d_degree(m2, 2) == 1);
}

TEST_CASE("A in terms of Y across all types and nodes") {
    // A_{i,a} = Y_{i,aq_i^{-1}} Y_{i,aq_i} * prod over j by -C_{j,i}:
    //   -1: Y_{j,a}^{-1}   -2: Y_{j,aq^{-1}}^{-1} Y_{j,aq}^{-1}
    //   -3: Y_{j,aq^{-2}}^{-1} Y_{j,a}^{-1} Y_{j,aq^{2}}^{-1}
    for (const char* label : {"A1", "A2", "A5", "B2", "B3", "C2", "C4", "D4", "E6", "F4", "G2"}) {
        RootData rd(label);
        for (int i = 1; i <= rd.rank(); ++i) {
            for (int shift : {-1, 0, 3}) {
                SpectralPoint a("a", shift);
                int di = rd.symmetrizer(i);
                LMonomial rhs = canonical_Y(i, a.shifted(-di), rd) * canonical_Y(i, a.shifted(di), rd);
                for (int j = 1; j <= rd.rank(); ++j) {
                    if (j == i || rd.cartan(j, i) >= 0) continue;
                    switch (rd.cartan(j, i)) {
                        case -1:
                            rhs = rhs * canonical_Y(j, a, rd, -1);
                            break;
                        case -2:
                            rhs = rhs * canonical_Y(j, a.shifted(-1), rd, -1) *
                                  canonical_Y(j, a.shifted(1), rd, -1);
                            break;
                        case -3:
                            rhs = rhs * canonical_Y(j, a.shifted(-2), rd, -1) *
                                  canonical_Y(j, a, rd, -1) * canonical_Y(j, a.shifted(2), rd, -1);
                            break;
                        default:
                            FAIL("unexpected Cartan entry");
                    }
                }
                CHECK(canonical_A(i, a, rd) == rhs);
            }
        }
    }
}
