#include <doctest.h>

#include "qbethe/char_constructors.hpp"
#include "qbethe/qchar.hpp"

using namespace qbethe;

namespace {
const SpectralPoint a_pt("a", 0);

QChar fundamental_a1(const SpectralPoint& at, const RootData& rd) {
    LMonomial head = canonical_Y(1, at, rd);
    QChar x(head, kDepthInf);
    x.add_term(head, BigInt(1));
    x.add_term(head * canonical_A(1, at.shifted(1), rd, -1), BigInt(1));
    return x;
}
}  // namespace

TEST_CASE("weight drop height of A^{-1} factors") {
    RootData rd("A2");
    LMonomial rel = canonical_A(1, a_pt, rd, -1);
    CHECK(weight_drop_height(rel, rd) == 1);
    rel = rel * canonical_A(2, SpectralPoint("a", 5), rd, -1);
    CHECK(weight_drop_height(rel, rd) == 2);
    auto coords = weight_drop_coords(rel, rd);
    REQUIRE(coords.has_value());
    CHECK(*coords == std::vector<int>{1, 1});
    // weight-only factors count by root height
    CHECK(weight_drop_height(canonical_qalpha(1, rd, -1), rd) == 1);
    // A^{+1} does not collapse into Q^+
    CHECK_FALSE(weight_drop_height(canonical_A(1, a_pt, rd, 1), rd).has_value());
    // unbalanced X content is rejected
    CHECK_FALSE(weight_drop_height(LMonomial::X(1, a_pt), rd).has_value());
}

TEST_CASE("product of two A1 fundamentals at shifted points") {
    RootData rd("A1");
    QChar x = fundamental_a1(a_pt, rd);
    QChar y = fundamental_a1(SpectralPoint("a", 2), rd);
    QChar xy = multiply(x, y, kDepthInf, rd);
    CHECK(xy.terms().size() == 4);
    CHECK(xy.head() == x.head() * y.head());
    BigInt total;
    for (const auto& [m, c] : xy.terms()) total += c;
    CHECK(total.to_int64() == 4);
}

TEST_CASE("multiplication by the unit character") {
    RootData rd("A1");
    QChar one(LMonomial(), kDepthInf);
    one.add_term(LMonomial(), BigInt(1));
    QChar x = fundamental_a1(a_pt, rd);
    CHECK(multiply(x, one, kDepthInf, rd) == x);
    CHECK(multiply(one, x, kDepthInf, rd) == x);
}

TEST_CASE("multiply is commutative") {
    RootData rd("A2");
    QChar x(LMonomial::X(1, a_pt), kDepthInf);
    x.add_term(LMonomial::X(1, a_pt), BigInt(2));
    x.add_term(LMonomial::X(1, a_pt) * canonical_A(1, a_pt, rd, -1), BigInt(3));
    QChar y(LMonomial::X(2, a_pt), kDepthInf);
    y.add_term(LMonomial::X(2, a_pt), BigInt(1));
    y.add_term(LMonomial::X(2, a_pt) * canonical_A(2, SpectralPoint("a", 1), rd, -1), BigInt(5));
    CHECK(multiply(x, y, kDepthInf, rd) == multiply(y, x, kDepthInf, rd));
}

TEST_CASE("multiply rejects depth beyond the inputs") {
    RootData rd("A1");
    QChar x = truncate(fundamental_a1(a_pt, rd), 1, rd);
    QChar y = fundamental_a1(SpectralPoint("a", 2), rd);
    CHECK_THROWS_AS(multiply(x, y, 2, rd), std::invalid_argument);
}

TEST_CASE("truncating an exact product equals multiplying truncations") {
    RootData rd("A1");
    QChar x = fundamental_a1(a_pt, rd);
    QChar y = fundamental_a1(SpectralPoint("a", 4), rd);
    for (int depth = 0; depth <= 2; ++depth) {
        QChar full = multiply(x, y, kDepthInf, rd);
        QChar direct = truncate(full, depth, rd);
        QChar stepped = multiply(truncate(x, depth, rd), truncate(y, depth, rd), depth, rd);
        CHECK(direct.terms() == stepped.terms());
    }
}

TEST_CASE("weight collapse of the A1 fundamental") {
    RootData rd("A1");
    CollapsedChar c = weight_collapse(fundamental_a1(a_pt, rd), rd);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms.at(std::vector<int>{0}).to_int64() == 1);
    CHECK(c.terms.at(std::vector<int>{1}).to_int64() == 1);
    CHECK(c.head == canonical_Y(1, a_pt, rd));
}

TEST_CASE("dimension requires an exact character") {
    RootData rd("A1");
    QChar x = fundamental_a1(a_pt, rd);
    CHECK(dimension(x).to_int64() == 2);
    CHECK_THROWS_AS(dimension(truncate(x, 1, rd)), std::invalid_argument);
    QChar one(LMonomial(), kDepthInf);
    one.add_term(LMonomial(), BigInt(1));
    CHECK(dimension(one).to_int64() == 1);
}

TEST_CASE("weight collapse of the positive prefundamental is geometric") {
    RootData rd("A1");
    QChar m = mplus_char(1, a_pt, rd, 5);
    CollapsedChar c = weight_collapse(m, rd);
    REQUIRE(c.terms.size() == 6);
    for (int k = 0; k <= 5; ++k) CHECK(c.terms.at(std::vector<int>{k}).to_int64() == 1);
}
