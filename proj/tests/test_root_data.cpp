#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "qbethe/root_data.hpp"

using qbethe::RootData;

TEST_CASE("A1 root data") {
    RootData rd("A1");
    CHECK(rd.rank() == 1);
    CHECK(rd.cartan(1, 1) == 2);
    CHECK(rd.symmetrizer(1) == 1);
    CHECK(rd.positive_roots().size() == 1);
    CHECK(rd.qij_exponent(1, 1) == 2);
}

TEST_CASE("A2 closure finds the three positive roots") {
    RootData rd("A2");
    CHECK(rd.positive_roots().size() == 3);
    CHECK(rd.qij_exponent(1, 2) == -1);
    std::vector<int> highest{1, 1};
    CHECK(rd.coweight_pairing(1, highest) == 1);
    std::vector<int> alpha2{0, 1};
    CHECK(rd.coweight_pairing(1, alpha2) == 0);
}

TEST_CASE("G2 conventions") {
    RootData rd("G2");
    CHECK(rd.positive_roots().size() == 6);
    CHECK(rd.symmetrizer(1) == 1);
    CHECK(rd.symmetrizer(2) == 3);
    // highest root 3 alpha1 + 2 alpha2
    std::vector<int> highest{3, 2};
    CHECK(rd.coweight_pairing(1, highest) == 3);
    CHECK(rd.coweight_pairing(2, highest) == 2);
}

TEST_CASE("root counts match the tabulated values for every supported type") {
    for (const char* label : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3",
                              "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        RootData rd(label);
        CHECK(static_cast<int>(rd.positive_roots().size()) ==
              RootData::expected_root_count(rd.family(), rd.rank()));
        // D*C symmetric
        for (int i = 1; i <= rd.rank(); ++i)
            for (int j = 1; j <= rd.rank(); ++j)
                CHECK(rd.symmetrizer(i) * rd.cartan(i, j) == rd.symmetrizer(j) * rd.cartan(j, i));
        // symmetrizers relatively prime
        int g = 0;
        for (int i = 1; i <= rd.rank(); ++i) g = std::gcd(g, rd.symmetrizer(i));
        CHECK(g == 1);
        // <omega_i^vee, alpha_j> = delta_ij on simple roots
        for (int i = 1; i <= rd.rank(); ++i)
            for (int j = 1; j <= rd.rank(); ++j) {
                std::vector<int> alpha(rd.rank(), 0);
                alpha[j - 1] = 1;
                CHECK(rd.coweight_pairing(i, alpha) == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("type A coweight pairings are 0 or 1 on all positive roots") {
    for (const char* label : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"}) {
        RootData rd(label);
        for (const auto& alpha : rd.positive_roots())
            for (int i = 1; i <= rd.rank(); ++i) {
                int c = rd.coweight_pairing(i, alpha);
                CHECK(c >= 0);
                CHECK(c <= 1);
            }
    }
}

TEST_CASE("bad labels are rejected") {
    CHECK_THROWS_AS(RootData("A0"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("A9"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("H4"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("B1"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("D2"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("E5"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("G3"), std::invalid_argument);
    CHECK_THROWS_AS(RootData("X"), std::invalid_argument);
}
