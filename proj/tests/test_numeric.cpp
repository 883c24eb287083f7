#include <doctest.h>

#include <random>

#include "qbethe/complexmat.hpp"
#include "qbethe/poly_u.hpp"

using namespace qbethe;

namespace {

Matrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
    return m;
}

}  // namespace

TEST_CASE("lu solve on random systems") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 7;
        Matrix a = random_matrix(n, rng);
        std::vector<Complex> x(n);
        for (auto& v : x) v = Complex(d(rng), d(rng));
        auto b = a.apply(x);
        auto solved = lu_solve(a, b);
        for (int i = 0; i < n; ++i) CHECK(std::abs(solved[i] - x[i]) < 1e-10);
    }
}

TEST_CASE("qr least squares reproduces exact solutions and beats perturbations") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix a(8, 3);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = Complex(d(rng), d(rng));
    std::vector<Complex> x = {Complex(1, 2), Complex(-0.5, 0.25), Complex(0, -3)};
    auto b = a.apply(x);
    auto fit = qr_least_squares(a, b);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(fit[j] - x[j]) < 1e-10);
}

TEST_CASE("eigendecomposition residuals on random matrices") {
    std::mt19937_64 rng(3);
    for (int n : {2, 3, 5, 8, 16}) {
        Matrix a = random_matrix(n, rng);
        Eigen eig = eigendecompose(a);
        REQUIRE(static_cast<int>(eig.values.size()) == n);
        for (int k = 0; k < n; ++k) {
            std::vector<Complex> v(n);
            for (int i = 0; i < n; ++i) v[i] = eig.vectors(i, k);
            auto av = a.apply(v);
            double resid = 0;
            for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(av[i] - eig.values[k] * v[i]));
            CHECK(resid < 1e-9 * std::max(1.0, a.max_abs()));
        }
    }
}

TEST_CASE("eigendecomposition recovers a prescribed spectrum") {
    std::mt19937_64 rng(4);
    int n = 6;
    // build A = S D S^{-1} with known distinct eigenvalues
    std::vector<Complex> lam;
    for (int k = 0; k < n; ++k) lam.push_back(Complex(k + 0.5, 0.3 * k - 1.0));
    Matrix s = random_matrix(n, rng);
    Matrix d(n, n);
    for (int k = 0; k < n; ++k) d(k, k) = lam[k];
    Matrix a = s * d * inverse(s);
    Eigen eig = eigendecompose(a);
    std::vector<Complex> got = eig.values;
    auto by_real = [](Complex x, Complex y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(got.begin(), got.end(), by_real);
    std::sort(lam.begin(), lam.end(), by_real);
    for (int k = 0; k < n; ++k) CHECK(std::abs(got[k] - lam[k]) < 1e-8);
}

TEST_CASE("polynomial arithmetic and division") {
    PolyU p({Complex(1), Complex(2), Complex(3)});
    PolyU q({Complex(-1), Complex(1)});
    PolyU prod = p * q;
    CHECK(prod.degree() == 3);
    PolyU quot, rem;
    prod.divmod(q, quot, rem);
    CHECK(rem.max_abs_coeff() < 1e-14);
    CHECK((quot - p).max_abs_coeff() < 1e-14);
    CHECK(std::abs(p.eval(Complex(2, 1)) * q.eval(Complex(2, 1)) - prod.eval(Complex(2, 1))) <
          1e-12);
}

TEST_CASE("polynomial roots via the companion matrix") {
    std::vector<Complex> roots = {Complex(1, 1), Complex(-2, 0.5), Complex(0.25, -3),
                                  Complex(4, 0)};
    PolyU p = PolyU::from_roots(roots, Complex(2.0, -1.0));
    auto got = p.roots();
    REQUIRE(got.size() == roots.size());
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (size_t k = 0; k < roots.size(); ++k) CHECK(std::abs(got[k] - roots[k]) < 1e-9);
}

TEST_CASE("scale_arg composes the argument") {
    PolyU p({Complex(1), Complex(0), Complex(2)});
    Complex s(0.5, 0.25);
    Complex u(1.5, -0.75);
    CHECK(std::abs(p.scale_arg(s).eval(u) - p.eval(s * u)) < 1e-13);
}
