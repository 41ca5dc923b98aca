#include "oracles.hpp"

#include "thetapairs/polynomial.hpp"
#include "thetapairs/subspace.hpp"

#include <doctest.h>

using namespace thetapairs;

TEST_CASE("GaussRat field operations") {
    GaussRat z(mpq_class(3, 4), mpq_class(-2));
    CHECK(z * z.inverse() == GaussRat(1));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK(z.conj() * z == GaussRat(z.norm()));
    CHECK(GaussRat::frac(2, 4) == GaussRat(mpq_class(1, 2)));
    CHECK((z - z).is_zero());
}

TEST_CASE("GaussRat axioms on random values") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Matrix m = oracle::random_matrix(rng, 1, 3, 9);
        GaussRat a = m(0, 0) / GaussRat(3), b = m(0, 1), c = m(0, 2) / GaussRat(7);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 6; ++t) {
            Matrix m = oracle::random_matrix(rng, n, n);
            CHECK(determinant(m) == oracle::leibniz_det(m));
        }
}

TEST_CASE("characteristic polynomial agrees with Faddeev-LeVerrier") {
    std::mt19937_64 rng(2);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 4; ++t) {
            Matrix m = oracle::random_matrix(rng, n, n);
            CHECK(char_poly(m) == oracle::faddeev_leverrier(m));
        }
    // Cayley-Hamilton on a singular example
    Matrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, GaussRat::i()}};
    CHECK(Poly::from_descending(char_poly(m))(m).is_zero());
}

TEST_CASE("rank, kernel and solve on low-rank matrices") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + t % 3;
        Matrix m = oracle::random_matrix(rng, 4, r, 3) * oracle::random_matrix(rng, r, 4, 3);
        const std::size_t rk = rank(m);
        CHECK(rk == oracle::minor_rank(m));
        auto ker = kernel_basis(m);
        CHECK(ker.size() == 4 - rk);
        for (const auto& v : ker) CHECK(vec_is_zero(m * v));
        Vec x = Matrix(oracle::random_matrix(rng, 4, 1)).column(0);
        Vec b = m * x;
        auto y = solve(m, b);
        REQUIRE(y.has_value());
        CHECK(m * *y == b);
    }
    Matrix singular{{1, 1}, {1, 1}};
    CHECK_FALSE(solve(singular, Vec{1, 0}).has_value());
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("inverse round trip") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        Matrix m = oracle::random_matrix(rng, 4, 4);
        auto inv = inverse(m);
        if (determinant(m).is_zero()) {
            CHECK_FALSE(inv.has_value());
            continue;
        }
        REQUIRE(inv.has_value());
        CHECK(m * *inv == Matrix::identity(4));
    }
}

TEST_CASE("Jordan parts of a matrix") {
    Matrix m{{2, 1}, {0, 2}};
    CHECK(jordan_semisimple_part(m) == Matrix{{2, 0}, {0, 2}});
    CHECK(is_nilpotent(m - jordan_semisimple_part(m)));
    CHECK_FALSE(is_semisimple(m));
    CHECK(is_semisimple(Matrix{{0, -1}, {1, 0}}));
}

TEST_CASE("subspace dimension formula") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        std::vector<Vec> a, b;
        for (int k = 0; k < 1 + t % 4; ++k) a.push_back(oracle::random_matrix(rng, 1, 5, 2).row(0));
        for (int k = 0; k < 1 + (t / 4) % 4; ++k) b.push_back(oracle::random_matrix(rng, 1, 5, 2).row(0));
        Subspace sa = Subspace::span(a, 5), sb = Subspace::span(b, 5);
        CHECK((sa + sb).dim() + intersect(sa, sb).dim() == sa.dim() + sb.dim());
        for (const auto& v : intersect(sa, sb).basis()) CHECK((sa.contains(v) && sb.contains(v)));
        CHECK((sa + sb).contains(sa));
    }
    CHECK(Subspace::whole(3).dim() == 3);
    CHECK(Subspace::span({Vec{1, 2}, Vec{2, 4}}, 2) == Subspace::span({Vec{-3, -6}}, 2));
}

TEST_CASE("image and kernel of a map on a subspace") {
    Matrix p{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
    Subspace s = Subspace::span({Vec{1, 0, 1}, Vec{0, 0, 1}}, 3);
    CHECK(image(p, s).dim() == 1);
    CHECK(kernel_on(p, s) == Subspace::span({Vec{0, 0, 1}}, 3));
    CHECK(complement_basis(s).size() == 1);
}

TEST_CASE("polynomial arithmetic and exact roots") {
    Poly x = Poly::monomial(1, 1);
    std::vector<GaussRat> roots{GaussRat(2), GaussRat(mpq_class(-1, 3)), GaussRat(1, 1), GaussRat(2)};
    Poly p = Poly::monomial(1, 0);
    for (const auto& r : roots) p = p * (x - Poly::monomial(r, 0));
    auto found = gaussian_roots(p);
    CHECK(found.splits);
    CHECK(found.roots.size() == 3);
    for (const auto& r : found.roots) CHECK(p(r).is_zero());
    CHECK(squarefree_part(p).degree() == 3);
    auto [q, rem] = Poly::divmod(p, x - Poly::monomial(2, 0));
    CHECK(rem.is_zero());
    CHECK(q * (x - Poly::monomial(2, 0)) == p);
    // x^2 - 2 has no root in Q(i)
    auto none = gaussian_roots(x * x - Poly::monomial(2, 0));
    CHECK(none.roots.empty());
    CHECK_FALSE(none.splits);
}

TEST_CASE("exact square roots") {
    CHECK(exact_sqrt(GaussRat(mpq_class(9, 4))) == GaussRat(mpq_class(3, 2)));
    auto s = exact_sqrt(GaussRat(0, 2)); // (1+i)^2 = 2i
    REQUIRE(s.has_value());
    CHECK(*s * *s == GaussRat(0, 2));
    CHECK_FALSE(exact_sqrt(GaussRat(3)).has_value());
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        GaussRat z = oracle::random_matrix(rng, 1, 1, 20)(0, 0) / GaussRat(5);
        auto r = exact_sqrt(z * z);
        REQUIRE(r.has_value());
        CHECK(*r * *r == z * z);
    }
}

TEST_CASE("Smith normal form against determinantal divisors") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 2 + t % 3, c = 2 + (t / 3) % 3;
        IntMatrix m = oracle::random_int_matrix(rng, r, c);
        SmithForm s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(s.d.is_diagonal());
        CHECK(abs(determinant(s.u)) == 1);
        CHECK(abs(determinant(s.v)) == 1);
        auto inv = s.invariants();
        auto expect = oracle::invariant_factors(m);
        REQUIRE(inv.size() == expect.size());
        for (std::size_t k = 0; k < inv.size(); ++k) CHECK(abs(inv[k]) == expect[k]);
        for (std::size_t k = 0; k + 1 < inv.size(); ++k)
            if (inv[k + 1] != 0) CHECK(inv[k + 1] % inv[k] == 0);
    }
    SmithForm two = smith_normal_form(IntMatrix{{2, 0}, {0, 2}});
    CHECK(two.invariants() == std::vector<mpz_class>{2, 2});
}
