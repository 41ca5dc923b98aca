#include "oracles.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/involution_data.hpp"
#include "thetapairs/pair_catalog.hpp"

#include <doctest.h>

using namespace thetapairs;

TEST_CASE("pair spec grammar") {
    for (std::string s : {"splitA:n=1", "splitA:n=3", "glgl:n=2", "diag:sl2", "diag:sl3", "g2split", "e6qs"})
        CHECK(PairSpec::parse(s).id() == s);
    for (std::string s : {"", "splitA", "splitA:n=0", "splitA:n=x", "glgl:n=-1", "diag:sl4", "e7", "g2split:n=1"})
        CHECK_THROWS_AS(PairSpec::parse(s), SpecParseError);
    CHECK(default_catalog().size() > matrix_catalog().size());
    for (const auto& s : matrix_catalog()) CHECK(s.matrix_level());
}

namespace {

// Independent dimension counts: so(n+1) in sl(n+1); gl(n) x gl(n) in gl(2n); sl(n) in sl(n) x sl(n).
struct Dims {
    std::size_t dim, g0, r1;
};
Dims expected_dims(const PairSpec& s) {
    const std::size_t n = static_cast<std::size_t>(s.n);
    switch (s.family) {
    case Family::SplitA: return {(n + 1) * (n + 1) - 1, n * (n + 1) / 2, n};
    case Family::GlGl: return {4 * n * n, 2 * n * n, n};
    default: return {2 * (n * n - 1), n * n - 1, n - 1};
    }
}

} // namespace

TEST_CASE("matrix models: dimensions and theta") {
    std::mt19937_64 rng(21);
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        Dims e = expected_dims(spec);
        CAPTURE(spec.id());
        CHECK(p.dim() == e.dim);
        CHECK(p.dim_g0() == e.g0);
        CHECK(p.r1() == e.r1);
        CHECK(p.g0().dim() + p.g1().dim() == p.dim());
        CHECK(p.cartan_subspace().dim() == p.r1());
        for (const auto& a : p.cartan_subspace_basis()) {
            CHECK(p.in_g1(a));
            for (const auto& b : p.cartan_subspace_basis()) CHECK(commutator(a, b).is_zero());
        }
        for (int t = 0; t < 5; ++t) {
            std::uniform_int_distribution<long> d(-3, 3);
            Vec cx(p.dim()), cy(p.dim());
            for (auto& c : cx) c = d(rng);
            for (auto& c : cy) c = d(rng);
            Matrix x = p.from_coords(cx), y = p.from_coords(cy);
            CHECK(p.coords(x) == cx);
            CHECK(p.theta(p.theta(x)) == x);
            CHECK(p.theta(commutator(x, y)) == commutator(p.theta(x), p.theta(y)));
            CHECK(p.in_g0(p.project_g0(x)));
            CHECK(p.in_g1(p.project_g1(x)));
            CHECK(p.ad(x) * p.coords(y) == p.coords(commutator(x, y)));
        }
    }
}

TEST_CASE("group involution fixes G0 and inverts exp of g1") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=2"));
    Matrix j{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}; // in SO(3)
    CHECK(p.in_group(j));
    CHECK(p.theta_group(j) == j);
    Matrix g{{2, 0, 0}, {0, 1, 0}, {0, 0, GaussRat::frac(1, 2)}};
    CHECK(p.theta_group(g) == *inverse(g));
}

TEST_CASE("frames are theta-stable with consistent root data") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        CAPTURE(spec.id());
        for (const Frame* f : {&p.split_frame(), &p.fundamental_frame()}) {
            for (std::size_t k = 0; k < f->root_vectors.size(); ++k) {
                const Matrix& x = f->root_vectors[k];
                CHECK(p.theta(x) == f->root_vectors[f->theta_star(k)] * f->theta_scalars[k]);
                for (const auto& h : f->torus_basis) {
                    Matrix bracket = commutator(h, x);
                    CHECK(rank(Matrix::from_columns({bracket.flatten(), x.flatten()}, x.rows() * x.cols())) <= 1);
                }
            }
            CHECK(p.torus(*f).dim() == p.rank());
        }
        // split torus: theta acts as -1 on a
        CHECK(intersect(p.torus(p.split_frame()), p.g1()) == p.cartan_subspace());
        validate(p.split(), false);
        validate(p.fundamental());
    }
}

TEST_CASE("root-level catalog entries") {
    SymmetricPair g2 = SymmetricPair::realize(PairSpec::parse("g2split"));
    CHECK_FALSE(g2.matrix_level());
    CHECK(g2.r1() == 2);
    SymmetricPair e6 = SymmetricPair::realize(PairSpec::parse("e6qs"));
    CHECK(e6.datum()->label() == "E6");
    CHECK(e6.rank() == 6);
}

TEST_CASE("coordinate permutations are permutations") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=3"));
    WeylGroup w = WeylGroup::enumerate(*p.datum());
    std::set<std::vector<std::size_t>> seen;
    for (const auto& e : w.elements()) {
        auto pi = coordinate_permutation(p, e);
        auto sorted = pi;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
        seen.insert(pi);
    }
    CHECK(seen.size() == 24);
}
