#include "oracles.hpp"

#include "thetapairs/slice_fibers.hpp"

#include <doctest.h>

using namespace thetapairs;

TEST_CASE("chi1 on sl2/so2 is a multiple of det") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=1"));
    std::mt19937_64 rng(31);
    Matrix a = p.cartan_subspace_basis()[0];
    Subspace g1 = p.g1();
    auto basis = p.matrices(g1);
    REQUIRE(basis.size() == 2);
    // chi1 is a degree-2 invariant; on a 1-dim quotient it is proportional to det.
    GaussRat ratio = chi1(p, a)[0] / determinant(a);
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<long> d(-5, 5);
        Matrix x = basis[0] * GaussRat(d(rng)) + basis[1] * GaussRat(d(rng));
        CHECK(chi1(p, x)[0] == ratio * determinant(x));
    }
}

TEST_CASE("chi1 is constant on G0-conjugates") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        CAPTURE(spec.id());
        CHECK(chi1_g0_invariant(p, 3, 7));
        CHECK(chi1_wa_invariant(p, compute_subgroups(p), 4, 7));
    }
}

TEST_CASE("Jordan parts stay in g1") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=2"));
    Matrix dg = degenerate_a_point(p);
    Matrix x = dg + regular_nilpotent(p, centralizer_pair(p, dg, 1));
    ElementOfG1 j = jordan_in_g1(p, x);
    CHECK(j.ss == dg);
    CHECK(j.ss + j.nil == x);
    CHECK(commutator(j.ss, j.nil).is_zero());
    CHECK(is_nilpotent(j.nil));
    CHECK(is_semisimple(j.ss));
}

TEST_CASE("KW section: normal triple and round trips for several seeds") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        CAPTURE(spec.id());
        for (std::uint64_t seed : {1, 2, 3}) {
            KWSection kw = build_kw_section(p, seed);
            CHECK(commutator(kw.h, kw.e) == kw.e * GaussRat(2));
            CHECK(commutator(kw.h, kw.f) == kw.f * GaussRat(-2));
            CHECK(commutator(kw.e, kw.f) == kw.h);
            CHECK(kw.v.size() == p.r1());
            for (const auto& v : kw.v) CHECK(commutator(kw.f, v).is_zero());
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> d(-4, 4);
            Vec target(p.r1());
            for (auto& c : target) c = d(rng);
            Vec t = slice_solve(p, kw, target);
            CHECK(chi1(p, slice_point(kw, t)) == target);
        }
    }
}

TEST_CASE("regular points of a and the degenerate point") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        SubgroupReport r = compute_subgroups(p);
        Matrix x = regular_a_point(p, r, 1);
        CAPTURE(spec.id());
        CHECK(p.cartan_subspace().contains(p.coords(x)));
        CHECK(is_regular(p, x));
        CHECK(wa_stabilizer_order(p, r, x) == 1);
        Matrix d = degenerate_a_point(p);
        CHECK_FALSE(d.is_zero());
        CHECK(r.wa_order % wa_stabilizer_order(p, r, d) == 0);
    }
}

TEST_CASE("fiber cardinalities do not depend on the seed") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=2"));
    SubgroupReport r = compute_subgroups(p);
    for (std::uint64_t seed : {1, 5, 9}) {
        FiberReport f = fiber_over_regular(p, regular_a_point(p, r, seed), r);
        CHECK(f.borels.size() == 6);
        CHECK(f.borels_valid);
        // distinct Borels of the right dimension containing x
        for (std::size_t i = 0; i < f.borels.size(); ++i) {
            CHECK(f.borels[i].dim() == (p.dim() + p.rank()) / 2);
            CHECK(f.borels[i].contains(p.coords(f.base.x)));
            for (std::size_t j = i + 1; j < f.borels.size(); ++j) CHECK_FALSE(f.borels[i] == f.borels[j]);
        }
    }
}

TEST_CASE("component census groups") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("glgl:n=2"));
    SubgroupReport r = compute_subgroups(p);
    ComponentCensus c = component_census(p, regular_a_point(p, r, 1));
    CHECK(c.points == 24);
    CHECK(c.group_sizes == std::vector<std::size_t>{8, 8, 8});
    CHECK(c.unique_membership);
}

TEST_CASE("diagonal pair isomorphism on samples") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("diag:sl2"));
    DiagonalAudit a = diagonal_isomorphism_check(p, compute_subgroups(p), 8, 3);
    CHECK(a.samples == 8);
    CHECK(a.passed == 8);
}
