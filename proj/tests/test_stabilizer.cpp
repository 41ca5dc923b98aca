#include "oracles.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/slice_fibers.hpp"
#include "thetapairs/stabilizer.hpp"

#include <doctest.h>

using namespace thetapairs;

namespace {

IntMatrix minus_identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -1;
    return m;
}

} // namespace

TEST_CASE("fixed torus of simple lattice involutions") {
    // theta = -1 on Z^r: T^theta = mu_2^r
    for (std::size_t r = 1; r <= 3; ++r) {
        FixedTorus f = torus_fixed_points(lattice_model(minus_identity(r), {}, IsogenyType::SimplyConnected));
        CHECK(f.free_rank == 0);
        CHECK(f.component_order() == (std::size_t{1} << r));
        CHECK(f.elements().size() == f.component_order());
    }
    // theta = identity: T^theta = T
    FixedTorus id = torus_fixed_points(lattice_model(IntMatrix::identity(2), {}, IsogenyType::SimplyConnected));
    CHECK(id.free_rank == 2);
    CHECK(id.component_order() == 1);
    // swap of two coordinates: the diagonal torus, connected
    FixedTorus sw = torus_fixed_points(lattice_model(IntMatrix{{0, 1}, {1, 0}}, {}, IsogenyType::SimplyConnected));
    CHECK(sw.free_rank == 1);
    CHECK(sw.torsion.empty());
}

TEST_CASE("fixed torus is invariant under unimodular change of basis") {
    std::mt19937_64 rng(41);
    const std::vector<IntMatrix> thetas{minus_identity(3), IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}},
                                        IntMatrix{{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}};
    for (const auto& t : thetas) {
        FixedTorus base = torus_fixed_points(lattice_model(t, {}, IsogenyType::SimplyConnected));
        for (int k = 0; k < 10; ++k) {
            auto [p, q] = oracle::random_unimodular(rng, 3);
            REQUIRE(p * q == IntMatrix::identity(3));
            FixedTorus moved = torus_fixed_points(lattice_model(p * t * q, {}, IsogenyType::SimplyConnected));
            CHECK(moved.free_rank == base.free_rank);
            CHECK(moved.torsion == base.torsion);
        }
    }
}

TEST_CASE("character phases are additive") {
    FixedTorus f = torus_fixed_points(lattice_model(minus_identity(2), {}, IsogenyType::SimplyConnected));
    std::vector<long> a{1, 0}, b{0, 1}, ab{1, 1}, twice{2, 0};
    for (const auto& e : f.elements()) {
        mpq_class sum = character_phase(f, a, e) + character_phase(f, b, e);
        mpq_class direct = character_phase(f, ab, e);
        mpq_class diff = sum - direct;
        CHECK(diff.get_den() == 1);
        CHECK(character_phase(f, twice, e) == 0);
    }
}

TEST_CASE("admissibility of SL2 and PGL2 torus points") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=1"));
    CanonicalInvolution can = canonical_involution(p, enumerate_split_borels(p, compute_subgroups(p)));
    auto count = [&](IsogenyType type) {
        TorusLatticeModel m = lattice_model(p, can, type);
        FixedTorus f = torus_fixed_points(m);
        std::size_t n = 0;
        for (const auto& e : f.elements()) n += admissible(m, f, e) ? 1 : 0;
        return std::pair{f.component_order(), n};
    };
    CHECK(count(IsogenyType::SimplyConnected) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(count(IsogenyType::Adjoint) == std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("stabilizer fibers of sl2 planes") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=1"));
    KWSection kw = build_kw_section(p, 1);
    AbelianPlane nil = centralizer_plane(p, kw.e);
    CHECK(is_abelian(nil));
    StabilizerFiber sl = stabilizer_fiber(p, nil, IsogenyType::SimplyConnected);
    REQUIRE(sl.elements.size() == 2);
    for (const auto& g : sl.elements) {
        CHECK(p.in_group(g));
        CHECK(p.theta_group(g) == g);
        CHECK(g * kw.e * *inverse(g) == kw.e);
    }
    CHECK((sl.elements[0] == -sl.elements[1]));
    StabilizerFiber pgl = stabilizer_fiber(p, nil, IsogenyType::Adjoint);
    CHECK(pgl.elements.size() == 1);
    CHECK(pgl.admissible_count() == 1);
    SymmetricPair big = SymmetricPair::realize(PairSpec::parse("splitA:n=2"));
    CHECK_THROWS_AS(stabilizer_fiber(big, centralizer_plane(big, build_kw_section(big, 1).e), IsogenyType::SimplyConnected),
                    Unsupported);
}

TEST_CASE("tangent solver: dimension count at random regular planes") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        SubgroupReport r = compute_subgroups(p);
        CAPTURE(spec.id());
        for (std::uint64_t seed : {3, 4}) {
            AbelianPlane plane = centralizer_plane(p, regular_a_point(p, r, seed));
            CHECK(plane.basis.size() == p.r1());
            CHECK(is_abelian(plane));
            TangentAudit t = tangent_space_solver(p, plane);
            CHECK(t.target == p.dim_g1() - p.r1());
            CHECK(t.unknowns == p.r1() * (p.dim_g1() - p.r1()));
            CHECK(t.passed());
        }
    }
}
