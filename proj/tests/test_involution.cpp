#include "oracles.hpp"

#include "thetapairs/involution.hpp"

#include <doctest.h>

using namespace thetapairs;

TEST_CASE("root partition covers every root") {
    for (const auto& spec : default_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        for (const RootDatumWithInvolution* rdi : {&p.fundamental(), &p.split()}) {
            RootPartition part = classify_roots(*rdi);
            CHECK(part.real.size() + part.imaginary_compact.size() + part.imaginary_noncompact.size() + part.complex.size() ==
                  rdi->datum->size());
        }
        // the fundamental torus has no real roots, the split torus no noncompact imaginary ones
        CHECK(classify_roots(p.fundamental()).real.empty());
        CHECK(classify_roots(p.split()).imaginary_noncompact.empty());
        if (p.r1() == p.rank()) CHECK(classify_roots(p.split()).real.size() == p.datum()->size());
    }
}

TEST_CASE("theta on the lattice is an involution") {
    for (const auto& spec : default_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        IntMatrix t = theta_lattice_matrix(p.fundamental());
        CHECK(t * t == IntMatrix::identity(t.rows()));
        CHECK((p.fundamental().theta_star * p.fundamental().theta_star).is_identity());
    }
}

TEST_CASE("subgroup report consistency") {
    for (const auto& spec : default_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        SubgroupReport r = compute_subgroups(p);
        CAPTURE(spec.id());
        CHECK(r.w_order == weyl_order_of_label(r.w_type));
        CHECK(r.w_order % r.w_theta_order == 0);
        CHECK(r.w_theta_order % r.w0_order == 0);
        CHECK(r.wa_elements.size() == r.wa_order);
        for (const auto& w : r.wa_elements) CHECK(w * p.split().theta_star == p.split().theta_star * w);
        if (p.matrix_level()) {
            CHECK(r.w0_realized.value_or(false));
            CHECK(r.wa_realized.value_or(false));
            for (const auto& g : r.wa_representatives) {
                CHECK(p.in_group(g.element));
                CHECK(p.theta_group(g.element) == g.element);
            }
        }
    }
}

TEST_CASE("Borel classes partition W^theta") {
    for (const auto& spec : default_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        ThetaWeylData data = theta_weyl_data(p.fundamental());
        auto classes = borel_classes(p.fundamental(), data);
        std::size_t total = 0;
        for (const auto& c : classes) {
            total += c.size;
            CHECK(c.size == data.w0.order());
        }
        CHECK(total == data.w_theta.size());
    }
}

TEST_CASE("split Borels and the canonical involution") {
    for (const auto& spec : matrix_catalog()) {
        SymmetricPair p = SymmetricPair::realize(spec);
        SubgroupReport r = compute_subgroups(p);
        SplitBorelCensus census = enumerate_split_borels(p, r);
        CAPTURE(spec.id());
        CHECK(census.split.size() == r.wa_order);
        CHECK(census.torsor);
        CanonicalInvolution can = canonical_involution(p, census);
        const std::size_t n = can.matrix.rows();
        CHECK(can.matrix * can.matrix == Matrix::identity(n));
        CHECK(can.fixed_dim + can.anti_dim == n);
        CHECK(can.choice_independent);
    }
}

TEST_CASE("regular Borel detection: sl2 has two regular classes") {
    SymmetricPair p = SymmetricPair::realize(PairSpec::parse("splitA:n=1"));
    RegularBorelCensus c = detect_regular_borels(p, 1);
    CHECK(c.regular_count == 2);
    for (const auto& cl : c.classes) {
        REQUIRE(cl.witness.has_value());
        CHECK(p.in_g1(*cl.witness));
        CHECK(is_nilpotent(*cl.witness));
        CHECK(is_regular_in_g(p, *cl.witness));
    }
}

TEST_CASE("exp of nilpotents and reflection representatives") {
    Matrix e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
    CHECK(exp_nilpotent(e) == Matrix{{1, 1}, {0, 1}});
    Matrix s = reflection_representative(e, f);
    CHECK(s * Matrix{{1, 0}, {0, -1}} * *inverse(s) == Matrix{{-1, 0}, {0, 1}});
}
