#include "oracles.hpp"

#include "thetapairs/root_system.hpp"
#include "thetapairs/weyl_group.hpp"

#include <doctest.h>

using namespace thetapairs;

TEST_CASE("root counts by type") {
    const std::vector<std::pair<std::string, std::size_t>> counts{
        {"A1", 2}, {"A2", 6}, {"A3", 12}, {"B2", 8}, {"B4", 32}, {"C4", 32}, {"D4", 24}, {"G2", 12}, {"F4", 48}, {"E6", 72}};
    for (const auto& [label, n] : counts) {
        RootDatum d = RootDatum::build(label);
        CHECK_MESSAGE(d.size() == n, label);
        CHECK(d.positive_count() * 2 == n);
    }
}

TEST_CASE("root system closure properties") {
    for (std::string label : {"A3", "B4", "C4", "G2", "F4"}) {
        RootDatum d = RootDatum::build(label);
        for (std::size_t k = 0; k < d.size(); ++k) {
            const IntVec& a = d.root(k);
            // negation is a root, reflections permute roots, positivity is sign-coherent
            CHECK(d.index_of(d.reflect(k, a)) == d.negative(k));
            CHECK(d.positive(k) != d.positive(d.negative(k)));
            bool nonneg = std::all_of(a.begin(), a.end(), [](int c) { return c >= 0; });
            bool nonpos = std::all_of(a.begin(), a.end(), [](int c) { return c <= 0; });
            CHECK((nonneg || nonpos));
            CHECK(d.pairing(a, k) == 2);
            for (std::size_t j = 0; j < d.rank(); ++j) CHECK(d.index_of(d.reflect(d.simple_index(j), a)).has_value());
        }
    }
}

TEST_CASE("Weyl group orders against integer reflection closure") {
    // Hand-written Cartan matrices, entry (i, j) = <a_i, a_j^vee>.
    const std::vector<std::pair<std::string, std::vector<std::vector<int>>>> cartans{
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
    };
    CHECK(oracle::reflection_group_order(cartans[0].second) == 24);
    CHECK(oracle::reflection_group_order(cartans[1].second) == 48);
    CHECK(oracle::reflection_group_order(cartans[2].second) == 12);
    for (std::string label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        RootDatum d = RootDatum::build(label);
        std::size_t expected = oracle::reflection_group_order(d.cartan_matrix());
        CHECK_MESSAGE(WeylGroup::enumerate(d).order() == expected, label);
        CHECK(weyl_order_of_label(label) == expected);
    }
}

TEST_CASE("Weyl group elements: pairing, inverses and the longest element") {
    RootDatum d = RootDatum::build("B3");
    WeylGroup w = WeylGroup::enumerate(d);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < w.order(); ++i) {
        const WeylElement& e = w.element(i);
        CHECK(preserves_pairing(d, e));
        CHECK((e * e.inverse()).is_identity());
        CHECK(w.contains(e.inverse()));
        CHECK(w.word(i).size() == length(d, e));
        longest = std::max(longest, length(d, e));
    }
    CHECK(longest == d.positive_count());
}

TEST_CASE("Weyl element acting on the lattice matches the root permutation") {
    RootDatum d = RootDatum::build("G2");
    WeylGroup w = WeylGroup::enumerate(d);
    for (const auto& e : w.elements()) {
        IntMatrix m = lattice_action(d, e);
        for (std::size_t k = 0; k < d.size(); ++k) {
            std::vector<mpz_class> v(d.root(k).begin(), d.root(k).end());
            auto image = m.apply(v);
            IntVec iv;
            for (const auto& c : image) iv.push_back(static_cast<int>(c.get_si()));
            CHECK(d.index_of(iv) == e(k));
        }
    }
}

TEST_CASE("type recognition") {
    auto as_vector_system = [](const RootDatum& d) {
        VectorRootSystem s;
        for (const auto& r : d.roots()) s.roots.emplace_back(r.begin(), r.end());
        for (const auto& row : d.gram()) s.gram.emplace_back(row.begin(), row.end());
        return s;
    };
    for (std::string label : {"A2", "B3", "C3", "D4", "G2", "F4"})
        CHECK(recognize_type(as_vector_system(RootDatum::build(label))) == label);
    RootDatum prod = RootDatum::product(RootDatum::build("A1"), RootDatum::build("A1"));
    CHECK(recognize_type(as_vector_system(prod)) == "A1xA1");
    CHECK(weyl_order_of_label("A1xA1") == 4);
}

TEST_CASE("bounded enumeration") {
    CHECK_THROWS(WeylGroup::enumerate(RootDatum::build("E6"), 1000));
}
