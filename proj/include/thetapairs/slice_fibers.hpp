#pragma once

#include "thetapairs/involution.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace thetapairs {

// x ∈ g1 with its Jordan parts, both checked to lie in g1.
struct ElementOfG1 {
    Matrix x;
    Matrix ss;
    Matrix nil;
};
ElementOfG1 jordan_in_g1(const SymmetricPair& pair, const Matrix& x);

// Invariant coordinates on g1//G0, ordered by degree (pair.invariant_degrees()).
Vec chi1(const SymmetricPair& pair, const Matrix& x);
bool is_regular(const SymmetricPair& pair, const Matrix& x);

// Points of a: sum of c_k times the k-th basis vector of a.
Matrix a_point(const SymmetricPair& pair, const Vec& c);
// Diagonal coordinates of x ∈ Lie(split torus).
Vec split_coordinates(const SymmetricPair& pair, const Matrix& x);
// First regular point of a with trivial W_a-stabilizer in a fixed search order.
Matrix regular_a_point(const SymmetricPair& pair, const SubgroupReport& subgroups, std::uint64_t seed);
// First nonzero non-regular point of a, or the first nonzero point when r1 = 1.
Matrix degenerate_a_point(const SymmetricPair& pair);
std::size_t wa_stabilizer_order(const SymmetricPair& pair, const SubgroupReport& subgroups, const Matrix& x);

// The centralizer pair (l, theta) of a point of a, with a theta-stable torus that is
// fundamental for l (no real roots of l), obtained from the split torus by Cayley
// transforms inside l.
struct CentralizerPair {
    Matrix point;
    Subspace l;
    Frame frame;
    RootDatumWithInvolution rdi; // members: roots of l; positive: theta-stable
    RegularBorelCensus census;
    std::size_t cayley_steps = 0;
};
CentralizerPair centralizer_pair(const SymmetricPair& pair, const Matrix& point, std::uint64_t seed);
// A regular nilpotent of l ∩ g1 built from the first regular class.
Matrix regular_nilpotent(const SymmetricPair& pair, const CentralizerPair& cp);

struct NormalTriple {
    Matrix e, h, f; // h ∈ l ∩ g0, e, f ∈ l ∩ g1
};
NormalTriple normal_triple(const SymmetricPair& pair, const Matrix& e, const Subspace& l);

struct KWSection {
    Matrix e, h, f;
    std::vector<Matrix> v; // basis of z_{g1}(f), v[k] of ad(h)-weight -2(d_k - 1)
};
KWSection build_kw_section(const SymmetricPair& pair, std::uint64_t seed);
Matrix slice_point(const KWSection& kw, const Vec& t);
// The unique t with chi1(e + sum t_k v_k) = target, solved degree by degree.
Vec slice_solve(const SymmetricPair& pair, const KWSection& kw, const Vec& target);

struct SliceAudit {
    std::size_t samples = 0;
    std::size_t regular_samples = 0;
    bool injective = false;
    std::size_t targets = 0;
    std::size_t round_trips = 0;
    bool triangular = false;
    bool triple_ok = false;
    bool kappa_zero_is_e = false;    // chi1(e) = 0 and slice_solve(0) = 0
    bool e_regular_nilpotent = false;
    bool passed() const {
        return regular_samples == samples && injective && round_trips == targets && triangular && triple_ok &&
               kappa_zero_is_e && e_regular_nilpotent;
    }
};
SliceAudit audit_kw_section(const SymmetricPair& pair, const KWSection& kw, std::size_t samples,
                            std::size_t targets, std::uint64_t seed);

// Invariance checks for the chosen chi1 coordinates: W_a-translates of points of a
// and exp(ad n) conjugates by nilpotents n ∈ g0.
bool chi1_wa_invariant(const SymmetricPair& pair, const SubgroupReport& subgroups, std::size_t points,
                       std::uint64_t seed);
bool chi1_g0_invariant(const SymmetricPair& pair, std::size_t conjugations, std::uint64_t seed);

struct FiberReport {
    ElementOfG1 base;
    std::vector<Subspace> borels; // Borels of the distinguished component over x
    std::size_t wa_order = 0;
    std::size_t stabilizer_order = 0;
    std::size_t expected() const { return wa_order / stabilizer_order; }
    bool borels_valid = false;
    std::optional<bool> single_g0_orbit; // explicit conjugators, regular semisimple base only
};
FiberReport fiber_over_regular(const SymmetricPair& pair, const Matrix& x, const SubgroupReport& subgroups);

struct ComponentCensus {
    std::size_t points = 0;
    std::vector<std::size_t> group_sizes;
    bool unique_membership = false;
};
ComponentCensus component_census(const SymmetricPair& pair, const Matrix& x);

struct ComponentDimension {
    WeylElement representative;
    std::size_t dim_g0 = 0, dim_b0 = 0, dim_n1 = 0;
    std::size_t value() const { return dim_g0 - dim_b0 + dim_n1; }
};
struct DimensionAudit {
    Matrix point;
    std::vector<ComponentDimension> components;
    std::size_t target = 0; // dim g1 - r1
    bool passed() const {
        if (components.empty()) return false;
        for (const auto& c : components)
            if (c.value() != target) return false;
        return true;
    }
};
DimensionAudit fiber_component_dimensions(const SymmetricPair& pair, const Matrix& point, std::uint64_t seed);

struct DiagonalAudit {
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::size_t fiber_points = 0;
};
DiagonalAudit diagonal_isomorphism_check(const SymmetricPair& pair, const SubgroupReport& subgroups,
                                         std::size_t samples, std::uint64_t seed);

} // namespace thetapairs
