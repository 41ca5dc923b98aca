#pragma once

#include "thetapairs/involution_data.hpp"
#include "thetapairs/pair_catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetapairs {

// exp(x) for a nilpotent matrix x, as a finite sum.
Matrix exp_nilpotent(const Matrix& x);

// exp(e) exp(-f) exp(e) for an sl2-triple (e, h, f): a representative of the
// reflection in the root of e.
Matrix reflection_representative(const Matrix& e, const Matrix& f);

// The Weyl element induced by g on the torus of the frame, or nullopt when g does
// not normalize that torus.
std::optional<WeylElement> induced_weyl_element(const SymmetricPair& pair, const Frame& frame, const Matrix& g);

// Span of the torus and the root vectors of the frame indexed by `roots`.
Subspace root_span(const SymmetricPair& pair, const Frame& frame, const std::vector<std::size_t>& roots,
                   bool with_torus);
std::vector<std::size_t> translate_roots(const WeylElement& w, const std::vector<std::size_t>& roots);

// dim z_g(x) == rank g.
bool is_regular_in_g(const SymmetricPair& pair, const Matrix& x);

struct GroupRepresentative {
    Matrix element;     // in G, fixed by the group involution
    WeylElement induced;
};

struct SubgroupReport {
    std::string w_type;
    std::size_t w_order = 0;
    std::size_t w_theta_order = 0; // relative to the fundamental torus
    std::size_t w0_order = 0;
    std::size_t wa_order = 0;      // theta*-fixed elements relative to the split torus
    std::string w_theta_type;
    std::string w0_type;
    std::string wa_type;           // from the restricted root system of a
    std::size_t index_w_theta_w0 = 0;
    std::size_t index_w_w_theta = 0;
    std::vector<WeylElement> wa_elements;
    // Matrix level: W0 and W_a regenerated from explicit theta-fixed group
    // elements normalizing the fundamental and the split torus respectively.
    std::optional<bool> w0_realized;
    std::optional<bool> wa_realized;
    std::vector<GroupRepresentative> w0_representatives;
    std::vector<GroupRepresentative> wa_representatives;
};

ThetaWeylData fundamental_weyl_data(const SymmetricPair& pair);
SubgroupReport compute_subgroups(const SymmetricPair& pair);

struct SplitBorelCensus {
    std::size_t examined = 0;
    std::vector<WeylElement> split;   // B_w with b_w ∩ theta(b_w) = t, in BFS order of W
    bool root_test_agrees = false;    // theta*(w Phi+) = -w Phi+ selects the same set
    bool torsor = false;              // W_a acts simply transitively
};
SplitBorelCensus enumerate_split_borels(const SymmetricPair& pair, const SubgroupReport& subgroups);

struct RegularClass {
    BorelClass borel;
    bool fast_path = false;           // no compact imaginary simple root
    std::optional<bool> semantic;     // matrix level: n_w ∩ g1 meets the regular nilpotents
    std::optional<Matrix> witness;    // a regular nilpotent in n_w ∩ g1
    std::optional<std::size_t> vanishing_simple_root; // certificate for a negative
    bool regular() const { return semantic.value_or(fast_path); }
};

struct RegularBorelCensus {
    std::vector<RegularClass> classes;
    std::size_t regular_count = 0;
    bool fast_path_agrees = true;
};

// Classes W0 w of theta-stable Borels containing the torus of `rdi`, restricted
// to the closed subsystem rdi.members (a theta-stable Levi l ⊇ t). With a frame the
// semantic test runs in l; without one only the fast path is available.
RegularBorelCensus detect_regular_classes(const RootDatumWithInvolution& rdi, const SymmetricPair* pair,
                                          const Frame* frame, std::uint64_t seed);
RegularBorelCensus detect_regular_borels(const SymmetricPair& pair, std::uint64_t seed);

struct CanonicalInvolution {
    Matrix matrix;                    // on the standard Cartan, in cartan_basis coordinates
    std::size_t choices = 0;          // theta-split Borels used
    bool choice_independent = false;
    bool conjugate_agrees = false;    // recomputed for theta^g with the split Borels found afresh
    std::size_t fixed_dim = 0;        // dim t0
    std::size_t anti_dim = 0;         // dim of the (-1)-eigenspace
};
CanonicalInvolution canonical_involution(const SymmetricPair& pair, const SplitBorelCensus& census);

} // namespace thetapairs
