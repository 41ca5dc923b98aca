#pragma once

#include "thetapairs/root_system.hpp"
#include "thetapairs/weyl_group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace thetapairs {

enum class Compactness { Compact, Noncompact };
enum class RootKind { Real, ImaginaryCompact, ImaginaryNoncompact, Complex };

std::string to_string(RootKind k);

// A root system with an involution of the root lattice, compactness marks on the
// imaginary roots, and optionally a closed subsystem (a Levi-type subset of
// roots) together with a theta-stable positive system of that subsystem.
struct RootDatumWithInvolution {
    std::shared_ptr<const RootDatum> datum;
    WeylElement theta_star;
    std::vector<std::optional<Compactness>> compactness;
    std::vector<bool> members;              // empty means every root
    std::vector<std::size_t> positive;      // empty means the standard positive roots

    bool member(std::size_t k) const { return members.empty() || members[k]; }
    std::vector<std::size_t> member_roots() const;
    std::vector<std::size_t> positive_roots() const;
    std::vector<std::size_t> simple_roots() const; // of positive_roots()
    bool is_positive(std::size_t k) const;
    RootKind kind(std::size_t k) const;
};

// Checks theta_star is an involutive lattice automorphism preserving the form and
// that compactness marks are present exactly on imaginary roots.
void validate(const RootDatumWithInvolution& rdi, bool require_stable_positive = true);

struct RootPartition {
    std::vector<std::size_t> real, imaginary_compact, imaginary_noncompact, complex;
};
RootPartition classify_roots(const RootDatumWithInvolution& rdi);

IntMatrix theta_lattice_matrix(const RootDatumWithInvolution& rdi);

// Weyl group of the subsystem, generated by reflections in its simple roots.
WeylGroup subsystem_weyl_group(const RootDatumWithInvolution& rdi);
std::vector<std::size_t> theta_fixed_elements(const WeylGroup& w, const WeylElement& theta_star);

// Restrictions to the theta-fixed subspace: (a + theta a)/2 over the requested roots.
VectorRootSystem restricted_system(const RootDatumWithInvolution& rdi, bool compact_and_complex_only);
// Restrictions to the (-1)-eigenspace: (a - theta a)/2 over roots not fixed by theta*.
VectorRootSystem split_restricted_system(const RootDatumWithInvolution& rdi);

struct ThetaWeylData {
    WeylGroup w;
    std::vector<std::size_t> w_theta; // indices into w
    WeylGroup w0;                     // generated by elements of W^theta acting as reflections in R0
    std::string w_theta_type;
    std::string w0_type;
};
ThetaWeylData theta_weyl_data(const RootDatumWithInvolution& rdi);

struct BorelClass {
    WeylElement representative;
    std::vector<int> word;                 // canonical word of the representative in W
    std::size_t size = 0;                  // |W0 w|
    std::vector<std::size_t> simple_roots; // simple roots of w(positive system)
    bool regular = false;                  // no compact imaginary simple root
};

// Right cosets W0 w in W^theta, in the BFS order of W.
std::vector<BorelClass> borel_classes(const RootDatumWithInvolution& rdi, const ThetaWeylData& data);

} // namespace thetapairs
