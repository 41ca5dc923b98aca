#pragma once

#include "thetapairs/int_matrix.hpp"
#include "thetapairs/involution.hpp"
#include "thetapairs/matrix.hpp"
#include "thetapairs/pair_catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetapairs {

// r1 commuting vectors of g1.
struct AbelianPlane {
    std::vector<Matrix> basis;
    std::optional<Matrix> source; // x with plane = z_{g1}(x), when known
};

AbelianPlane centralizer_plane(const SymmetricPair& pair, const Matrix& x);
bool is_abelian(const AbelianPlane& plane);

// Maps T: c -> g1/c with [T(y_i), y_j] + [y_i, T(y_j)] = 0, and the evaluation T -> T(x).
struct TangentAudit {
    std::size_t unknowns = 0;
    std::size_t solution_dim = 0;
    std::size_t target = 0; // dim g1 - r1
    std::size_t evaluation_rank = 0;
    bool evaluation_bijective() const { return solution_dim == target && evaluation_rank == target; }
    bool passed() const { return evaluation_bijective(); }
};
TangentAudit tangent_space_solver(const SymmetricPair& pair, const AbelianPlane& plane);

enum class IsogenyType { SimplyConnected, Adjoint };
std::string to_string(IsogenyType t);

// Elements of G0 fixing a plane pointwise. Finite part as component representatives;
// a positive identity_dimension means a torus of that dimension on top.
struct StabilizerFiber {
    std::string group;
    std::vector<Matrix> elements;
    std::size_t identity_dimension = 0;
    std::vector<std::vector<GaussRat>> character_values; // [element][root of the split frame]
    bool closed = false;
    bool fixes_plane = false;
    std::size_t admissible_count() const;
};
// splitA:n=1 as SL2 or PGL2, glgl:n=1 as GL2 (simply connected derived group only).
StabilizerFiber stabilizer_fiber(const SymmetricPair& pair, const AbelianPlane& plane, IsogenyType type);

struct TorusLatticeModel {
    std::string pair_id;
    IsogenyType type = IsogenyType::SimplyConnected;
    IntMatrix theta;                     // on X*(T), acting on coordinate columns
    std::vector<std::vector<long>> roots; // positive roots in X*(T) coordinates
};
TorusLatticeModel lattice_model(const SymmetricPair& pair, const CanonicalInvolution& can, IsogenyType type);
TorusLatticeModel lattice_model(const IntMatrix& theta, std::vector<std::vector<long>> roots, IsogenyType type);

// T^theta with characters X*/(1 - theta)X*.
struct FixedTorus {
    std::size_t free_rank = 0;            // dim of the identity component
    std::vector<mpz_class> torsion;         // invariant factors > 1
    std::vector<std::size_t> torsion_rows; // their rows in the Smith form
    IntMatrix u;                            // row change of the Smith form
    std::size_t component_order() const;
    // Component representatives as residues k_i mod torsion[i].
    std::vector<std::vector<mpz_class>> elements() const;
};
FixedTorus torus_fixed_points(const TorusLatticeModel& model);

// Value of the character chi on element k is exp(2 pi i sum (U chi)_i k_i / d_i).
// Returns the exponent sum mod 1.
mpq_class character_phase(const FixedTorus& fixed, const std::vector<long>& chi, const std::vector<mpz_class>& element);
enum class Admissibility { Admissible, Excluded };
// (C_alpha): excluded iff alpha takes the value -1.
Admissibility admissibility_condition(const TorusLatticeModel& model, const FixedTorus& fixed, std::size_t root,
                                      const std::vector<mpz_class>& element);
// Admissible for every root.
bool admissible(const TorusLatticeModel& model, const FixedTorus& fixed, const std::vector<mpz_class>& element);

} // namespace thetapairs
