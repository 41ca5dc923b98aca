#pragma once

#include "thetapairs/involution_data.hpp"
#include "thetapairs/matrix.hpp"
#include "thetapairs/subspace.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace thetapairs {

enum class Family { SplitA, GlGl, Diag, G2Split, E6QuasiSplit };

struct PairSpec {
    Family family = Family::SplitA;
    int n = 1; // splitA: rank of sl(n+1); glgl: gl(2n); diag: base sl(n)

    // `splitA:n=<k>`, `glgl:n=<k>`, `diag:<sl2|sl3>`, `g2split`, `e6qs`
    static PairSpec parse(const std::string& text);
    std::string id() const;
    bool matrix_level() const { return family == Family::SplitA || family == Family::GlGl || family == Family::Diag; }
};

// A maximal torus P * diag * P^{-1} of the matrix realization, with its root vectors
// and the involution data read off from theta.
struct Frame {
    Matrix conj;
    Matrix conj_inv;
    std::vector<Matrix> root_vectors; // P E_ij P^{-1}, indexed like the root datum
    std::vector<Matrix> torus_basis;  // P H_k P^{-1}
    WeylElement theta_star;
    std::vector<std::optional<Compactness>> compactness;
    std::vector<GaussRat> theta_scalars; // theta(X_a) = c_a X_{theta* a}
};

class SymmetricPair {
public:
    static SymmetricPair realize(const PairSpec& spec);

    const PairSpec& spec() const { return spec_; }
    std::string id() const { return spec_.id(); }
    bool matrix_level() const { return spec_.matrix_level(); }
    std::shared_ptr<const RootDatum> datum() const { return datum_; }
    std::size_t rank() const { return datum_->rank() + center_dim_; }
    std::size_t r1() const { return r1_; }

    // Root-level data relative to the pinned fundamental (theta-stable) torus and
    // to the maximally split torus.
    const RootDatumWithInvolution& fundamental() const { return fundamental_rdi_; }
    const RootDatumWithInvolution& split() const { return split_rdi_; }

    // Matrix realization. All of the following require matrix_level().
    std::size_t n() const { return size_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t dim_g0() const { return dim_g0_; }
    std::size_t dim_g1() const { return basis_.size() - dim_g0_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    const Matrix& basis(std::size_t k) const { return basis_[k]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& blocks() const { return blocks_; }
    bool traceless() const { return traceless_; }
    const std::pair<std::size_t, std::size_t>& root_unit(std::size_t k) const { return root_units_[k]; }
    std::size_t root_of_unit(std::size_t i, std::size_t j) const;

    std::optional<Vec> try_coords(const Matrix& x) const;
    Vec coords(const Matrix& x) const;
    Matrix from_coords(const Vec& c) const;
    bool contains(const Matrix& x) const { return try_coords(x).has_value(); }
    bool in_g0(const Matrix& x) const;
    bool in_g1(const Matrix& x) const;
    Matrix project_g0(const Matrix& x) const { return (x + theta(x)) * GaussRat::frac(1, 2); }
    Matrix project_g1(const Matrix& x) const { return (x - theta(x)) * GaussRat::frac(1, 2); }

    Matrix theta(const Matrix& x) const;
    Matrix theta_matrix() const; // in the basis
    Matrix theta_group(const Matrix& g) const;
    bool in_group(const Matrix& g) const;
    Matrix ad(const Matrix& x) const;
    const std::vector<std::vector<Vec>>& structure_constants() const { return structure_; }

    Subspace g0() const;
    Subspace g1() const;
    Subspace span(const std::vector<Matrix>& ms) const;
    std::vector<Matrix> matrices(const Subspace& s) const;
    Subspace centralizer(const Matrix& x) const;                        // z_g(x)
    Subspace centralizer_in(const Matrix& x, const Subspace& s) const; // z_g(x) ∩ s

    // Standard diagonal Cartan basis (universal Cartan coordinates).
    const std::vector<Matrix>& cartan_basis() const { return cartan_; }
    Matrix diag_element(const Vec& d) const { return Matrix::diagonal(d); }

    const Frame& split_frame() const { return split_frame_; }
    const Frame& fundamental_frame() const { return fundamental_frame_; }
    const Subspace& cartan_subspace() const { return a_; } // a, inside g1
    std::vector<Matrix> cartan_subspace_basis() const { return matrices(a_); }
    Subspace torus(const Frame& f) const;

    // Invariant degrees of the chosen chi1 coordinates, in order.
    const std::vector<int>& invariant_degrees() const { return degrees_; }

private:
    PairSpec spec_;
    std::shared_ptr<const RootDatum> datum_;
    std::size_t center_dim_ = 0;
    std::size_t r1_ = 0;
    RootDatumWithInvolution fundamental_rdi_;
    RootDatumWithInvolution split_rdi_;

    std::size_t size_ = 0;
    bool traceless_ = true;
    std::vector<std::pair<std::size_t, std::size_t>> blocks_;
    std::vector<std::pair<std::size_t, std::size_t>> root_units_;
    std::vector<Matrix> basis_;
    std::size_t dim_g0_ = 0;
    std::vector<std::size_t> coord_rows_;
    Matrix coord_solver_;
    std::vector<std::vector<Vec>> structure_;
    std::vector<Matrix> cartan_;
    Frame split_frame_;
    Frame fundamental_frame_;
    Subspace a_;
    std::vector<int> degrees_;

    void build_matrix_model();
    void build_combinatorial();
    void validate_matrix_model() const;
};

// Reads theta*, compactness and root vectors off the torus conj * diag * conj^{-1};
// throws InvariantViolation when the torus is not theta-stable or a root space is
// not one-dimensional.
Frame analyze_frame(const SymmetricPair& pair, const Matrix& conj);
RootDatumWithInvolution frame_involution(const SymmetricPair& pair, const Frame& frame);

// Simultaneous eigenspace decomposition of g under the pinned fundamental torus.
RootDatumWithInvolution root_decomposition(const SymmetricPair& pair);

// Permutation of diagonal coordinates induced by a Weyl element (type A blocks).
std::vector<std::size_t> coordinate_permutation(const SymmetricPair& pair, const WeylElement& w);
Matrix permutation_matrix(const std::vector<std::size_t>& pi); // e_i -> e_{pi(i)}

// Catalog used by the verification suites and the acceptance run.
std::vector<PairSpec> default_catalog();
std::vector<PairSpec> matrix_catalog();

} // namespace thetapairs
