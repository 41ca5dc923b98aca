#pragma once

#include "thetapairs/matrix.hpp"

namespace thetapairs {

// A linear subspace of Q(i)^n, stored as its reduced row echelon basis so that
// equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::vector<Vec> basis() const;
    const Matrix& echelon() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Vectors annihilating the subspace under the bilinear pairing.
    std::vector<Vec> annihilator() const;
    // Coordinates of v in basis(), if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Image of a subspace under a linear map given as a matrix acting on column vectors.
Subspace image(const Matrix& map, const Subspace& s);
// Vectors v of s with map*v = 0.
Subspace kernel_on(const Matrix& map, const Subspace& s);
// Greedy completion of basis(s) by standard basis vectors of the ambient space.
std::vector<Vec> complement_basis(const Subspace& s);

} // namespace thetapairs
