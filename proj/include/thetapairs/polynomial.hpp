#pragma once

#include "thetapairs/matrix.hpp"

#include <optional>
#include <vector>

namespace thetapairs {

// Univariate polynomial over Q(i), coefficients in ascending degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussRat> ascending);
    static Poly from_descending(const std::vector<GaussRat>& desc);
    static Poly monomial(const GaussRat& c, std::size_t deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    const GaussRat& lead() const { return c_.back(); }
    GaussRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat(0); }

    Poly monic() const;
    Poly derivative() const;
    GaussRat operator()(const GaussRat& x) const;
    Matrix operator()(const Matrix& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<GaussRat> c_;
};

Poly squarefree_part(const Poly& p);

// Exact square root in Q(i) when one exists.
std::optional<GaussRat> exact_sqrt(const GaussRat& z);

struct GaussianRootSearch {
    std::vector<GaussRat> roots; // distinct roots found in Q(i)
    bool splits = false;         // every root of the squarefree part lies in Q(i)
};

// Finds the distinct roots of p that lie in Q(i). Candidates come from numeric
// approximation and are confirmed exactly; a residual quadratic is solved exactly.
GaussianRootSearch gaussian_roots(const Poly& p);

} // namespace thetapairs
