#include "thetapairs/errors.hpp"
#include "thetapairs/pair_catalog.hpp"

namespace thetapairs {

Frame analyze_frame(const SymmetricPair& pair, const Matrix& conj) {
    Frame f;
    f.conj = conj;
    auto inv = inverse(conj);
    if (!inv) throw InvariantViolation("analyze_frame", "frame matrix is singular");
    f.conj_inv = *inv;
    const RootDatum& d = *pair.datum();
    auto ad_p = [&](const Matrix& x) { return f.conj * x * f.conj_inv; };
    for (const auto& h : pair.cartan_basis()) f.torus_basis.push_back(ad_p(h));
    for (std::size_t k = 0; k < d.size(); ++k) {
        auto [i, j] = pair.root_unit(k);
        f.root_vectors.push_back(ad_p(Matrix::unit(pair.n(), i, j)));
    }

    Subspace t = pair.span(f.torus_basis);
    for (const auto& h : f.torus_basis)
        if (!t.contains(pair.coords(pair.theta(h))))
            throw InvariantViolation("analyze_frame", "torus is not theta-stable");

    RootPerm perm(d.size());
    f.theta_scalars.resize(d.size());
    f.compactness.resize(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        Matrix y = f.conj_inv * pair.theta(f.root_vectors[k]) * f.conj;
        std::optional<std::size_t> target;
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) {
                if (y(r, c).is_zero()) continue;
                if (target || r == c) throw InvariantViolation("analyze_frame", "theta does not permute root spaces");
                target = pair.root_of_unit(r, c);
                f.theta_scalars[k] = y(r, c);
            }
        if (!target) throw InvariantViolation("analyze_frame", "theta kills a root vector");
        perm[k] = static_cast<std::uint16_t>(*target);
        if (*target == k) {
            if (f.theta_scalars[k].is_one()) f.compactness[k] = Compactness::Compact;
            else if (f.theta_scalars[k] == GaussRat(-1)) f.compactness[k] = Compactness::Noncompact;
            else throw InvariantViolation("analyze_frame", "imaginary root with theta scalar other than +-1");
        }
    }
    f.theta_star = WeylElement(perm);
    return f;
}

RootDatumWithInvolution frame_involution(const SymmetricPair& pair, const Frame& frame) {
    return {pair.datum(), frame.theta_star, frame.compactness, {}, {}};
}

RootDatumWithInvolution root_decomposition(const SymmetricPair& pair) {
    const Frame& f = pair.fundamental_frame();
    const RootDatum& d = *pair.datum();
    std::vector<Matrix> ads;
    for (const auto& h : f.torus_basis) ads.push_back(pair.ad(h));
    // Weight of each root vector on the torus basis, and the dimension of the full
    // simultaneous eigenspace of that weight.
    for (std::size_t k = 0; k < d.size(); ++k) {
        Vec x = pair.coords(f.root_vectors[k]);
        std::vector<Vec> rows;
        for (const auto& a : ads) {
            Vec ax = a * x;
            std::optional<GaussRat> lambda;
            for (std::size_t m = 0; m < x.size(); ++m)
                if (!x[m].is_zero()) {
                    lambda = ax[m] / x[m];
                    break;
                }
            if (!vec_is_zero(vec_sub(ax, vec_scale(x, *lambda))))
                throw InvariantViolation("root_decomposition", "root vector is not a torus eigenvector");
            Matrix shifted = a - Matrix::identity(a.rows()) * *lambda;
            for (std::size_t r = 0; r < shifted.rows(); ++r) rows.push_back(shifted.row(r));
        }
        if (kernel_basis(Matrix::from_rows(rows, pair.dim())).size() != 1)
            throw InvariantViolation("root_decomposition", "root space is not one-dimensional");
    }
    return frame_involution(pair, f);
}

std::vector<std::size_t> coordinate_permutation(const SymmetricPair& pair, const WeylElement& w) {
    std::vector<std::size_t> pi(pair.n());
    for (auto [o, s] : pair.blocks()) {
        for (std::size_t i = o; i < o + s; ++i) {
            std::size_t j = i == o ? o + 1 : o;
            pi[i] = pair.root_unit(w(pair.root_of_unit(i, j))).first;
        }
    }
    return pi;
}

Matrix permutation_matrix(const std::vector<std::size_t>& pi) {
    Matrix m(pi.size(), pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) m(pi[i], i) = 1;
    return m;
}

} // namespace thetapairs
