#include "thetapairs/subspace.hpp"

#include <stdexcept>

namespace thetapairs {

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Echelon e = row_echelon(Matrix::from_rows(vectors, ambient));
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return span(vs, ambient);
}

std::vector<Vec> Subspace::basis() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
    Vec c(dim());
    Vec r(v);
    for (std::size_t i = 0; i < dim(); ++i) {
        c[i] = r[pivots_[i]];
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) r[j] -= c[i] * basis_(i, j);
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::vector<Vec> Subspace::annihilator() const {
    if (dim() == 0) return Subspace::whole(ambient_).basis();
    return kernel_basis(basis_);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    auto vs = a.basis();
    for (auto& v : b.basis()) vs.push_back(std::move(v));
    return Subspace::span(vs, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    auto rows = a.annihilator();
    for (auto& v : b.annihilator()) rows.push_back(std::move(v));
    if (rows.empty()) return Subspace::whole(a.ambient());
    return Subspace::span(kernel_basis(Matrix::from_rows(rows, a.ambient())), a.ambient());
}

Subspace image(const Matrix& map, const Subspace& s) {
    std::vector<Vec> vs;
    for (const auto& v : s.basis()) vs.push_back(map * v);
    return Subspace::span(vs, map.rows());
}

Subspace kernel_on(const Matrix& map, const Subspace& s) {
    auto b = s.basis();
    if (b.empty()) return Subspace(s.ambient());
    std::vector<Vec> images;
    for (const auto& v : b) images.push_back(map * v);
    Matrix m = Matrix::from_columns(images, map.rows());
    std::vector<Vec> out;
    for (const auto& k : kernel_basis(m)) {
        Vec v(s.ambient());
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!k[i].is_zero()) v = vec_add(v, vec_scale(b[i], k[i]));
        out.push_back(std::move(v));
    }
    return Subspace::span(out, s.ambient());
}

std::vector<Vec> complement_basis(const Subspace& s) {
    std::vector<Vec> out;
    Subspace cur = s;
    for (std::size_t i = 0; i < s.ambient() && cur.dim() < s.ambient(); ++i) {
        Vec e(s.ambient());
        e[i] = 1;
        if (cur.contains(e)) continue;
        out.push_back(e);
        cur = cur + Subspace::span({e}, s.ambient());
    }
    return out;
}

} // namespace thetapairs
