#include "thetapairs/pair_catalog.hpp"

#include "thetapairs/errors.hpp"

#include <numeric>
#include <random>
#include <regex>

namespace thetapairs {

PairSpec PairSpec::parse(const std::string& text) {
    static const std::regex sized(R"((splitA|glgl):n=([0-9]{1,2}))");
    std::smatch m;
    PairSpec s;
    if (std::regex_match(text, m, sized)) {
        s.family = m[1] == "splitA" ? Family::SplitA : Family::GlGl;
        s.n = std::stoi(m[2]);
        if (s.n < 1) throw SpecParseError("pair spec '" + text + "': n must be at least 1");
        if (s.family == Family::SplitA && s.n > 5) throw SpecParseError("pair spec '" + text + "': n at most 5");
        if (s.family == Family::GlGl && s.n > 3) throw SpecParseError("pair spec '" + text + "': n at most 3");
        return s;
    }
    if (text == "diag:sl2" || text == "diag:sl3") {
        s.family = Family::Diag;
        s.n = text.back() - '0';
        return s;
    }
    if (text == "g2split") {
        s.family = Family::G2Split;
        s.n = 2;
        return s;
    }
    if (text == "e6qs") {
        s.family = Family::E6QuasiSplit;
        s.n = 6;
        return s;
    }
    throw SpecParseError("unrecognized pair spec '" + text +
                         "' (expected splitA:n=<k>, glgl:n=<k>, diag:<sl2|sl3>, g2split, e6qs)");
}

std::string PairSpec::id() const {
    switch (family) {
    case Family::SplitA: return "splitA:n=" + std::to_string(n);
    case Family::GlGl: return "glgl:n=" + std::to_string(n);
    case Family::Diag: return "diag:sl" + std::to_string(n);
    case Family::G2Split: return "g2split";
    case Family::E6QuasiSplit: return "e6qs";
    }
    return "?";
}

std::vector<PairSpec> matrix_catalog() {
    std::vector<PairSpec> out;
    for (const char* s : {"splitA:n=1", "splitA:n=2", "splitA:n=3", "glgl:n=1", "glgl:n=2", "diag:sl2", "diag:sl3"})
        out.push_back(PairSpec::parse(s));
    return out;
}

std::vector<PairSpec> default_catalog() {
    auto out = matrix_catalog();
    out.push_back(PairSpec::parse("g2split"));
    out.push_back(PairSpec::parse("e6qs"));
    return out;
}

SymmetricPair SymmetricPair::realize(const PairSpec& spec) {
    SymmetricPair p;
    p.spec_ = spec;
    if (spec.matrix_level()) p.build_matrix_model();
    else p.build_combinatorial();
    return p;
}

void SymmetricPair::build_combinatorial() {
    if (spec_.family == Family::G2Split) {
        datum_ = std::make_shared<RootDatum>(RootDatum::build("G2"));
        const RootDatum& d = *datum_;
        // Inner involution Ad(s) with s the long simple coweight at -1: a root is
        // compact iff its coefficient on the long simple root is even.
        fundamental_rdi_ = {datum_, WeylElement::identity(d.size()), {}, {}, {}};
        fundamental_rdi_.compactness.resize(d.size());
        for (std::size_t k = 0; k < d.size(); ++k)
            fundamental_rdi_.compactness[k] =
                d.root(k)[1] % 2 == 0 ? Compactness::Compact : Compactness::Noncompact;
    } else {
        datum_ = std::make_shared<RootDatum>(RootDatum::build("E6"));
        const RootDatum& d = *datum_;
        // theta = Ad(s) o rho with rho the pinned diagram automorphism and s the
        // highest coroot at -1; rho acts by +1 on fixed root spaces.
        const std::vector<int> rho{5, 1, 4, 3, 2, 0};
        RootPerm perm(d.size());
        std::size_t highest = 0;
        int height = 0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            IntVec v(6);
            for (int i = 0; i < 6; ++i) v[rho[i]] = d.root(k)[i];
            perm[k] = static_cast<std::uint16_t>(*d.index_of(v));
            int h = std::accumulate(d.root(k).begin(), d.root(k).end(), 0);
            if (h > height) {
                height = h;
                highest = k;
            }
        }
        fundamental_rdi_ = {datum_, WeylElement(perm), {}, {}, {}};
        fundamental_rdi_.compactness.resize(d.size());
        for (std::size_t k = 0; k < d.size(); ++k)
            if (perm[k] == k)
                fundamental_rdi_.compactness[k] = d.inner(d.root(k), d.root(highest)) % 2 == 0
                                                      ? Compactness::Compact
                                                      : Compactness::Noncompact;
    }
    // Both entries are split (theta is outer for E6 since -1 is not in W(E6)), so
    // theta* = -1 on a maximally split torus.
    const RootDatum& d = *datum_;
    RootPerm neg(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) neg[k] = static_cast<std::uint16_t>(d.negative(k));
    split_rdi_ = {datum_, WeylElement(neg), std::vector<std::optional<Compactness>>(d.size()), {}, {}};
    r1_ = d.rank();
    validate(fundamental_rdi_);
    validate(split_rdi_, false);
}

std::size_t SymmetricPair::root_of_unit(std::size_t i, std::size_t j) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        auto [o, s] = blocks_[b];
        if (i < o || i >= o + s) continue;
        if (j < o || j >= o + s || i == j) break;
        std::size_t base = b * (s - 1);
        IntVec v(datum_->rank(), 0);
        std::size_t li = i - o, lj = j - o;
        int sign = li < lj ? 1 : -1;
        for (std::size_t k = std::min(li, lj); k < std::max(li, lj); ++k) v[base + k] = sign;
        auto idx = datum_->index_of(v);
        if (!idx) break;
        return *idx;
    }
    throw InvariantViolation("root_of_unit", "E_ij is not a root vector of the standard torus");
}

void SymmetricPair::build_matrix_model() {
    const int n = spec_.n;
    auto E = [](std::size_t sz, std::size_t i, std::size_t j) { return Matrix::unit(sz, i, j); };
    switch (spec_.family) {
    case Family::SplitA: {
        size_ = n + 1;
        blocks_ = {{0, size_}};
        traceless_ = true;
        datum_ = std::make_shared<RootDatum>(RootDatum::build("A" + std::to_string(n)));
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = i + 1; j < size_; ++j) basis_.push_back(E(size_, i, j) - E(size_, j, i));
        dim_g0_ = basis_.size();
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = i + 1; j < size_; ++j) basis_.push_back(E(size_, i, j) + E(size_, j, i));
        for (std::size_t k = 0; k + 1 < size_; ++k) basis_.push_back(E(size_, k, k) - E(size_, k + 1, k + 1));
        for (int d = 2; d <= n + 1; ++d) degrees_.push_back(d);
        break;
    }
    case Family::GlGl: {
        size_ = 2 * n;
        blocks_ = {{0, size_}};
        traceless_ = false;
        center_dim_ = 1;
        datum_ = std::make_shared<RootDatum>(RootDatum::build("A" + std::to_string(2 * n - 1)));
        auto half = [n](std::size_t i) { return i < static_cast<std::size_t>(n); };
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                if (half(i) == half(j)) basis_.push_back(E(size_, i, j));
        dim_g0_ = basis_.size();
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                if (half(i) != half(j)) basis_.push_back(E(size_, i, j));
        for (int d = 1; d <= n; ++d) degrees_.push_back(2 * d);
        break;
    }
    case Family::Diag: {
        std::size_t m = n;
        size_ = 2 * m;
        blocks_ = {{0, m}, {m, m}};
        traceless_ = true;
        auto base = RootDatum::build("A" + std::to_string(m - 1));
        datum_ = std::make_shared<RootDatum>(RootDatum::product(base, base));
        std::vector<Matrix> sl;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) sl.push_back(E(m, i, j));
        for (std::size_t k = 0; k + 1 < m; ++k) sl.push_back(E(m, k, k) - E(m, k + 1, k + 1));
        for (const auto& x : sl) basis_.push_back(block_diagonal(x, x));
        dim_g0_ = basis_.size();
        for (const auto& x : sl) basis_.push_back(block_diagonal(x, -x));
        for (std::size_t d = 2; d <= m; ++d) degrees_.push_back(static_cast<int>(d));
        break;
    }
    default: throw InvariantViolation("realize", "not a matrix-level family");
    }

    for (auto [o, s] : blocks_) {
        if (traceless_) {
            for (std::size_t k = 0; k + 1 < s; ++k) cartan_.push_back(E(size_, o + k, o + k) - E(size_, o + k + 1, o + k + 1));
        } else {
            for (std::size_t k = 0; k < s; ++k) cartan_.push_back(E(size_, o + k, o + k));
        }
    }
    root_units_.resize(datum_->size());
    std::vector<bool> filled(datum_->size(), false);
    for (auto [o, s] : blocks_)
        for (std::size_t i = o; i < o + s; ++i)
            for (std::size_t j = o; j < o + s; ++j) {
                if (i == j) continue;
                std::size_t k = root_of_unit(i, j);
                root_units_[k] = {i, j};
                filled[k] = true;
            }
    for (bool f : filled)
        if (!f) throw InvariantViolation("realize", "root datum does not match the matrix roots");

    // Coordinates: invert the basis on a set of independent matrix entries.
    std::vector<Vec> cols;
    for (const auto& b : basis_) cols.push_back(b.flatten());
    Matrix bt = Matrix::from_rows(cols, size_ * size_);
    Echelon e = row_echelon(bt);
    if (e.pivots.size() != basis_.size()) throw InvariantViolation("realize", "basis of g is not linearly independent");
    coord_rows_ = e.pivots;
    Matrix sub(basis_.size(), basis_.size());
    for (std::size_t r = 0; r < coord_rows_.size(); ++r)
        for (std::size_t k = 0; k < basis_.size(); ++k) sub(r, k) = cols[k][coord_rows_[r]];
    coord_solver_ = *inverse(sub);

    structure_.assign(dim(), std::vector<Vec>(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) structure_[i][j] = coords(commutator(basis_[i], basis_[j]));

    Matrix ps = Matrix::identity(size_), pf = Matrix::identity(size_);
    if (spec_.family == Family::SplitA) {
        // Columns f_i = (e_i + i e_i')/2, f_i' = e_i - i e_i' with i' = N-1-i, so that
        // P^T P is the antidiagonal J and P Upper P^{-1} is theta-stable.
        for (std::size_t i = 0; i < size_ / 2; ++i) {
            std::size_t ip = size_ - 1 - i;
            pf(i, i) = GaussRat::frac(1, 2);
            pf(ip, i) = GaussRat(0, mpq_class(1, 2));
            pf(i, ip) = 1;
            pf(ip, ip) = GaussRat(0, -1);
        }
    } else if (spec_.family == Family::GlGl) {
        // Split torus: eigenvectors e_k +- e_{n+k} of the centralizer of antidiag(D; D).
        ps = Matrix(size_, size_);
        for (int k = 0; k < n; ++k) {
            ps(k, k) = 1;
            ps(n + k, k) = 1;
            ps(k, n + k) = 1;
            ps(n + k, n + k) = -1;
        }
    }
    split_frame_ = analyze_frame(*this, ps);
    fundamental_frame_ = analyze_frame(*this, pf);
    a_ = intersect(torus(split_frame_), g1());
    r1_ = a_.dim();
    fundamental_rdi_ = root_decomposition(*this);
    split_rdi_ = frame_involution(*this, split_frame_);
    validate(fundamental_rdi_);
    validate(split_rdi_, false);
    validate_matrix_model();
}

std::optional<Vec> SymmetricPair::try_coords(const Matrix& x) const {
    Vec sub(coord_rows_.size());
    const auto& ent = x.entries();
    for (std::size_t r = 0; r < coord_rows_.size(); ++r) sub[r] = ent[coord_rows_[r]];
    Vec c = coord_solver_ * sub;
    if (from_coords(c) != x) return std::nullopt;
    return c;
}

Vec SymmetricPair::coords(const Matrix& x) const {
    auto c = try_coords(x);
    if (!c) throw InvariantViolation("coords", "matrix does not lie in g");
    return *c;
}

Matrix SymmetricPair::from_coords(const Vec& c) const {
    Matrix x(size_, size_);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) x += basis_[k] * c[k];
    return x;
}

bool SymmetricPair::in_g0(const Matrix& x) const { return contains(x) && theta(x) == x; }
bool SymmetricPair::in_g1(const Matrix& x) const { return contains(x) && theta(x) == -x; }

Matrix SymmetricPair::theta(const Matrix& x) const {
    switch (spec_.family) {
    case Family::SplitA: return -x.transpose();
    case Family::GlGl: {
        Matrix y(x);
        std::size_t h = size_ / 2;
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                if ((i < h) != (j < h)) y(i, j) = -y(i, j);
        return y;
    }
    case Family::Diag: {
        std::size_t m = size_ / 2;
        Matrix y(size_, size_);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                y(i, j) = x(m + i, m + j);
                y(m + i, m + j) = x(i, j);
                y(i, m + j) = x(m + i, j);
                y(m + i, j) = x(i, m + j);
            }
        return y;
    }
    default: throw Unsupported("theta", "combinatorial entry has no matrices");
    }
}

Matrix SymmetricPair::theta_matrix() const {
    std::vector<Vec> cols;
    for (const auto& b : basis_) cols.push_back(coords(theta(b)));
    return Matrix::from_columns(cols, dim());
}

Matrix SymmetricPair::theta_group(const Matrix& g) const {
    if (spec_.family == Family::SplitA) {
        auto inv = inverse(g);
        if (!inv) throw DomainError("theta_group", "singular matrix");
        return inv->transpose();
    }
    return theta(g);
}

bool SymmetricPair::in_group(const Matrix& g) const {
    if (spec_.family == Family::GlGl) return !determinant(g).is_zero();
    for (auto [o, s] : blocks_) {
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j) {
                bool inside_i = i >= o && i < o + s, inside_j = j >= o && j < o + s;
                if (inside_i != inside_j && !g(i, j).is_zero()) return false;
            }
        Matrix b(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) b(i, j) = g(o + i, o + j);
        if (!determinant(b).is_one()) return false;
    }
    return true;
}

Matrix SymmetricPair::ad(const Matrix& x) const {
    std::vector<Vec> cols;
    cols.reserve(dim());
    for (const auto& b : basis_) cols.push_back(coords(commutator(x, b)));
    return Matrix::from_columns(cols, dim());
}

Subspace SymmetricPair::g0() const {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < dim_g0_; ++k) {
        Vec v(dim());
        v[k] = 1;
        vs.push_back(v);
    }
    return Subspace::span(vs, dim());
}

Subspace SymmetricPair::g1() const {
    std::vector<Vec> vs;
    for (std::size_t k = dim_g0_; k < dim(); ++k) {
        Vec v(dim());
        v[k] = 1;
        vs.push_back(v);
    }
    return Subspace::span(vs, dim());
}

Subspace SymmetricPair::span(const std::vector<Matrix>& ms) const {
    std::vector<Vec> vs;
    for (const auto& m : ms) vs.push_back(coords(m));
    return Subspace::span(vs, dim());
}

std::vector<Matrix> SymmetricPair::matrices(const Subspace& s) const {
    std::vector<Matrix> out;
    for (const auto& v : s.basis()) out.push_back(from_coords(v));
    return out;
}

Subspace SymmetricPair::centralizer(const Matrix& x) const {
    return Subspace::span(kernel_basis(ad(x)), dim());
}

Subspace SymmetricPair::centralizer_in(const Matrix& x, const Subspace& s) const { return kernel_on(ad(x), s); }

Subspace SymmetricPair::torus(const Frame& f) const { return span(f.torus_basis); }

void SymmetricPair::validate_matrix_model() const {
    const std::size_t d = dim();
    Matrix th = theta_matrix();
    if (!(th * th == Matrix::identity(d))) throw InvariantViolation("realize", "theta^2 != id");
    for (std::size_t k = 0; k < d; ++k) {
        GaussRat expect = k < dim_g0_ ? GaussRat(1) : GaussRat(-1);
        for (std::size_t j = 0; j < d; ++j)
            if (th(j, k) != (j == k ? expect : GaussRat(0)))
                throw InvariantViolation("realize", "theta is not +1 on g0 and -1 on g1");
    }
    // Antisymmetry, Jacobi and the automorphism property on basis elements.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (!vec_is_zero(vec_add(structure_[i][j], structure_[j][i])))
                throw InvariantViolation("realize", "bracket not antisymmetric");
            GaussRat sij = (i < dim_g0_) == (j < dim_g0_) ? GaussRat(1) : GaussRat(-1);
            for (std::size_t m = 0; m < d; ++m) {
                GaussRat sm = m < dim_g0_ ? GaussRat(1) : GaussRat(-1);
                if (sm * structure_[i][j][m] != sij * structure_[i][j][m])
                    throw InvariantViolation("realize", "theta is not a Lie algebra automorphism");
            }
        }
    auto bracket_with = [&](std::size_t i, const Vec& v) {
        Vec out(d);
        for (std::size_t l = 0; l < d; ++l)
            if (!v[l].is_zero())
                for (std::size_t m = 0; m < d; ++m)
                    if (!structure_[i][l][m].is_zero()) out[m] += v[l] * structure_[i][l][m];
        return out;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Vec s = bracket_with(i, structure_[j][k]);
                s = vec_add(s, bracket_with(j, structure_[k][i]));
                s = vec_add(s, bracket_with(k, structure_[i][j]));
                if (!vec_is_zero(s)) throw InvariantViolation("realize", "Jacobi identity fails");
            }
    auto abasis = matrices(a_);
    for (const auto& x : abasis)
        for (const auto& y : abasis)
            if (!commutator(x, y).is_zero()) throw InvariantViolation("realize", "Cartan subspace is not abelian");
    Subspace t = torus(split_frame_);
    Subspace t0 = intersect(t, g0());
    if (t0.dim() + r1_ != rank()) throw InvariantViolation("realize", "dim t0 + r1 != rank g");
    if (t.dim() != rank()) throw InvariantViolation("realize", "split torus has wrong dimension");
    // Quasi-split witness: a generic element of a is regular in g.
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> dist(-9, 9);
    bool witnessed = false;
    for (int attempt = 0; attempt < 8 && !witnessed; ++attempt) {
        Matrix x(size_, size_);
        for (const auto& b : abasis) x += b * GaussRat(dist(rng));
        witnessed = centralizer(x).dim() == rank();
    }
    if (!witnessed) throw InvariantViolation("realize", "no regular element found in a (pair not quasi-split)");
}

} // namespace thetapairs
