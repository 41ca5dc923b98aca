#include "thetapairs/stabilizer.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/polynomial.hpp"
#include "thetapairs/slice_fibers.hpp"
#include "thetapairs/subspace.hpp"

#include <algorithm>

namespace thetapairs {

AbelianPlane centralizer_plane(const SymmetricPair& pair, const Matrix& x) {
    if (!is_regular(pair, x)) throw NotRegular("centralizer_plane", "element is not regular in g1");
    Subspace c = pair.centralizer_in(x, pair.g1());
    if (c.dim() != pair.r1()) throw InvariantViolation("centralizer_plane", "centralizer has the wrong dimension");
    AbelianPlane plane{pair.matrices(c), x};
    if (!is_abelian(plane)) throw InvariantViolation("centralizer_plane", "centralizer is not abelian");
    return plane;
}

bool is_abelian(const AbelianPlane& plane) {
    for (std::size_t i = 0; i < plane.basis.size(); ++i)
        for (std::size_t j = i + 1; j < plane.basis.size(); ++j)
            if (!commutator(plane.basis[i], plane.basis[j]).is_zero()) return false;
    return true;
}

TangentAudit tangent_space_solver(const SymmetricPair& pair, const AbelianPlane& plane) {
    const auto& y = plane.basis;
    const std::size_t r = y.size();
    TangentAudit audit;
    audit.target = pair.dim_g1() - pair.r1();

    // Complement of c inside g1.
    std::vector<Vec> span_vecs;
    for (const auto& b : y) span_vecs.push_back(pair.coords(b));
    Subspace acc = Subspace::span(span_vecs, pair.dim());
    std::vector<Matrix> w;
    for (const auto& g : pair.matrices(pair.g1())) {
        Vec v = pair.coords(g);
        if (acc.contains(v)) continue;
        span_vecs.push_back(v);
        acc = Subspace::span(span_vecs, pair.dim());
        w.push_back(g);
    }
    const std::size_t m = w.size();
    audit.unknowns = r * m;
    if (audit.unknowns == 0) return audit;

    // Unknown t(i, a) is the coefficient of w_a in T(y_i).
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<Vec> cols(r * m, Vec(pair.dim()));
            for (std::size_t a = 0; a < m; ++a) {
                cols[i * m + a] = pair.coords(commutator(w[a], y[j]));
                cols[j * m + a] = pair.coords(commutator(y[i], w[a]));
            }
            Matrix block = Matrix::from_columns(cols, pair.dim());
            for (std::size_t k = 0; k < pair.dim(); ++k) rows.push_back(block.row(k));
        }
    std::vector<Vec> solutions;
    if (rows.empty()) {
        for (std::size_t k = 0; k < r * m; ++k) {
            Vec e(r * m);
            e[k] = 1;
            solutions.push_back(e);
        }
    } else {
        solutions = kernel_basis(Matrix::from_rows(rows, r * m));
    }
    audit.solution_dim = solutions.size();

    Vec xc(r);
    if (plane.source) {
        Subspace c = Subspace::span(std::vector<Vec>(span_vecs.begin(), span_vecs.begin() + static_cast<long>(r)), pair.dim());
        std::vector<Vec> basis_cols;
        for (const auto& b : y) basis_cols.push_back(pair.coords(b));
        auto sol = solve(Matrix::from_columns(basis_cols, pair.dim()), pair.coords(*plane.source));
        if (!sol || !c.contains(pair.coords(*plane.source)))
            throw DomainError("tangent_space_solver", "source element is not in the plane");
        xc = *sol;
    } else {
        for (std::size_t i = 0; i < r; ++i) xc[i] = static_cast<long>(i + 1);
    }
    std::vector<Vec> images;
    for (const auto& t : solutions) {
        Vec e(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t i = 0; i < r; ++i) e[a] += xc[i] * t[i * m + a];
        images.push_back(e);
    }
    audit.evaluation_rank = images.empty() ? 0 : rank(Matrix::from_columns(images, m));
    return audit;
}

std::string to_string(IsogenyType t) { return t == IsogenyType::SimplyConnected ? "simply_connected" : "adjoint"; }

std::size_t StabilizerFiber::admissible_count() const {
    std::size_t n = 0;
    for (const auto& values : character_values)
        if (std::none_of(values.begin(), values.end(), [](const GaussRat& v) { return v == GaussRat(-1); })) ++n;
    return n;
}

namespace {

// Coefficient vectors c with sum c_k F_k commuting with every plane vector.
std::vector<Matrix> commutant(const std::vector<Matrix>& family, const AbelianPlane& plane) {
    std::vector<Vec> rows;
    for (const auto& y : plane.basis) {
        std::vector<Vec> cols;
        for (const auto& f : family) cols.push_back(commutator(f, y).flatten());
        Matrix block = Matrix::from_columns(cols, y.rows() * y.cols());
        for (std::size_t k = 0; k < block.rows(); ++k) rows.push_back(block.row(k));
    }
    std::vector<Matrix> out;
    for (const auto& c : kernel_basis(Matrix::from_rows(rows, family.size()))) {
        Matrix g(family.front().rows(), family.front().cols());
        for (std::size_t k = 0; k < family.size(); ++k) g += family[k] * c[k];
        out.push_back(g);
    }
    return out;
}

// Representative of the projective class: first nonzero entry 1.
Matrix projective_normal(const Matrix& g) {
    for (const auto& e : g.entries())
        if (!e.is_zero()) return g * e.inverse();
    throw DomainError("projective_normal", "zero matrix");
}

} // namespace

StabilizerFiber stabilizer_fiber(const SymmetricPair& pair, const AbelianPlane& plane, IsogenyType type) {
    const PairSpec& spec = pair.spec();
    if (plane.basis.empty()) throw DomainError("stabilizer_fiber", "empty plane");
    StabilizerFiber fiber;
    const Matrix one = Matrix::identity(2);
    const Matrix rot{{0, 1}, {-1, 0}};
    const Matrix refl{{1, 0}, {0, -1}};
    const Matrix swap{{0, 1}, {1, 0}};
    bool projective = false;

    if (spec.family == Family::SplitA && spec.n == 1 && type == IsogenyType::SimplyConnected) {
        fiber.group = "SL2";
        auto s = commutant({one, rot}, plane);
        if (s.size() == 2) {
            fiber.identity_dimension = 1;
            fiber.elements.push_back(one);
        } else if (s.size() == 1) {
            auto scale = exact_sqrt(determinant(s.front()).inverse());
            if (!scale) throw ConjugationOutsideField("stabilizer_fiber", "normalization needs a square root outside Q(i)");
            fiber.elements.push_back(s.front() * *scale);
            fiber.elements.push_back(s.front() * -*scale);
        }
    } else if (spec.family == Family::SplitA && spec.n == 1) {
        fiber.group = "PGL2";
        projective = true;
        // PO(2): rotations and reflections, up to scalars.
        for (const auto& family : {std::vector<Matrix>{one, rot}, std::vector<Matrix>{refl, swap}}) {
            auto s = commutant(family, plane);
            if (s.size() == 2) {
                if (family.front() == one) fiber.identity_dimension = 1;
                fiber.elements.push_back(projective_normal(family.front()));
            } else if (s.size() == 1 && !determinant(s.front()).is_zero()) {
                fiber.elements.push_back(projective_normal(s.front()));
            }
        }
    } else if (spec.family == Family::GlGl && spec.n == 1 && type == IsogenyType::SimplyConnected) {
        fiber.group = "GL2";
        // G0 is the diagonal torus, so the stabilizer is a connected torus.
        auto s = commutant({Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1)}, plane);
        fiber.identity_dimension = s.size();
        fiber.elements.push_back(one);
    } else {
        throw Unsupported("stabilizer_fiber", "stabilizers are computed for splitA:n=1 (SL2, PGL2) and glgl:n=1 (GL2) only");
    }

    auto same = [&](const Matrix& a, const Matrix& b) {
        return projective ? projective_normal(a) == projective_normal(b) : a == b;
    };
    auto member = [&](const Matrix& g) {
        return std::any_of(fiber.elements.begin(), fiber.elements.end(), [&](const Matrix& e) { return same(e, g); });
    };
    fiber.closed = true;
    fiber.fixes_plane = true;
    for (const auto& g : fiber.elements) {
        auto inv = inverse(g);
        if (!inv || !member(*inv)) fiber.closed = false;
        for (const auto& h : fiber.elements)
            if (!member(g * h)) fiber.closed = false;
        for (const auto& y : plane.basis)
            if (inv && !(g * y * *inv == y)) fiber.fixes_plane = false;
        if (!inv || !(pair.theta_group(g) == g || (projective && same(pair.theta_group(g), g)))) fiber.fixes_plane = false;
    }

    const Frame& f = pair.split_frame();
    for (const auto& g : fiber.elements) {
        Matrix ginv = *inverse(g);
        std::vector<GaussRat> values;
        for (const auto& x : f.root_vectors) {
            Matrix moved = g * x * ginv;
            std::optional<GaussRat> lambda;
            for (std::size_t k = 0; k < x.entries().size() && !lambda; ++k)
                if (!x.entries()[k].is_zero()) lambda = moved.entries()[k] / x.entries()[k];
            if (!lambda || !(moved == x * *lambda))
                throw InvariantViolation("stabilizer_fiber", "stabilizer element does not preserve the root lines");
            values.push_back(*lambda);
        }
        fiber.character_values.push_back(std::move(values));
    }
    return fiber;
}

namespace {

IntMatrix to_int(const Matrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GaussRat& v = m(i, j);
            if (!v.is_real() || v.re().get_den() != 1)
                throw InvariantViolation("lattice_model", "involution is not integral on the lattice");
            out(i, j) = v.re().get_num();
        }
    return out;
}

Matrix to_rational(const IntMatrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussRat(mpq_class(m(i, j)));
    return out;
}

} // namespace

TorusLatticeModel lattice_model(const IntMatrix& theta, std::vector<std::vector<long>> roots, IsogenyType type) {
    if (!(theta * theta == IntMatrix::identity(theta.rows())))
        throw InvariantViolation("lattice_model", "involution does not square to the identity");
    return {"", type, theta, std::move(roots)};
}

TorusLatticeModel lattice_model(const SymmetricPair& pair, const CanonicalInvolution& can, IsogenyType type) {
    const RootDatum& d = *pair.datum();
    const std::size_t r = d.rank();
    const bool gl = pair.spec().family == Family::GlGl;
    if (can.matrix.rows() != (gl ? pair.n() : r))
        throw Unsupported("lattice_model", "canonical involution is not on the cocharacter lattice");
    // Characters pull back along theta: the action on X* is the transpose.
    IntMatrix theta = to_int(can.matrix.transpose());
    std::vector<std::vector<long>> roots;
    TorusLatticeModel model;

    if (gl) {
        if (type != IsogenyType::SimplyConnected) throw Unsupported("lattice_model", "glgl is modelled as GL only");
        // X*(T) = Z^n with e_i dual to E_ii; simple root k is e_k - e_{k+1} within a block.
        const std::size_t n = pair.n();
        std::vector<std::vector<long>> simple(r, std::vector<long>(n, 0));
        std::size_t s = 0;
        for (auto [o, size] : pair.blocks())
            for (std::size_t k = o; k + 1 < o + size; ++k, ++s) {
                simple[s][k] = 1;
                simple[s][k + 1] = -1;
            }
        for (std::size_t k = 0; k < d.positive_count(); ++k) {
            std::vector<long> v(n, 0);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < n; ++j) v[j] += d.root(k)[i] * simple[i][j];
            roots.push_back(v);
        }
        model = lattice_model(theta, roots, type);
    } else {
        auto cm = d.cartan_matrix();
        if (type == IsogenyType::SimplyConnected) {
            // Weight coordinates: <beta, a_j^vee> = sum_i beta_i C(i, j).
            for (std::size_t k = 0; k < d.positive_count(); ++k) {
                std::vector<long> v(r, 0);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) v[j] += d.root(k)[i] * cm[i][j];
                roots.push_back(v);
            }
            model = lattice_model(theta, roots, type);
        } else {
            Matrix rm(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) rm(j, i) = cm[i][j];
            auto rinv = inverse(rm);
            if (!rinv) throw InvariantViolation("lattice_model", "singular Cartan matrix");
            IntMatrix on_roots = to_int(*rinv * to_rational(theta) * rm);
            for (std::size_t k = 0; k < d.positive_count(); ++k)
                roots.emplace_back(d.root(k).begin(), d.root(k).end());
            model = lattice_model(on_roots, roots, type);
        }
    }
    model.pair_id = pair.spec().id();
    return model;
}

std::size_t FixedTorus::component_order() const {
    mpz_class n = 1;
    for (const auto& t : torsion) n *= t;
    return n.get_ui();
}

std::vector<std::vector<mpz_class>> FixedTorus::elements() const {
    std::vector<std::vector<mpz_class>> out{{}};
    for (const auto& t : torsion) {
        std::vector<std::vector<mpz_class>> next;
        for (const auto& e : out)
            for (mpz_class k = 0; k < t; ++k) {
                auto v = e;
                v.push_back(k);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

FixedTorus torus_fixed_points(const TorusLatticeModel& model) {
    const std::size_t n = model.theta.rows();
    SmithForm s = smith_normal_form(IntMatrix::identity(n) - model.theta);
    FixedTorus out;
    out.u = s.u;
    auto inv = s.invariants();
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class d = i < inv.size() ? mpz_class(abs(inv[i])) : mpz_class(0);
        if (d == 0) {
            ++out.free_rank;
        } else if (d > 1) {
            out.torsion.push_back(d);
            out.torsion_rows.push_back(i);
        }
    }
    return out;
}

mpq_class character_phase(const FixedTorus& fixed, const std::vector<long>& chi, const std::vector<mpz_class>& element) {
    if (element.size() != fixed.torsion.size()) throw DomainError("character_phase", "element has the wrong length");
    auto y = fixed.u.apply(std::vector<mpz_class>(chi.begin(), chi.end()));
    mpq_class phase = 0;
    for (std::size_t t = 0; t < fixed.torsion.size(); ++t) {
        mpq_class term(y[fixed.torsion_rows[t]] * element[t], fixed.torsion[t]);
        term.canonicalize();
        phase += term;
    }
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), phase.get_num_mpz_t(), phase.get_den_mpz_t());
    return phase - whole;
}

Admissibility admissibility_condition(const TorusLatticeModel& model, const FixedTorus& fixed, std::size_t root,
                                      const std::vector<mpz_class>& element) {
    if (root >= model.roots.size()) throw DomainError("admissibility_condition", "root index out of range");
    return character_phase(fixed, model.roots[root], element) == mpq_class(1, 2) ? Admissibility::Excluded
                                                                                 : Admissibility::Admissible;
}

bool admissible(const TorusLatticeModel& model, const FixedTorus& fixed, const std::vector<mpz_class>& element) {
    for (std::size_t k = 0; k < model.roots.size(); ++k)
        if (admissibility_condition(model, fixed, k, element) == Admissibility::Excluded) return false;
    return true;
}

} // namespace thetapairs
