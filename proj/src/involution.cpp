#include "thetapairs/involution.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace thetapairs {

Matrix exp_nilpotent(const Matrix& x) {
    const std::size_t n = x.rows();
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * x * GaussRat::frac(1, static_cast<long>(k));
        if (term.is_zero()) return sum;
        sum += term;
    }
    throw InvariantViolation("exp_nilpotent", "matrix is not nilpotent");
}

Matrix reflection_representative(const Matrix& e, const Matrix& f) {
    Matrix a = exp_nilpotent(e);
    return a * exp_nilpotent(-f) * a;
}

std::optional<WeylElement> induced_weyl_element(const SymmetricPair& pair, const Frame& frame, const Matrix& g) {
    Matrix m = frame.conj_inv * g * frame.conj;
    const std::size_t n = m.rows();
    std::vector<std::size_t> pi(n, n);
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            if (pi[c] != n || hit[r]) return std::nullopt;
            pi[c] = r;
            hit[r] = true;
        }
    for (auto p : pi)
        if (p == n) return std::nullopt;
    const RootDatum& d = *pair.datum();
    RootPerm perm(d.size());
    try {
        for (std::size_t k = 0; k < d.size(); ++k) {
            auto [i, j] = pair.root_unit(k);
            perm[k] = static_cast<std::uint16_t>(pair.root_of_unit(pi[i], pi[j]));
        }
    } catch (const InvariantViolation&) {
        return std::nullopt;
    }
    return WeylElement(perm);
}

Subspace root_span(const SymmetricPair& pair, const Frame& frame, const std::vector<std::size_t>& roots,
                   bool with_torus) {
    std::vector<Matrix> ms;
    if (with_torus) ms = frame.torus_basis;
    for (auto k : roots) ms.push_back(frame.root_vectors[k]);
    if (ms.empty()) return Subspace(pair.dim());
    return pair.span(ms);
}

std::vector<std::size_t> translate_roots(const WeylElement& w, const std::vector<std::size_t>& roots) {
    std::vector<std::size_t> out;
    out.reserve(roots.size());
    for (auto k : roots) out.push_back(w(k));
    return out;
}

bool is_regular_in_g(const SymmetricPair& pair, const Matrix& x) { return pair.centralizer(x).dim() == pair.rank(); }

namespace {

// The scalar lambda with [h, e] = lambda e.
std::optional<GaussRat> eigen_ratio(const Matrix& h, const Matrix& e) {
    Matrix he = commutator(h, e);
    const auto& a = he.entries();
    const auto& b = e.entries();
    std::optional<GaussRat> lambda;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k].is_zero()) {
            if (!a[k].is_zero()) return std::nullopt;
            continue;
        }
        GaussRat r = a[k] / b[k];
        if (lambda && *lambda != r) return std::nullopt;
        lambda = r;
    }
    return lambda;
}

// Scales f so that (e, [e, f], f) is an sl2-triple.
std::optional<Matrix> complete_triple(const Matrix& e, const Matrix& f0) {
    auto lambda = eigen_ratio(commutator(e, f0), e);
    if (!lambda || lambda->is_zero()) return std::nullopt;
    Matrix f = f0 * (GaussRat(2) / *lambda);
    Matrix h = commutator(e, f);
    if (commutator(h, f) != f * GaussRat(-2)) return std::nullopt;
    return f;
}

bool same_set(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
    std::set<std::string> ka, kb;
    for (const auto& x : a) ka.insert(x.key());
    for (const auto& x : b) kb.insert(x.key());
    return ka == kb;
}

std::vector<GroupRepresentative> realize_w0(const SymmetricPair& pair) {
    const Frame& f = pair.fundamental_frame();
    const auto& rdi = pair.fundamental();
    const RootDatum& d = *pair.datum();
    std::vector<GroupRepresentative> out;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < d.size(); ++k) {
        RootKind kind = rdi.kind(k);
        if (kind == RootKind::Real || kind == RootKind::ImaginaryNoncompact) continue;
        Matrix e = pair.project_g0(f.root_vectors[k]);
        Matrix f0 = pair.project_g0(f.root_vectors[d.negative(k)]);
        if (e.is_zero() || f0.is_zero()) continue;
        auto ff = complete_triple(e, f0);
        if (!ff) throw InvariantViolation("compute_subgroups", "no sl2-triple in g0 for a root of g0");
        Matrix n = reflection_representative(e, *ff);
        if (!pair.in_group(n) || pair.theta_group(n) != n)
            throw InvariantViolation("compute_subgroups", "reflection representative is not in G0");
        auto w = induced_weyl_element(pair, f, n);
        if (!w) throw InvariantViolation("compute_subgroups", "representative does not normalize the fundamental torus");
        if (seen.insert(w->key()).second) out.push_back({n, *w});
    }
    return out;
}

std::vector<GroupRepresentative> realize_wa(const SymmetricPair& pair) {
    const Frame& f = pair.split_frame();
    const RootDatum& d = *pair.datum();
    std::vector<GroupRepresentative> out;
    std::set<std::string> seen;
    auto keep = [&](const Matrix& n) {
        if (!pair.in_group(n) || pair.theta_group(n) != n)
            throw InvariantViolation("compute_subgroups", "little Weyl group representative is not in G0");
        auto w = induced_weyl_element(pair, f, n);
        if (!w) throw InvariantViolation("compute_subgroups", "representative does not normalize the split torus");
        if (seen.insert(w->key()).second) out.push_back({n, *w});
    };
    for (std::size_t k = 0; k < d.positive_count(); ++k) {
        const Matrix& xa = f.root_vectors[k];
        const Matrix& xm = f.root_vectors[d.negative(k)];
        auto a = eigen_ratio(commutator(xa, xm), xa);
        if (!a || a->is_zero()) throw InvariantViolation("compute_subgroups", "root vectors do not span an sl2");
        std::size_t t = f.theta_star(k);
        if (t == d.negative(k)) {
            // theta(X_a) = c X_{-a}; pick e = s X_a with theta(e) = -f.
            GaussRat c = f.theta_scalars[k];
            auto s = exact_sqrt(GaussRat(-2) / (*a * c));
            if (!s) throw ConjugationOutsideField("compute_subgroups", "real root needs a square root outside Q(i)");
            Matrix e = xa * *s;
            Matrix ff = xm * (GaussRat(2) / (*s * *a));
            if (pair.theta(e) != -ff) throw InvariantViolation("compute_subgroups", "real root triple is not theta-split");
            keep(reflection_representative(e, ff));
        } else if (t != k && d.inner(d.root(k), d.root(t)) == 0) {
            Matrix n1 = reflection_representative(xa, xm * (GaussRat(2) / *a));
            keep(n1 * pair.theta_group(n1));
        }
    }
    return out;
}

} // namespace

ThetaWeylData fundamental_weyl_data(const SymmetricPair& pair) { return theta_weyl_data(pair.fundamental()); }

SubgroupReport compute_subgroups(const SymmetricPair& pair) {
    ThetaWeylData data = fundamental_weyl_data(pair);
    SubgroupReport r;
    r.w_type = pair.datum()->label();
    r.w_order = data.w.order();
    r.w_theta_order = data.w_theta.size();
    r.w0_order = data.w0.order();
    r.w_theta_type = data.w_theta_type;
    r.w0_type = data.w0_type;
    r.index_w_theta_w0 = r.w_theta_order / r.w0_order;
    r.index_w_w_theta = r.w_order / r.w_theta_order;
    if (r.w_theta_order % r.w0_order != 0 || r.w_order % r.w_theta_order != 0)
        throw InvariantViolation("compute_subgroups", "subgroup orders do not divide");
    for (auto idx : theta_fixed_elements(data.w, pair.split().theta_star)) r.wa_elements.push_back(data.w.element(idx));
    r.wa_order = r.wa_elements.size();
    r.wa_type = recognize_type(split_restricted_system(pair.split()), r.wa_order);
    if (!pair.matrix_level()) return r;

    r.w0_representatives = realize_w0(pair);
    std::vector<WeylElement> gens;
    for (const auto& g : r.w0_representatives) gens.push_back(g.induced);
    r.w0_realized = same_set(WeylGroup::generated(pair.datum()->size(), gens).elements(), data.w0.elements());

    r.wa_representatives = realize_wa(pair);
    gens.clear();
    for (const auto& g : r.wa_representatives) gens.push_back(g.induced);
    r.wa_realized = same_set(WeylGroup::generated(pair.datum()->size(), gens).elements(), r.wa_elements);
    return r;
}

SplitBorelCensus enumerate_split_borels(const SymmetricPair& pair, const SubgroupReport& subgroups) {
    const RootDatum& d = *pair.datum();
    const Frame& f = pair.split_frame();
    WeylGroup w = WeylGroup::enumerate(d);
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < d.positive_count(); ++k) pos.push_back(k);
    Subspace t = pair.torus(f);
    Matrix th = pair.theta_matrix();
    SplitBorelCensus out;
    out.examined = w.order();
    out.root_test_agrees = true;
    for (const auto& el : w.elements()) {
        auto wpos = translate_roots(el, pos);
        Subspace b = root_span(pair, f, wpos, true);
        bool split = intersect(b, image(th, b)) == t;
        std::set<std::size_t> ws(wpos.begin(), wpos.end());
        bool by_roots = true;
        for (auto k : wpos)
            if (ws.count(f.theta_star(k))) by_roots = false;
        if (split != by_roots) out.root_test_agrees = false;
        if (split) out.split.push_back(el);
    }
    std::set<std::string> keys;
    for (const auto& el : out.split) keys.insert(el.key());
    if (!out.split.empty()) {
        std::set<std::string> orbit;
        for (const auto& u : subgroups.wa_elements) orbit.insert((u * out.split.front()).key());
        out.torsor = orbit == keys && out.split.size() == subgroups.wa_elements.size();
    }
    return out;
}

RegularBorelCensus detect_regular_classes(const RootDatumWithInvolution& rdi, const SymmetricPair* pair,
                                          const Frame* frame, std::uint64_t seed) {
    ThetaWeylData data = theta_weyl_data(rdi);
    RegularBorelCensus out;
    auto classes = borel_classes(rdi, data);
    std::optional<Subspace> l;
    if (pair) l = root_span(*pair, *frame, rdi.member_roots(), true);
    std::size_t index = 0;
    for (auto& c : classes) {
        RegularClass rc;
        rc.borel = c;
        rc.fast_path = c.regular;
        if (pair) {
            auto nroots = translate_roots(c.representative, rdi.positive_roots());
            Subspace v = intersect(root_span(*pair, *frame, nroots, false), pair->g1());
            auto vb = v.basis();
            std::mt19937_64 rng(seed * 7919 + index);
            std::uniform_int_distribution<int> dist(1, 9);
            if (vb.empty() && l->dim() == pair->rank()) rc.witness = Matrix(pair->n(), pair->n());
            for (int attempt = 0; attempt < 8 && !rc.witness && !vb.empty(); ++attempt) {
                Vec x(pair->dim());
                for (const auto& b : vb) x = vec_add(x, vec_scale(b, GaussRat(dist(rng) * (dist(rng) % 2 ? 1 : -1))));
                Matrix xm = pair->from_coords(x);
                if (pair->centralizer_in(xm, *l).dim() == pair->rank()) rc.witness = xm;
            }
            if (rc.witness) {
                if (!is_nilpotent(*rc.witness))
                    throw InvariantViolation("detect_regular_borels", "witness is not nilpotent");
                rc.semantic = true;
            } else {
                // A simple root whose coordinate vanishes on all of n_w ∩ g1 rules out
                // regular nilpotents there.
                std::vector<Vec> cols;
                for (auto k : nroots) cols.push_back(pair->coords(frame->root_vectors[k]));
                Matrix m = Matrix::from_columns(cols, pair->dim());
                for (auto s : c.simple_roots) {
                    std::size_t pos = std::find(nroots.begin(), nroots.end(), s) - nroots.begin();
                    bool vanishes = true;
                    for (const auto& b : vb) {
                        auto y = solve(m, b);
                        if (!y) throw InvariantViolation("detect_regular_borels", "n_w ∩ g1 is not inside n_w");
                        if (!(*y)[pos].is_zero()) vanishes = false;
                    }
                    if (vanishes) {
                        rc.vanishing_simple_root = s;
                        break;
                    }
                }
                if (!rc.vanishing_simple_root)
                    throw InvariantViolation("detect_regular_borels", "no regular witness and no vanishing certificate");
                rc.semantic = false;
            }
            if (*rc.semantic != rc.fast_path) out.fast_path_agrees = false;
        }
        if (rc.regular()) ++out.regular_count;
        out.classes.push_back(std::move(rc));
        ++index;
    }
    return out;
}

RegularBorelCensus detect_regular_borels(const SymmetricPair& pair, std::uint64_t seed) {
    if (!pair.matrix_level()) return detect_regular_classes(pair.fundamental(), nullptr, nullptr, seed);
    return detect_regular_classes(pair.fundamental(), &pair, &pair.fundamental_frame(), seed);
}

namespace {

Vec cartan_coords(const SymmetricPair& pair, const Matrix& y) {
    std::vector<Vec> cols;
    for (const auto& h : pair.cartan_basis()) cols.push_back(h.flatten());
    auto c = solve(Matrix::from_columns(cols, y.rows() * y.cols()), y.flatten());
    if (!c) throw InvariantViolation("canonical_involution", "image is not in the standard Cartan");
    return *c;
}

template <class Theta>
Matrix pulled_back(const SymmetricPair& pair, const Matrix& h, const Theta& theta) {
    auto hinv = inverse(h);
    std::vector<Vec> cols;
    for (const auto& c : pair.cartan_basis()) cols.push_back(cartan_coords(pair, *hinv * theta(h * c * *hinv) * h));
    return Matrix::from_columns(cols, pair.cartan_basis().size());
}

} // namespace

CanonicalInvolution canonical_involution(const SymmetricPair& pair, const SplitBorelCensus& census) {
    CanonicalInvolution out;
    if (census.split.empty()) throw InvariantViolation("canonical_involution", "no theta-split Borel");
    const Frame& f = pair.split_frame();
    auto theta = [&](const Matrix& x) { return pair.theta(x); };
    out.choice_independent = true;
    for (const auto& w : census.split) {
        Matrix h = f.conj * permutation_matrix(coordinate_permutation(pair, w));
        Matrix m = pulled_back(pair, h, theta);
        if (out.choices == 0) out.matrix = m;
        else if (m != out.matrix) out.choice_independent = false;
        ++out.choices;
    }

    // theta^g = Ad(g) theta Ad(g)^{-1} for a unipotent g; its split Borels are
    // searched among all Borels containing Ad(g) of the split torus.
    Matrix nil(pair.n(), pair.n());
    for (auto [o, s] : pair.blocks())
        for (std::size_t i = o; i < o + s; ++i)
            for (std::size_t j = i + 1; j < o + s; ++j) nil(i, j) = GaussRat(static_cast<long>((i + 2 * j) % 3 + 1));
    Matrix g = exp_nilpotent(nil);
    Matrix ginv = *inverse(g);
    auto theta_g = [&](const Matrix& x) { return g * pair.theta(ginv * x * g) * ginv; };
    std::vector<Vec> th_cols;
    for (const auto& b : pair.basis()) th_cols.push_back(pair.coords(theta_g(b)));
    Matrix th = Matrix::from_columns(th_cols, pair.dim());
    std::vector<Matrix> tg;
    for (const auto& t : f.torus_basis) tg.push_back(g * t * ginv);
    Subspace torus = pair.span(tg);
    WeylGroup w = WeylGroup::enumerate(*pair.datum());
    std::size_t found = 0;
    out.conjugate_agrees = true;
    for (const auto& el : w.elements()) {
        Matrix h = g * f.conj * permutation_matrix(coordinate_permutation(pair, el));
        Matrix hinv = *inverse(h);
        std::vector<Matrix> bm;
        for (const auto& c : pair.cartan_basis()) bm.push_back(h * c * hinv);
        for (std::size_t k = 0; k < pair.datum()->positive_count(); ++k) {
            auto [i, j] = pair.root_unit(k);
            bm.push_back(h * Matrix::unit(pair.n(), i, j) * hinv);
        }
        Subspace b = pair.span(bm);
        if (!(intersect(b, image(th, b)) == torus)) continue;
        ++found;
        if (pulled_back(pair, h, theta_g) != out.matrix) out.conjugate_agrees = false;
    }
    if (found != census.split.size()) out.conjugate_agrees = false;

    std::size_t r = out.matrix.rows();
    out.fixed_dim = kernel_basis(out.matrix - Matrix::identity(r)).size();
    out.anti_dim = kernel_basis(out.matrix + Matrix::identity(r)).size();
    return out;
}

} // namespace thetapairs
