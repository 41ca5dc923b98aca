#include "thetapairs/slice_fibers.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace thetapairs {

namespace {

Matrix block(const Matrix& x, std::size_t r0, std::size_t c0, std::size_t n) {
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = x(r0 + i, c0 + j);
    return b;
}

std::string vec_key(const Vec& v) {
    std::string s;
    for (const auto& x : v) s += x.to_string() + ";";
    return s;
}

// Eigenspace of ad(h) on s for the eigenvalue lambda.
Subspace weight_space(const SymmetricPair& pair, const Matrix& adh, const Subspace& s, long lambda) {
    return kernel_on(adh - Matrix::identity(pair.dim()) * GaussRat(lambda), s);
}

// Solves sum_k y_k * cols[k] = rhs for y.
std::optional<Vec> solve_columns(const std::vector<Vec>& cols, const Vec& rhs) {
    if (cols.empty()) return vec_is_zero(rhs) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Matrix m = Matrix::from_columns(cols, rhs.size());
    auto y = solve(m, rhs);
    if (!y) return std::nullopt;
    if (!vec_is_zero(vec_sub(m * *y, rhs))) return std::nullopt;
    return y;
}

Matrix combine(const std::vector<Matrix>& basis, const Vec& y, std::size_t n) {
    Matrix out(n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!y[k].is_zero()) out += basis[k] * y[k];
    return out;
}

} // namespace

ElementOfG1 jordan_in_g1(const SymmetricPair& pair, const Matrix& x) {
    if (!pair.in_g1(x)) throw DomainError("jordan_in_g1", "matrix is not in g1");
    ElementOfG1 out{x, jordan_semisimple_part(x), {}};
    out.nil = x - out.ss;
    if (!pair.in_g1(out.ss) || !pair.in_g1(out.nil))
        throw InvariantViolation("jordan_in_g1", "Jordan parts left g1");
    if (!commutator(out.ss, out.nil).is_zero()) throw InvariantViolation("jordan_in_g1", "Jordan parts do not commute");
    return out;
}

Vec chi1(const SymmetricPair& pair, const Matrix& x) {
    if (!pair.in_g1(x)) throw DomainError("chi1", "matrix is not in g1");
    std::vector<GaussRat> cp;
    std::size_t skip = 2; // leading 1 and the vanishing trace coefficient
    switch (pair.spec().family) {
    case Family::SplitA: cp = char_poly(x); break;
    case Family::GlGl: {
        std::size_t n = pair.n() / 2;
        cp = char_poly(block(x, 0, n, n) * block(x, n, 0, n));
        skip = 1;
        break;
    }
    case Family::Diag: cp = char_poly(block(x, 0, 0, pair.n() / 2)); break;
    default: throw Unsupported("chi1", "combinatorial entry");
    }
    return Vec(cp.begin() + static_cast<long>(skip), cp.end());
}

bool is_regular(const SymmetricPair& pair, const Matrix& x) {
    if (!pair.in_g1(x)) throw DomainError("is_regular", "matrix is not in g1");
    return is_regular_in_g(pair, x);
}

Matrix a_point(const SymmetricPair& pair, const Vec& c) {
    auto basis = pair.cartan_subspace_basis();
    if (c.size() != basis.size()) throw DomainError("a_point", "wrong number of coordinates");
    return combine(basis, c, pair.n());
}

Vec split_coordinates(const SymmetricPair& pair, const Matrix& x) {
    const Frame& f = pair.split_frame();
    Matrix d = f.conj_inv * x * f.conj;
    if (!d.is_diagonal()) throw ConjugationOutsideField("split_coordinates", "element is not in the split torus");
    Vec out(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) out[i] = d(i, i);
    return out;
}

std::size_t wa_stabilizer_order(const SymmetricPair& pair, const SubgroupReport& subgroups, const Matrix& x) {
    Vec d = split_coordinates(pair, x);
    std::size_t count = 0;
    for (const auto& u : subgroups.wa_elements) {
        auto pi = coordinate_permutation(pair, u);
        Vec e(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) e[pi[i]] = d[i];
        if (e == d) ++count;
    }
    return count;
}

Matrix regular_a_point(const SymmetricPair& pair, const SubgroupReport& subgroups, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec c(pair.r1());
        for (auto& x : c) x = dist(rng);
        Matrix x = a_point(pair, c);
        if (is_regular_in_g(pair, x) && wa_stabilizer_order(pair, subgroups, x) == 1) return x;
    }
    throw InvariantViolation("regular_a_point", "no regular point of a found");
}

Matrix degenerate_a_point(const SymmetricPair& pair) {
    const std::size_t r = pair.r1();
    std::optional<Matrix> first;
    // Coordinates in {-2..2}^r, ordered by max norm then lexicographically.
    for (int bound = 1; bound <= 2; ++bound) {
        std::vector<int> c(r, -bound);
        while (true) {
            bool on_shell = std::any_of(c.begin(), c.end(), [&](int v) { return std::abs(v) == bound; });
            if (on_shell) {
                Vec cv(c.begin(), c.end());
                Matrix x = a_point(pair, cv);
                if (!first) first = x;
                if (!is_regular_in_g(pair, x)) return x;
            }
            std::size_t k = 0;
            while (k < r && c[k] == bound) c[k++] = -bound;
            if (k == r) break;
            ++c[k];
        }
    }
    return *first;
}

CentralizerPair centralizer_pair(const SymmetricPair& pair, const Matrix& point, std::uint64_t seed) {
    if (!pair.cartan_subspace().contains(pair.coords(point)))
        throw DomainError("centralizer_pair", "point is not in a");
    const RootDatum& d = *pair.datum();
    CentralizerPair cp{point, pair.centralizer(point), pair.split_frame(), {}, {}, 0};
    Vec dc = split_coordinates(pair, point);
    std::vector<bool> members(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        auto [i, j] = pair.root_unit(k);
        members[k] = dc[i] == dc[j];
    }
    Matrix conj = cp.frame.conj;
    while (true) {
        std::optional<std::size_t> real;
        for (std::size_t k = 0; k < d.positive_count() && !real; ++k)
            if (members[k] && cp.frame.theta_star(k) == d.negative(k)) real = k;
        if (!real) break;
        // Cayley transform in the root SL2 of gamma: the new torus line is spanned by
        // e + c f, which theta fixes.
        GaussRat c = cp.frame.theta_scalars[*real];
        auto xi = exact_sqrt(c.inverse());
        if (!xi) throw ConjugationOutsideField("centralizer_pair", "Cayley transform needs a square root outside Q(i)");
        auto [i, j] = pair.root_unit(*real);
        Matrix cm = Matrix::identity(pair.n());
        cm(i, j) = *xi;
        cm(j, i) = -(c * *xi);
        conj = conj * cm;
        cp.frame = analyze_frame(pair, conj);
        if (cp.frame.theta_star(*real) != *real)
            throw InvariantViolation("centralizer_pair", "Cayley transform did not make the root imaginary");
        ++cp.cayley_steps;
    }
    for (std::size_t k = 0; k < d.size(); ++k)
        if (members[k] && !cp.l.contains(pair.coords(cp.frame.root_vectors[k])))
            throw InvariantViolation("centralizer_pair", "root vector of l left the centralizer");

    // Theta-stable positive system of l: sign of (a, v0) for a generic theta*-fixed v0.
    std::vector<std::size_t> pos;
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<long> v0(d.rank(), 0);
        for (std::size_t k = 0; k < d.positive_count(); ++k) {
            long weight = 1 + static_cast<long>((k * k + 3 * k + attempt * 7) % 11);
            for (std::size_t i = 0; i < d.rank(); ++i)
                v0[i] += weight * (d.root(k)[i] + d.root(cp.frame.theta_star(k))[i]);
        }
        pos.clear();
        bool generic = true;
        for (std::size_t k = 0; k < d.size() && generic; ++k) {
            if (!members[k]) continue;
            long s = 0;
            for (std::size_t i = 0; i < d.rank(); ++i)
                for (std::size_t j = 0; j < d.rank(); ++j) s += d.root(k)[i] * d.gram()[i][j] * v0[j];
            if (s == 0) generic = false;
            else if (s > 0) pos.push_back(k);
        }
        if (generic) break;
        if (attempt == 15) throw InvariantViolation("centralizer_pair", "no generic theta-fixed vector");
    }
    cp.rdi = {pair.datum(), cp.frame.theta_star, cp.frame.compactness, members, pos};
    if (pos.empty()) cp.rdi.members.assign(d.size(), false);
    validate(cp.rdi);
    cp.census = detect_regular_classes(cp.rdi, &pair, &cp.frame, seed);
    return cp;
}

Matrix regular_nilpotent(const SymmetricPair& pair, const CentralizerPair& cp) {
    for (const auto& c : cp.census.classes) {
        if (!c.regular()) continue;
        // One projected simple root vector per theta*-orbit of simple roots.
        Matrix e(pair.n(), pair.n());
        const auto& simple = c.borel.simple_roots;
        for (auto s : simple) {
            std::size_t t = cp.frame.theta_star(s);
            if (t != s && t < s && std::find(simple.begin(), simple.end(), t) != simple.end()) continue;
            e += pair.project_g1(cp.frame.root_vectors[s]);
        }
        if (cp.l.dim() == pair.rank() ||
            (pair.centralizer_in(e, cp.l).dim() == pair.rank() && is_nilpotent(e)))
            return e;
        if (c.witness) return *c.witness;
    }
    throw TripleNotFound("regular_nilpotent", "no regular theta-stable Borel in the centralizer");
}

NormalTriple normal_triple(const SymmetricPair& pair, const Matrix& e, const Subspace& l) {
    auto l1 = pair.matrices(intersect(l, pair.g1()));
    Vec e_c = pair.coords(e);
    std::vector<Vec> cols;
    for (const auto& b : l1) cols.push_back(pair.coords(commutator(commutator(e, b), e)));
    auto y = solve_columns(cols, vec_scale(e_c, GaussRat(2)));
    if (!y) throw TripleNotFound("normal_triple", "no h = [e, f0] with [h, e] = 2e");
    Matrix h = commutator(e, combine(l1, *y, pair.n()));
    // f with [e, f] = h and [h, f] = -2f.
    std::vector<Vec> stacked;
    for (const auto& b : l1) {
        Vec top = pair.coords(commutator(e, b));
        Vec bottom = vec_add(pair.coords(commutator(h, b)), vec_scale(pair.coords(b), GaussRat(2)));
        top.insert(top.end(), bottom.begin(), bottom.end());
        stacked.push_back(top);
    }
    Vec rhs = pair.coords(h);
    rhs.resize(2 * pair.dim());
    auto z = solve_columns(stacked, rhs);
    if (!z) throw TripleNotFound("normal_triple", "no f completing the triple");
    NormalTriple t{e, h, combine(l1, *z, pair.n())};
    if (commutator(t.h, t.e) != t.e * GaussRat(2) || commutator(t.h, t.f) != t.f * GaussRat(-2) ||
        commutator(t.e, t.f) != t.h || !pair.in_g0(t.h) || !pair.in_g1(t.f))
        throw TripleNotFound("normal_triple", "triple relations fail");
    return t;
}

KWSection build_kw_section(const SymmetricPair& pair, std::uint64_t seed) {
    CentralizerPair cp = centralizer_pair(pair, Matrix(pair.n(), pair.n()), seed);
    KWSection kw;
    kw.e = regular_nilpotent(pair, cp);
    if (!is_regular_in_g(pair, kw.e)) throw TripleNotFound("build_kw_section", "e is not regular");
    // h from [h, e] = 2e inside t0, then f from the remaining triple equations.
    auto t0 = pair.matrices(intersect(intersect(pair.torus(cp.frame), pair.g0()), image(pair.ad(kw.e), pair.g1())));
    std::vector<Vec> cols;
    for (const auto& b : t0) cols.push_back(pair.coords(commutator(b, kw.e)));
    auto y = solve_columns(cols, vec_scale(pair.coords(kw.e), GaussRat(2)));
    if (!y) throw TripleNotFound("build_kw_section", "no h in t0 with [h, e] = 2e");
    kw.h = combine(t0, *y, pair.n());
    auto g1 = pair.matrices(pair.g1());
    std::vector<Vec> stacked;
    for (const auto& b : g1) {
        Vec top = pair.coords(commutator(kw.e, b));
        Vec bottom = vec_add(pair.coords(commutator(kw.h, b)), vec_scale(pair.coords(b), GaussRat(2)));
        top.insert(top.end(), bottom.begin(), bottom.end());
        stacked.push_back(top);
    }
    Vec rhs = pair.coords(kw.h);
    rhs.resize(2 * pair.dim());
    auto z = solve_columns(stacked, rhs);
    if (!z) throw TripleNotFound("build_kw_section", "no f completing the triple");
    kw.f = combine(g1, *z, pair.n());

    Subspace v = pair.centralizer_in(kw.f, pair.g1());
    if (v.dim() != pair.r1()) throw TripleNotFound("build_kw_section", "dim z_{g1}(f) != r1");
    Matrix adh = pair.ad(kw.h);
    for (int deg : pair.invariant_degrees()) {
        Subspace w = weight_space(pair, adh, v, -2L * (deg - 1));
        if (w.dim() != 1) throw TripleNotFound("build_kw_section", "slice weights do not match the invariant degrees");
        kw.v.push_back(pair.from_coords(w.basis().front()));
    }
    return kw;
}

Matrix slice_point(const KWSection& kw, const Vec& t) {
    Matrix x = kw.e;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!t[k].is_zero()) x += kw.v[k] * t[k];
    return x;
}

Vec slice_solve(const SymmetricPair& pair, const KWSection& kw, const Vec& target) {
    const std::size_t r = kw.v.size();
    if (target.size() != r) throw DomainError("slice_solve", "target has the wrong length");
    Vec t(r);
    for (std::size_t j = 0; j < r; ++j) {
        t[j] = 0;
        GaussRat b = chi1(pair, slice_point(kw, t))[j];
        t[j] = 1;
        GaussRat a = chi1(pair, slice_point(kw, t))[j] - b;
        if (a.is_zero()) throw InvariantViolation("slice_solve", "invariant does not depend on its slice coordinate");
        t[j] = (target[j] - b) / a;
    }
    if (chi1(pair, slice_point(kw, t)) != target) throw InvariantViolation("slice_solve", "slice solve missed the target");
    return t;
}

SliceAudit audit_kw_section(const SymmetricPair& pair, const KWSection& kw, std::size_t samples,
                            std::size_t targets, std::uint64_t seed) {
    SliceAudit a;
    const std::size_t r = kw.v.size();
    a.triple_ok = commutator(kw.h, kw.e) == kw.e * GaussRat(2) && commutator(kw.h, kw.f) == kw.f * GaussRat(-2) &&
                  commutator(kw.e, kw.f) == kw.h && pair.in_g0(kw.h) && pair.in_g1(kw.e) && pair.in_g1(kw.f);
    a.e_regular_nilpotent = !kw.e.is_zero() && is_nilpotent(kw.e) && is_regular(pair, kw.e);
    Vec zero(r);
    a.kappa_zero_is_e = vec_is_zero(chi1(pair, kw.e)) && vec_is_zero(slice_solve(pair, kw, zero));

    int bound = 5;
    while (std::pow(2.0 * bound + 1, static_cast<double>(r)) < 2.0 * static_cast<double>(samples)) ++bound;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Vec> ts;
    std::set<std::string> seen;
    while (ts.size() < samples) {
        Vec t(r);
        for (auto& x : t) x = dist(rng);
        if (seen.insert(vec_key(t)).second) ts.push_back(t);
    }
    std::set<std::string> values;
    std::vector<Vec> chis;
    for (const auto& t : ts) {
        Matrix x = slice_point(kw, t);
        if (is_regular(pair, x)) ++a.regular_samples;
        chis.push_back(chi1(pair, x));
        values.insert(vec_key(chis.back()));
    }
    a.samples = ts.size();
    a.injective = values.size() == ts.size();
    for (std::size_t k = 0; k < targets && k < ts.size(); ++k) {
        ++a.targets;
        if (slice_solve(pair, kw, chis[k]) == ts[k]) ++a.round_trips;
    }
    // The j-th invariant ignores slice coordinates of higher degree.
    a.triangular = true;
    for (std::size_t k = 0; k < std::min<std::size_t>(ts.size(), 5); ++k)
        for (std::size_t m = 0; m < r; ++m) {
            Vec t = ts[k];
            t[m] += 1;
            Vec c = chi1(pair, slice_point(kw, t));
            for (std::size_t j = 0; j < m; ++j)
                if (c[j] != chis[k][j]) a.triangular = false;
        }
    return a;
}

bool chi1_wa_invariant(const SymmetricPair& pair, const SubgroupReport& subgroups, std::size_t points,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-6, 6);
    const Frame& f = pair.split_frame();
    for (std::size_t p = 0; p < points; ++p) {
        Vec c(pair.r1());
        for (auto& x : c) x = dist(rng);
        Matrix x = a_point(pair, c);
        Vec base = chi1(pair, x);
        Vec d = split_coordinates(pair, x);
        for (const auto& u : subgroups.wa_elements) {
            auto pi = coordinate_permutation(pair, u);
            Vec e(d.size());
            for (std::size_t i = 0; i < d.size(); ++i) e[pi[i]] = d[i];
            Matrix y = f.conj * Matrix::diagonal(e) * f.conj_inv;
            if (!pair.in_g1(y) || chi1(pair, y) != base) return false;
        }
    }
    return true;
}

bool chi1_g0_invariant(const SymmetricPair& pair, std::size_t conjugations, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    const Frame& f = pair.fundamental_frame();
    const RootDatum& d = *pair.datum();
    std::vector<Matrix> nilpotents;
    for (std::size_t k = 0; k < d.positive_count(); ++k) {
        Matrix n = pair.project_g0(f.root_vectors[k]);
        if (!n.is_zero()) nilpotents.push_back(n);
    }
    auto g1 = pair.matrices(pair.g1());
    for (std::size_t s = 0; s < conjugations; ++s) {
        Matrix x(pair.n(), pair.n());
        for (const auto& b : g1) x += b * GaussRat(dist(rng));
        Vec base = chi1(pair, x);
        if (nilpotents.empty()) continue;
        Matrix n = nilpotents[s % nilpotents.size()] * GaussRat(dist(rng) == 0 ? 1 : dist(rng) + 4);
        Matrix g = exp_nilpotent(n);
        Matrix y = g * x * *inverse(g);
        if (!pair.in_g1(y) || chi1(pair, y) != base) return false;
    }
    return true;
}

namespace {

Matrix adjoint_action(const SymmetricPair& pair, const Matrix& g) {
    Matrix ginv = *inverse(g);
    std::vector<Vec> cols;
    for (const auto& b : pair.basis()) cols.push_back(pair.coords(g * b * ginv));
    return Matrix::from_columns(cols, pair.dim());
}

bool is_subalgebra(const SymmetricPair& pair, const Subspace& s) {
    auto ms = pair.matrices(s);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!s.contains(pair.coords(commutator(ms[i], ms[j])))) return false;
    return true;
}

// Borel of l containing the regular nilpotent e ∈ l ∩ g1: nonnegative ad(h)-weights.
Subspace levi_borel(const SymmetricPair& pair, const Subspace& l, const Matrix& e) {
    if (e.is_zero()) return l;
    NormalTriple t = normal_triple(pair, e, l);
    Matrix adh = pair.ad(t.h);
    Subspace b(pair.dim());
    for (long lambda = 0; lambda <= 2 * static_cast<long>(pair.n()); ++lambda)
        b = b + weight_space(pair, adh, l, lambda);
    return b;
}

} // namespace

FiberReport fiber_over_regular(const SymmetricPair& pair, const Matrix& x, const SubgroupReport& subgroups) {
    FiberReport rep;
    rep.base = jordan_in_g1(pair, x);
    if (!is_regular_in_g(pair, x)) throw NotRegular("fiber_over_regular", "element is not regular in g1");
    if (!pair.cartan_subspace().contains(pair.coords(rep.base.ss)))
        throw ConjugationOutsideField("fiber_over_regular", "semisimple part is not in the pinned Cartan subspace");
    rep.wa_order = subgroups.wa_order;
    rep.stabilizer_order = wa_stabilizer_order(pair, subgroups, rep.base.ss);

    const RootDatum& d = *pair.datum();
    Subspace l = pair.centralizer(rep.base.ss);
    if (pair.centralizer_in(rep.base.nil, l).dim() != pair.rank())
        throw InvariantViolation("fiber_over_regular", "nilpotent part is not regular in the centralizer");
    Subspace bl = levi_borel(pair, l, rep.base.nil);
    Matrix th = pair.theta_matrix();
    const std::size_t borel_dim = pair.rank() + d.positive_count();

    // The Cayley frame of l indexes its roots like the split frame and fixes x_ss, so
    // the Borel of wΦ+ in it lies over w^-1 x_ss in the abstract Cartan.
    CentralizerPair cp = centralizer_pair(pair, rep.base.ss, 0);
    Subspace torus = pair.torus(cp.frame);
    if (!bl.contains(torus))
        throw ConjugationOutsideField("fiber_over_regular", "Borel of the centralizer does not contain the Cayley torus");
    Vec ds = split_coordinates(pair, rep.base.ss);
    std::vector<Vec> a_std;
    for (const auto& v : pair.cartan_subspace_basis()) a_std.push_back(split_coordinates(pair, v));
    Subspace a = Subspace::span(a_std, ds.size());

    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < d.positive_count(); ++k) pos.push_back(k);
    rep.borels_valid = image(th, bl) == bl && bl.contains(pair.coords(x));
    WeylGroup w = WeylGroup::enumerate(d);
    // Reference Borel u Φ+ must be theta-split in the split frame.
    const Frame& sf = pair.split_frame();
    std::optional<WeylElement> u;
    for (const auto& el : w.elements()) {
        auto roots = translate_roots(el, pos);
        std::set<std::size_t> in(roots.begin(), roots.end());
        bool split = true;
        for (auto k : roots)
            if (in.count(sf.theta_star(k))) split = false;
        if (split) {
            u = el;
            break;
        }
    }
    if (!u) throw InvariantViolation("fiber_over_regular", "no theta-split Borel in the split frame");
    for (const auto& el : w.elements()) {
        auto pi = coordinate_permutation(pair, *u * el.inverse());
        Vec moved(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) moved[pi[i]] = ds[i];
        if (!a.contains(moved)) continue;
        Subspace b = torus + root_span(pair, cp.frame, translate_roots(el, pos), false);
        if (!b.contains(pair.coords(x))) continue;
        if (std::find(rep.borels.begin(), rep.borels.end(), b) != rep.borels.end()) continue;
        bool ok = b.dim() == borel_dim && is_subalgebra(pair, b) && intersect(b, l) == bl;
        if (rep.base.nil.is_zero() && !(intersect(b, image(th, b)) == l)) ok = false;
        if (!ok) rep.borels_valid = false;
        rep.borels.push_back(b);
    }
    for (std::size_t i = 0; i < rep.borels.size(); ++i)
        for (std::size_t j = i + 1; j < rep.borels.size(); ++j)
            if (rep.borels[i] == rep.borels[j]) rep.borels_valid = false;

    if (rep.base.nil.is_zero() && !rep.borels.empty()) {
        // W_a representatives as products of the reflection representatives.
        std::vector<WeylElement> gens;
        for (const auto& g : subgroups.wa_representatives) gens.push_back(g.induced);
        std::map<std::string, Matrix> reps{{WeylElement::identity(d.size()).key(), Matrix::identity(pair.n())}};
        std::vector<std::pair<WeylElement, Matrix>> frontier{{WeylElement::identity(d.size()), Matrix::identity(pair.n())}};
        while (!frontier.empty()) {
            std::vector<std::pair<WeylElement, Matrix>> next;
            for (const auto& [u, m] : frontier)
                for (const auto& g : subgroups.wa_representatives) {
                    WeylElement v = g.induced * u;
                    if (reps.count(v.key())) continue;
                    Matrix nm = g.element * m;
                    reps.emplace(v.key(), nm);
                    next.emplace_back(v, nm);
                }
            frontier = std::move(next);
        }
        bool all = true;
        for (std::size_t i = 1; i < rep.borels.size() && all; ++i) {
            bool found = false;
            for (const auto& [key, m] : reps) {
                if (!pair.in_group(m) || pair.theta_group(m) != m) continue;
                if (image(adjoint_action(pair, m), rep.borels[0]) == rep.borels[i]) {
                    found = true;
                    break;
                }
            }
            all = found;
        }
        rep.single_g0_orbit = all;
    }
    return rep;
}

ComponentCensus component_census(const SymmetricPair& pair, const Matrix& x) {
    if (!is_regular(pair, x) || !jordan_in_g1(pair, x).nil.is_zero())
        throw NotRegular("component_census", "element is not regular semisimple");
    if (!pair.cartan_subspace().contains(pair.coords(x)))
        throw ConjugationOutsideField("component_census", "element is not in the pinned Cartan subspace");
    Vec d = split_coordinates(pair, x);
    std::vector<Vec> a_std;
    for (const auto& b : pair.cartan_subspace_basis()) a_std.push_back(split_coordinates(pair, b));
    WeylGroup w = WeylGroup::enumerate(*pair.datum());
    auto permute = [&](const WeylElement& u, const Vec& v) {
        auto pi = coordinate_permutation(pair, u);
        Vec e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) e[pi[i]] = v[i];
        return e;
    };
    std::vector<Vec> points;
    std::vector<Subspace> components;
    std::set<std::string> point_keys;
    for (const auto& u : w.elements()) {
        Vec p = permute(u, d);
        if (point_keys.insert(vec_key(p)).second) points.push_back(p);
        std::vector<Vec> moved;
        for (const auto& v : a_std) moved.push_back(permute(u, v));
        Subspace s = Subspace::span(moved, d.size());
        if (std::find(components.begin(), components.end(), s) == components.end()) components.push_back(s);
    }
    ComponentCensus c;
    c.points = points.size();
    c.group_sizes.assign(components.size(), 0);
    c.unique_membership = true;
    for (const auto& p : points) {
        std::size_t hits = 0;
        for (std::size_t k = 0; k < components.size(); ++k)
            if (components[k].contains(p)) {
                ++hits;
                ++c.group_sizes[k];
            }
        if (hits != 1) c.unique_membership = false;
    }
    return c;
}

DimensionAudit fiber_component_dimensions(const SymmetricPair& pair, const Matrix& point, std::uint64_t seed) {
    CentralizerPair cp = centralizer_pair(pair, point, seed);
    DimensionAudit a;
    a.point = point;
    a.target = pair.dim_g1() - pair.r1();
    auto pos = cp.rdi.positive_roots();
    for (const auto& c : cp.census.classes) {
        if (!c.regular()) continue;
        auto roots = translate_roots(c.borel.representative, pos);
        Subspace b = root_span(pair, cp.frame, roots, true);
        Subspace n = root_span(pair, cp.frame, roots, false);
        ComponentDimension cd;
        cd.representative = c.borel.representative;
        cd.dim_g0 = pair.dim_g0();
        cd.dim_b0 = intersect(b, pair.g0()).dim();
        cd.dim_n1 = intersect(n, pair.g1()).dim();
        a.components.push_back(cd);
    }
    return a;
}

DiagonalAudit diagonal_isomorphism_check(const SymmetricPair& pair, const SubgroupReport& subgroups,
                                         std::size_t samples, std::uint64_t seed) {
    if (pair.spec().family != Family::Diag) throw Unsupported("diagonal_isomorphism_check", "pair is not diagonal");
    const std::size_t m = pair.n() / 2;
    auto first = [&](const Matrix& y) { return block_diagonal(y, Matrix(m, m)); };
    auto second = [&](const Matrix& y) { return block_diagonal(Matrix(m, m), y); };
    // Borels of either factor containing the standard torus, one per ordering of the
    // coordinates.
    std::vector<std::vector<std::size_t>> orders;
    {
        std::vector<std::size_t> pi(m);
        for (std::size_t i = 0; i < m; ++i) pi[i] = i;
        do orders.push_back(pi);
        while (std::next_permutation(pi.begin(), pi.end()));
    }
    auto factor_borel = [&](const std::vector<std::size_t>& p, bool second_factor) {
        auto put = [&](const Matrix& y) { return second_factor ? second(y) : first(y); };
        std::vector<Matrix> gens;
        for (std::size_t k = 0; k + 1 < m; ++k) gens.push_back(put(Matrix::unit(m, k, k) - Matrix::unit(m, k + 1, k + 1)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) gens.push_back(put(Matrix::unit(m, p[i], p[j])));
        return pair.span(gens);
    };
    std::vector<Subspace> factor_borels;
    for (const auto& p : orders) factor_borels.push_back(factor_borel(p, false));
    Subspace first_block = [&] {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) gens.push_back(first(Matrix::unit(m, i, j)));
        for (std::size_t k = 0; k + 1 < m; ++k) gens.push_back(first(Matrix::unit(m, k, k) - Matrix::unit(m, k + 1, k + 1)));
        return pair.span(gens);
    }();
    auto first_factor = [&](const Subspace& s) { return intersect(s, first_block); };
    // psi(X, B) = ((X, -X), (B, B')) with B' the opposite of B turned by the longest
    // element of W_L, L = Z(X_ss). For B adapted to L this is Z_B(X_ss) U_P^op.
    auto psi = [&](const Vec& dd, std::size_t index) {
        std::vector<std::size_t> q(orders[index].rbegin(), orders[index].rend());
        std::map<std::string, std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < m; ++i) classes[dd[i].to_string()].push_back(i);
        std::vector<std::size_t> sigma(m);
        for (const auto& [key, idx] : classes)
            for (std::size_t k = 0; k < idx.size(); ++k) sigma[idx[k]] = idx[idx.size() - 1 - k];
        for (auto& v : q) v = sigma[v];
        return factor_borels[index] + factor_borel(q, true);
    };

    DiagonalAudit audit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (std::size_t s = 0; s < samples; ++s) {
        // Regular X = D + N with D diagonal traceless and N a regular nilpotent of z(D).
        Vec dd(m);
        int kind = static_cast<int>(s % 3);
        if (kind == 0) {
            do {
                for (auto& v : dd) v = dist(rng);
                GaussRat tr(0);
                for (std::size_t i = 0; i + 1 < m; ++i) tr += dd[i];
                dd[m - 1] = -tr;
            } while ([&] {
                std::set<std::string> ks;
                for (auto& v : dd) ks.insert(v.to_string());
                return ks.size() != m;
            }());
        } else if (kind == 2 && m >= 3) {
            int a = dist(rng);
            if (a == 0) a = 1;
            dd[0] = a;
            dd[1] = a;
            dd[2] = -2 * a;
        }
        Matrix dm = Matrix::diagonal(dd);
        Matrix n(m, m);
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (dd[i] == dd[i + 1]) n(i, i + 1) = GaussRat(1 + std::abs(dist(rng)));
        Matrix xx = dm + n;
        Matrix x = block_diagonal(xx, -xx);
        if (!is_regular(pair, x)) throw InvariantViolation("diagonal_isomorphism_check", "sample is not regular");
        FiberReport fr = fiber_over_regular(pair, x, subgroups);
        audit.fiber_points += fr.borels.size();

        std::vector<std::size_t> gs;
        for (std::size_t k = 0; k < factor_borels.size(); ++k)
            if (factor_borels[k].contains(pair.coords(first(xx)))) gs.push_back(k);
        bool ok = fr.borels_valid && gs.size() == fr.borels.size();
        for (auto k : gs) {
            Subspace bt = psi(dd, k);
            if (!(first_factor(bt) == factor_borels[k]) || !bt.contains(pair.coords(x))) ok = false;  // phi ∘ psi = id
            if (std::find(fr.borels.begin(), fr.borels.end(), bt) == fr.borels.end()) ok = false;
        }
        for (const auto& bt : fr.borels) {
            Subspace b = first_factor(bt);  // phi
            auto it = std::find(factor_borels.begin(), factor_borels.end(), b);
            if (it == factor_borels.end() || !(psi(dd, static_cast<std::size_t>(it - factor_borels.begin())) == bt))
                ok = false;  // psi ∘ phi = id
        }
        ++audit.samples;
        if (ok) ++audit.passed;
    }
    return audit;
}

} // namespace thetapairs
