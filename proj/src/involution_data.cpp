#include "thetapairs/involution_data.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/matrix.hpp"
#include "thetapairs/subspace.hpp"

#include <algorithm>
#include <set>

namespace thetapairs {

std::string to_string(RootKind k) {
    switch (k) {
    case RootKind::Real: return "real";
    case RootKind::ImaginaryCompact: return "imaginary_compact";
    case RootKind::ImaginaryNoncompact: return "imaginary_noncompact";
    case RootKind::Complex: return "complex";
    }
    return "?";
}

std::vector<std::size_t> RootDatumWithInvolution::member_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < datum->size(); ++k)
        if (member(k)) out.push_back(k);
    return out;
}

std::vector<std::size_t> RootDatumWithInvolution::positive_roots() const {
    if (!positive.empty()) return positive;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < datum->positive_count(); ++k)
        if (member(k)) out.push_back(k);
    return out;
}

bool RootDatumWithInvolution::is_positive(std::size_t k) const {
    if (positive.empty()) return datum->positive(k);
    return std::find(positive.begin(), positive.end(), k) != positive.end();
}

std::vector<std::size_t> RootDatumWithInvolution::simple_roots() const {
    auto pos = positive_roots();
    std::set<std::string> sums;
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b) {
            IntVec s = datum->root(pos[a]);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += datum->root(pos[b])[i];
            sums.insert(int_vec_key(s));
        }
    std::vector<std::size_t> out;
    for (auto k : pos)
        if (!sums.count(int_vec_key(datum->root(k)))) out.push_back(k);
    return out;
}

RootKind RootDatumWithInvolution::kind(std::size_t k) const {
    std::size_t t = theta_star(k);
    if (t == datum->negative(k)) return RootKind::Real;
    if (t == k) {
        if (!compactness[k])
            throw DomainError("classify_roots", "missing compactness tag for imaginary root " + std::to_string(k));
        return *compactness[k] == Compactness::Compact ? RootKind::ImaginaryCompact : RootKind::ImaginaryNoncompact;
    }
    return RootKind::Complex;
}

IntMatrix theta_lattice_matrix(const RootDatumWithInvolution& rdi) { return lattice_action(*rdi.datum, rdi.theta_star); }

void validate(const RootDatumWithInvolution& rdi, bool require_stable_positive) {
    const RootDatum& d = *rdi.datum;
    if (rdi.theta_star.size() != d.size()) throw InvariantViolation("RootDatumWithInvolution", "theta* has wrong size");
    if (!(rdi.theta_star * rdi.theta_star).is_identity())
        throw InvariantViolation("RootDatumWithInvolution", "theta* is not an involution");
    if (!preserves_pairing(d, rdi.theta_star))
        throw InvariantViolation("RootDatumWithInvolution", "theta* does not preserve the form");
    IntMatrix m = theta_lattice_matrix(rdi);
    for (std::size_t k = 0; k < d.size(); ++k) {
        std::vector<mpz_class> v(d.root(k).begin(), d.root(k).end());
        auto img = m.apply(v);
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != d.root(rdi.theta_star(k))[i])
                throw InvariantViolation("RootDatumWithInvolution", "theta* is not linear on roots");
    }
    if (rdi.compactness.size() != d.size())
        throw InvariantViolation("RootDatumWithInvolution", "compactness table has wrong size");
    for (std::size_t k = 0; k < d.size(); ++k) {
        bool imaginary = rdi.theta_star(k) == k;
        if (imaginary != rdi.compactness[k].has_value())
            throw InvariantViolation("RootDatumWithInvolution", "compactness must be tagged exactly on imaginary roots");
    }
    if (!require_stable_positive) return;
    auto pos = rdi.positive_roots();
    std::set<std::size_t> ps(pos.begin(), pos.end());
    for (auto k : pos)
        if (!ps.count(rdi.theta_star(k)))
            throw InvariantViolation("RootDatumWithInvolution", "positive system is not theta-stable");
}

RootPartition classify_roots(const RootDatumWithInvolution& rdi) {
    RootPartition p;
    for (auto k : rdi.member_roots()) {
        switch (rdi.kind(k)) {
        case RootKind::Real: p.real.push_back(k); break;
        case RootKind::ImaginaryCompact: p.imaginary_compact.push_back(k); break;
        case RootKind::ImaginaryNoncompact: p.imaginary_noncompact.push_back(k); break;
        case RootKind::Complex: p.complex.push_back(k); break;
        }
    }
    return p;
}

WeylGroup subsystem_weyl_group(const RootDatumWithInvolution& rdi) {
    std::vector<WeylElement> gens;
    for (auto s : rdi.simple_roots()) gens.emplace_back(rdi.datum->reflection(s));
    return WeylGroup::generated(rdi.datum->size(), gens);
}

std::vector<std::size_t> theta_fixed_elements(const WeylGroup& w, const WeylElement& theta_star) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.order(); ++i)
        if (theta_star * w.element(i) * theta_star == w.element(i)) out.push_back(i);
    return out;
}

namespace {

using QVec = std::vector<mpq_class>;


std::vector<QVec> q_gram(const RootDatum& d) {
    std::vector<QVec> g;
    for (const auto& row : d.gram()) g.push_back(QVec(row.begin(), row.end()));
    return g;
}

mpq_class qinner(const QVec& a, const QVec& b, const std::vector<QVec>& g) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
    return s;
}

QVec restrict_root(const RootDatumWithInvolution& rdi, std::size_t k) {
    const IntVec& a = rdi.datum->root(k);
    const IntVec& b = rdi.datum->root(rdi.theta_star(k));
    QVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = mpq_class(a[i] + b[i], 2);
    for (auto& x : v) x.canonicalize();
    return v;
}

std::string qkey(const QVec& v) {
    std::string s;
    for (const auto& x : v) s += x.get_str() + ",";
    return s;
}

// Basis of the theta*-fixed subspace, restricted to the span of the subsystem.
std::vector<QVec> fixed_basis(const RootDatumWithInvolution& rdi) {
    std::size_t r = rdi.datum->rank();
    std::vector<Vec> span;
    for (auto k : rdi.member_roots()) {
        QVec v = restrict_root(rdi, k);
        if (rdi.theta_star(k) == rdi.datum->negative(k)) continue;
        Vec g;
        for (auto& x : v) g.emplace_back(x);
        span.push_back(g);
    }
    std::vector<QVec> out;
    if (span.empty()) return out;
    Subspace s = Subspace::span(span, r);
    for (const auto& v : s.basis()) {
        QVec q;
        for (const auto& x : v) q.push_back(x.re());
        out.push_back(q);
    }
    return out;
}

} // namespace

VectorRootSystem restricted_system(const RootDatumWithInvolution& rdi, bool compact_and_complex_only) {
    VectorRootSystem sys;
    sys.gram = q_gram(*rdi.datum);
    std::set<std::string> seen;
    for (auto k : rdi.member_roots()) {
        RootKind kd = rdi.kind(k);
        if (kd == RootKind::Real) continue;
        if (compact_and_complex_only && kd == RootKind::ImaginaryNoncompact) continue;
        QVec v = restrict_root(rdi, k);
        if (seen.insert(qkey(v)).second) sys.roots.push_back(v);
    }
    return sys;
}

VectorRootSystem split_restricted_system(const RootDatumWithInvolution& rdi) {
    VectorRootSystem sys;
    sys.gram = q_gram(*rdi.datum);
    std::set<std::string> seen;
    for (auto k : rdi.member_roots()) {
        if (rdi.theta_star(k) == k) continue;
        QVec v = restrict_root(rdi, k);
        const IntVec& a = rdi.datum->root(k);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mpq_class(a[i]) - v[i];
        if (seen.insert(qkey(v)).second) sys.roots.push_back(v);
    }
    return sys;
}

ThetaWeylData theta_weyl_data(const RootDatumWithInvolution& rdi) {
    validate(rdi);
    ThetaWeylData out{subsystem_weyl_group(rdi), {}, {}, {}, {}};
    out.w_theta = theta_fixed_elements(out.w, rdi.theta_star);
    const RootDatum& d = *rdi.datum;
    auto gram = q_gram(d);
    auto fixed = fixed_basis(rdi);
    VectorRootSystem r0 = restricted_system(rdi, true);
    // For each restricted root beta of g0, find the element of W^theta acting on the
    // fixed subspace as the reflection in beta.
    std::vector<WeylElement> gens;
    std::set<std::string> gen_keys;
    for (const auto& beta : r0.roots) {
        mpq_class bb = qinner(beta, beta, gram);
        std::vector<QVec> targets;
        for (const auto& v : fixed) {
            mpq_class c = 2 * qinner(v, beta, gram) / bb;
            QVec t(v);
            for (std::size_t i = 0; i < t.size(); ++i) t[i] -= c * beta[i];
            targets.push_back(t);
        }
        bool found = false;
        for (auto idx : out.w_theta) {
            IntMatrix m = lattice_action(d, out.w.element(idx));
            bool ok = true;
            for (std::size_t j = 0; j < fixed.size() && ok; ++j) {
                for (std::size_t i = 0; i < d.rank() && ok; ++i) {
                    mpq_class s = 0;
                    for (std::size_t l = 0; l < d.rank(); ++l) s += mpq_class(m(i, l)) * fixed[j][l];
                    if (s != targets[j][i]) ok = false;
                }
            }
            if (ok) {
                const WeylElement& e = out.w.element(idx);
                if (gen_keys.insert(e.key()).second) gens.push_back(e);
                found = true;
                break;
            }
        }
        if (!found)
            throw InvariantViolation("compute_subgroups", "no element of W^theta realizes a reflection of g0");
    }
    out.w0 = WeylGroup::generated(d.size(), gens);
    for (const auto& e : out.w0.elements())
        if (!out.w.contains(e) || !(rdi.theta_star * e * rdi.theta_star == e))
            throw InvariantViolation("compute_subgroups", "W0 is not contained in W^theta");
    VectorRootSystem rt = restricted_system(rdi, false);
    out.w_theta_type = recognize_type(rt, out.w_theta.size());
    out.w0_type = recognize_type(r0, out.w0.order());
    return out;
}

std::vector<BorelClass> borel_classes(const RootDatumWithInvolution& rdi, const ThetaWeylData& data) {
    std::vector<BorelClass> classes;
    std::set<std::string> covered;
    auto simple = rdi.simple_roots();
    for (auto idx : data.w_theta) {
        const WeylElement& w = data.w.element(idx);
        if (covered.count(w.key())) continue;
        BorelClass c;
        c.representative = w;
        c.word = data.w.word(idx);
        for (const auto& u : data.w0.elements()) {
            if (covered.insert((u * w).key()).second) ++c.size;
        }
        c.regular = true;
        for (auto s : simple) {
            std::size_t img = w(s);
            c.simple_roots.push_back(img);
            if (rdi.kind(img) == RootKind::ImaginaryCompact) c.regular = false;
        }
        classes.push_back(std::move(c));
    }
    return classes;
}

} // namespace thetapairs
