// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "thetapairs/involution.hpp"
#include "thetapairs/slice_fibers.hpp"
#include "thetapairs/stabilizer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace thetapairs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

// Shared per-pair data, built once.
struct PairData {
    SymmetricPair pair;
    SubgroupReport subgroups;
};

const PairData& data(const std::string& id) {
    static std::map<std::string, PairData> cache;
    auto it = cache.find(id);
    if (it == cache.end()) {
        SymmetricPair p = SymmetricPair::realize(PairSpec::parse(id));
        SubgroupReport r = compute_subgroups(p);
        it = cache.emplace(id, PairData{std::move(p), std::move(r)}).first;
    }
    return it->second;
}

std::vector<std::string> matrix_ids() {
    std::vector<std::string> ids;
    for (const auto& s : matrix_catalog()) ids.push_back(s.id());
    return ids;
}

Outcome weyl_indices() {
    Outcome o;
    const SubgroupReport& r = data("e6qs").subgroups;
    o.require(r.w_type == "E6" && r.w_order == 51840, "|W(E6)|=" + std::to_string(r.w_order));
    o.require(r.w_theta_type == "F4" && r.w_theta_order == 1152, "W^θ=" + r.w_theta_type);
    o.require(r.w0_type == "C4" && r.w0_order == 384, "W0=" + r.w0_type);
    o.require(r.index_w_w_theta == 45, "[W:W^θ]=" + std::to_string(r.index_w_w_theta));
    o.require(r.index_w_theta_w0 == 3, "[W^θ:W0]=" + std::to_string(r.index_w_theta_w0));
    return o;
}

Outcome g2_split() {
    Outcome o;
    const PairData& d = data("g2split");
    o.require(d.subgroups.index_w_theta_w0 == 3, "[W^θ:W0]=" + std::to_string(d.subgroups.index_w_theta_w0));
    RegularBorelCensus c = detect_regular_borels(d.pair, 1);
    o.require(c.classes.size() == 3, "classes=" + std::to_string(c.classes.size()));
    o.require(c.regular_count == 1, "regular=" + std::to_string(c.regular_count));
    return o;
}

Outcome borel_torsor() {
    Outcome o;
    for (const char* id : {"splitA:n=1", "splitA:n=2", "splitA:n=3", "glgl:n=1", "glgl:n=2", "diag:sl2", "diag:sl3"}) {
        const PairData& d = data(std::string(id));
        SplitBorelCensus c = enumerate_split_borels(d.pair, d.subgroups);
        o.require(c.split.size() == d.subgroups.wa_order && c.torsor, id);
    }
    return o;
}

Outcome canonical_involution_choice() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        SplitBorelCensus c = enumerate_split_borels(d.pair, d.subgroups);
        CanonicalInvolution can = canonical_involution(d.pair, c);
        o.require(can.choice_independent && can.choices == c.split.size(), id);
    }
    return o;
}

Outcome kw_slice() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        SliceAudit a = audit_kw_section(d.pair, build_kw_section(d.pair, 1), 50, 20, 1);
        o.require(a.samples == 50 && a.regular_samples == 50 && a.injective && a.targets == 20 && a.round_trips == 20, id);
    }
    return o;
}

Outcome fiber_cardinalities() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        const SymmetricPair& p = d.pair;
        Matrix rs = regular_a_point(p, d.subgroups, 1);
        o.require(wa_stabilizer_order(p, d.subgroups, rs) == 1, id + " stabilizer");
        FiberReport f = fiber_over_regular(p, rs, d.subgroups);
        o.require(f.borels.size() == d.subgroups.wa_order && f.borels_valid, id + " rs");
        FiberReport n = fiber_over_regular(p, build_kw_section(p, 1).e, d.subgroups);
        o.require(n.borels.size() == 1 && n.borels_valid, id + " nilpotent");
        Matrix dg = degenerate_a_point(p);
        Matrix x = dg + regular_nilpotent(p, centralizer_pair(p, dg, 1));
        FiberReport m = fiber_over_regular(p, x, d.subgroups);
        o.require(m.borels.size() == d.subgroups.wa_order / wa_stabilizer_order(p, d.subgroups, dg) && m.borels_valid,
                  id + " degenerate");
    }
    return o;
}

Outcome component_census_groups() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        ComponentCensus c = component_census(d.pair, regular_a_point(d.pair, d.subgroups, 1));
        bool sizes = true;
        for (auto s : c.group_sizes) sizes = sizes && s == d.subgroups.wa_order;
        o.require(c.points == d.subgroups.w_order && c.group_sizes.size() == d.subgroups.w_order / d.subgroups.wa_order &&
                      sizes && c.unique_membership,
                  id);
    }
    return o;
}

Outcome dimension_audit() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        DimensionAudit zero = fiber_component_dimensions(d.pair, Matrix(d.pair.n(), d.pair.n()), 1);
        DimensionAudit deg = fiber_component_dimensions(d.pair, degenerate_a_point(d.pair), 1);
        o.require(zero.passed() && deg.passed(), id);
        if (id == "splitA:n=1") o.require(zero.components.size() == 2, "sl2 components=" + std::to_string(zero.components.size()));
    }
    return o;
}

Outcome diagonal_isomorphism() {
    Outcome o;
    for (const char* id : {"diag:sl2", "diag:sl3"}) {
        const PairData& d = data(std::string(id));
        DiagonalAudit a = diagonal_isomorphism_check(d.pair, d.subgroups, 20, 1);
        o.require(a.samples >= 20 && a.passed == a.samples, id);
    }
    return o;
}

Outcome stabilizer_contrast() {
    Outcome o;
    const PairData& d = data("splitA:n=1");
    AbelianPlane nil = centralizer_plane(d.pair, build_kw_section(d.pair, 1).e);
    StabilizerFiber sl = stabilizer_fiber(d.pair, nil, IsogenyType::SimplyConnected);
    bool pm = sl.elements.size() == 2 && sl.identity_dimension == 0;
    if (pm) {
        const Matrix id = Matrix::identity(2);
        pm = (sl.elements[0] == id && sl.elements[1] == -id) || (sl.elements[0] == -id && sl.elements[1] == id);
    }
    o.require(pm, "SL2 fiber is not {±I}");
    o.require(sl.admissible_count() == 2, "SL2 admissible=" + std::to_string(sl.admissible_count()));
    CanonicalInvolution can = canonical_involution(d.pair, enumerate_split_borels(d.pair, d.subgroups));
    TorusLatticeModel m = lattice_model(d.pair, can, IsogenyType::Adjoint);
    FixedTorus f = torus_fixed_points(m);
    std::size_t adm = 0;
    for (const auto& e : f.elements()) adm += admissible(m, f, e) ? 1 : 0;
    o.require(f.free_rank == 0 && f.component_order() == 2, "PGL2 torus order=" + std::to_string(f.component_order()));
    o.require(adm == 1, "PGL2 admissible=" + std::to_string(adm));
    return o;
}

Outcome tangent_solver() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        std::size_t ok = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            TangentAudit t = tangent_space_solver(d.pair, centralizer_plane(d.pair, regular_a_point(d.pair, d.subgroups, seed)));
            ok += t.solution_dim == d.pair.dim_g1() - d.pair.r1() && t.evaluation_bijective() ? 1 : 0;
        }
        o.require(ok == 10, id + " " + std::to_string(ok) + "/10");
    }
    return o;
}

Outcome kw_at_zero() {
    Outcome o;
    for (const auto& id : matrix_ids()) {
        const PairData& d = data(std::string(id));
        KWSection kw = build_kw_section(d.pair, 1);
        Vec t = slice_solve(d.pair, kw, Vec(d.pair.r1()));
        Matrix k0 = slice_point(kw, t);
        o.require(vec_is_zero(t) && k0 == kw.e && !kw.e.is_zero() && is_nilpotent(kw.e) && is_regular(d.pair, kw.e), id);
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Weyl indices for E6: 51840, F4 1152, C4 384, [W:W^θ]=45, [W^θ:W0]=3", weyl_indices},
        {"G2 split: [W^θ:W0]=3, one regular class of three", g2_split},
        {"θ-split Borels form a W_a-torsor", borel_torsor},
        {"canonical involution independent of the Borel", canonical_involution_choice},
        {"KW slice: 50 regular samples, injective χ1, 20 round trips", kw_slice},
        {"fiber cardinalities: |W_a|, 1, |W_a|/|Stab|", fiber_cardinalities},
        {"component census: |W/W_a| groups of |W_a|", component_census_groups},
        {"dimension audit at 0 and a degenerate point; sl2 has 2 components", dimension_audit},
        {"diagonal pair isomorphism on 20 samples", diagonal_isomorphism},
        {"stabilizer contrast SL2 {±I} vs PGL2", stabilizer_contrast},
        {"tangent solver at 10 regular planes", tangent_solver},
        {"KW section at 0 is a nonzero regular nilpotent", kw_at_zero},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%zu] %s (%lld ms)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    static_cast<long long>(ms), o.detail.empty() ? "" : ": ", o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
