#include "thetapairs/verify.hpp"

#include "thetapairs/involution.hpp"
#include "thetapairs/slice_fibers.hpp"
#include "thetapairs/stabilizer.hpp"
#include "thetapairs/weyl_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace thetapairs {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"weyl", "borels", "nilcone", "slice", "fibers", "stabilizers", "all"};
    return names;
}

bool known_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::string subject_label(const PairSpec& spec) {
    if (spec.family == Family::E6QuasiSplit) return "E6";
    if (spec.family == Family::G2Split) return "G2";
    return spec.id();
}

std::string format_check(const CheckResult& r) {
    return r.subject + ": " + r.claim + " " + (r.pass ? "PASS" : "FAIL") + " (" + r.topic + ")";
}

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

struct Context {
    const SymmetricPair& pair;
    const SubgroupReport& subgroups;
    std::uint64_t seed;
    std::string subject;
    std::vector<CheckResult>& out;
    void check(const std::string& claim, bool pass, const std::string& topic) { out.push_back({subject, claim, pass, topic}); }
};

void weyl_suite(Context& c) {
    const SubgroupReport& r = c.subgroups;
    const Family f = c.pair.spec().family;
    if (f == Family::E6QuasiSplit) {
        c.check("|W|=" + num(r.w_order), r.w_type == "E6" && r.w_order == 51840, "Weyl indices");
        c.check("W^θ=" + r.w_theta_type + " of order " + num(r.w_theta_order), r.w_theta_type == "F4" && r.w_theta_order == 1152,
                "Weyl indices");
        c.check("W0=" + r.w0_type + " of order " + num(r.w0_order), r.w0_type == "C4" && r.w0_order == 384, "Weyl indices");
        c.check("[W:W^θ]=" + num(r.index_w_w_theta), r.index_w_w_theta == 45, "Weyl indices");
        c.check("[W^θ:W0]=" + num(r.index_w_theta_w0), r.index_w_theta_w0 == 3, "Weyl indices");
    }
    if (f == Family::G2Split) {
        c.check("|W|=" + num(r.w_order), r.w_type == "G2" && r.w_order == 12, "Weyl indices");
        c.check("[W^θ:W0]=" + num(r.index_w_theta_w0), r.index_w_theta_w0 == 3, "Weyl indices");
    }
    c.check("W0 ⊆ W^θ ⊆ W with indices " + num(r.index_w_theta_w0) + ", " + num(r.index_w_w_theta),
            r.w0_order * r.index_w_theta_w0 == r.w_theta_order && r.w_theta_order * r.index_w_w_theta == r.w_order,
            "Weyl indices");
    c.check("|W_a|=" + num(r.wa_order) + " is the order of " + r.wa_type, weyl_order_of_label(r.wa_type) == r.wa_order,
            "little Weyl group");
    if (r.w0_realized) c.check("W0 generated by θ-fixed group elements", *r.w0_realized, "W0 in G0");
    if (r.wa_realized) c.check("W_a generated by θ-fixed group elements", *r.wa_realized, "W_a in G0");
}

void borels_suite(Context& c) {
    const SubgroupReport& r = c.subgroups;
    if (!c.pair.matrix_level()) {
        // Root level: theta*(w Phi+) = -w Phi+ on the split torus.
        const RootDatumWithInvolution& s = c.pair.split();
        const RootDatum& d = *c.pair.datum();
        WeylGroup w = WeylGroup::enumerate(d);
        std::vector<std::size_t> pos;
        for (std::size_t k = 0; k < d.positive_count(); ++k) pos.push_back(k);
        std::size_t split = 0;
        for (const auto& el : w.elements()) {
            auto roots = translate_roots(el, pos);
            std::set<std::size_t> in(roots.begin(), roots.end());
            bool ok = std::none_of(roots.begin(), roots.end(), [&](std::size_t k) { return in.count(s.theta_star(k)) > 0; });
            split += ok ? 1 : 0;
        }
        c.check("θ-split positive systems=" + num(split) + " = |W_a|", split == r.wa_order, "θ-split torsor");
        return;
    }
    SplitBorelCensus census = enumerate_split_borels(c.pair, r);
    c.check("θ-split Borels=" + num(census.split.size()) + " = |W_a|", census.split.size() == r.wa_order, "θ-split torsor");
    c.check("W_a acts simply transitively", census.torsor, "θ-split torsor");
    c.check("root test selects the same Borels", census.root_test_agrees, "θ-split torsor");
    CanonicalInvolution can = canonical_involution(c.pair, census);
    c.check("θ_can identical over " + num(can.choices) + " Borel choices", can.choice_independent && can.choices == census.split.size(),
            "canonical involution");
    c.check("θ_can unchanged for a conjugate involution", can.conjugate_agrees, "canonical involution");
    c.check("θ_can (-1)-eigenspace dim=" + num(can.anti_dim) + " = r1", can.anti_dim == c.pair.r1(), "canonical involution");
}

void nilcone_suite(Context& c) {
    RegularBorelCensus census = detect_regular_borels(c.pair, c.seed);
    const Family f = c.pair.spec().family;
    std::string claim = num(census.regular_count) + " regular of " + num(census.classes.size()) + " θ-stable Borel classes";
    if (f == Family::G2Split) {
        c.check(claim, census.classes.size() == 3 && census.regular_count == 1, "regular Borels");
    } else if (f == Family::SplitA && c.pair.spec().n == 1) {
        c.check(claim, census.regular_count == 2, "regular Borels");
    } else {
        c.check(claim, census.regular_count >= 1, "regular Borels");
    }
    c.check("fast path agrees with the semantic test", census.fast_path_agrees, "regular Borels");
    if (!c.pair.matrix_level()) return;
    DimensionAudit zero = fiber_component_dimensions(c.pair, Matrix(c.pair.n(), c.pair.n()), c.seed);
    c.check("dimension formula at a=0 over " + num(zero.components.size()) + " components", zero.passed(), "dimension formula");
    if (f == Family::SplitA && c.pair.spec().n == 1)
        c.check("2 components at a=0", zero.components.size() == 2, "dimension formula");
    DimensionAudit deg = fiber_component_dimensions(c.pair, degenerate_a_point(c.pair), c.seed);
    c.check("dimension formula at degenerate a over " + num(deg.components.size()) + " components", deg.passed(),
            "dimension formula");
}

void slice_suite(Context& c) {
    if (!c.pair.matrix_level()) return;
    KWSection kw = build_kw_section(c.pair, c.seed);
    SliceAudit a = audit_kw_section(c.pair, kw, 50, 20, c.seed);
    c.check(num(a.regular_samples) + "/" + num(a.samples) + " slice samples regular", a.samples == 50 && a.regular_samples == 50,
            "KW slice");
    c.check("χ1 injective on the samples", a.injective, "KW slice");
    c.check(num(a.round_trips) + "/" + num(a.targets) + " targets round-trip", a.targets == 20 && a.round_trips == 20, "KW slice");
    c.check("triangular invariants and normal triple", a.triangular && a.triple_ok, "KW slice");
    c.check("κ(0)=e with e a nonzero regular nilpotent", a.kappa_zero_is_e && a.e_regular_nilpotent && !kw.e.is_zero(),
            "KW slice at 0");
    c.check("χ1 invariant under W_a and G0", chi1_wa_invariant(c.pair, c.subgroups, 10, c.seed) && chi1_g0_invariant(c.pair, 5, c.seed),
            "KW slice");
}

void fibers_suite(Context& c) {
    if (!c.pair.matrix_level()) return;
    const SubgroupReport& r = c.subgroups;
    Matrix rs = regular_a_point(c.pair, r, c.seed);
    FiberReport f = fiber_over_regular(c.pair, rs, r);
    c.check("regular semisimple fiber=" + num(f.borels.size()) + " = |W_a|", f.borels.size() == r.wa_order && f.borels_valid,
            "fiber cardinality");
    c.check("fiber is one G0-orbit", f.single_g0_orbit.value_or(false), "fiber cardinality");
    KWSection kw = build_kw_section(c.pair, c.seed);
    FiberReport n = fiber_over_regular(c.pair, kw.e, r);
    c.check("regular nilpotent fiber=" + num(n.borels.size()), n.borels.size() == 1 && n.borels_valid, "fiber cardinality");
    Matrix dg = degenerate_a_point(c.pair);
    Matrix mixed = dg + regular_nilpotent(c.pair, centralizer_pair(c.pair, dg, c.seed));
    FiberReport m = fiber_over_regular(c.pair, mixed, r);
    c.check("degenerate fiber=" + num(m.borels.size()) + " = |W_a|/|Stab|=" + num(m.expected()),
            m.borels.size() == m.expected() && m.borels_valid, "fiber cardinality");
    ComponentCensus cc = component_census(c.pair, rs);
    bool sizes = std::all_of(cc.group_sizes.begin(), cc.group_sizes.end(), [&](std::size_t s) { return s == r.wa_order; });
    c.check(num(cc.points) + "-point fiber in " + num(cc.group_sizes.size()) + " groups of |W_a|",
            cc.points == r.w_order && cc.group_sizes.size() * r.wa_order == r.w_order && sizes && cc.unique_membership,
            "component census");
    if (c.pair.spec().family == Family::Diag) {
        DiagonalAudit d = diagonal_isomorphism_check(c.pair, r, 20, c.seed);
        c.check("φ∘ψ = id and ψ∘φ = id on " + num(d.passed) + "/" + num(d.samples) + " samples", d.samples >= 20 && d.passed == d.samples,
                "diagonal isomorphism");
    }
}

bool same_fixed_torus(const FixedTorus& a, const FixedTorus& b) { return a.free_rank == b.free_rank && a.torsion == b.torsion; }

void stabilizers_suite(Context& c) {
    if (!c.pair.matrix_level()) return;
    const SubgroupReport& r = c.subgroups;
    const std::size_t target = c.pair.dim_g1() - c.pair.r1();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < 10; ++k)
        passed += tangent_space_solver(c.pair, centralizer_plane(c.pair, regular_a_point(c.pair, r, c.seed + k))).passed() ? 1 : 0;
    c.check("tangent dim = dim g1 - r1 = " + num(target) + " at " + num(passed) + "/10 regular planes", passed == 10, "tangent solver");
    KWSection kw = build_kw_section(c.pair, c.seed);
    AbelianPlane nil = centralizer_plane(c.pair, kw.e);
    c.check("tangent solver at the nilpotent plane", tangent_space_solver(c.pair, nil).passed(), "tangent solver");

    const PairSpec& s = c.pair.spec();
    if (s.family == Family::SplitA && s.n == 1) {
        AbelianPlane ss = centralizer_plane(c.pair, regular_a_point(c.pair, r, c.seed));
        StabilizerFiber sl_nil = stabilizer_fiber(c.pair, nil, IsogenyType::SimplyConnected);
        c.check("SL2 nilpotent plane: {±I}, both admissible",
                sl_nil.elements.size() == 2 && sl_nil.identity_dimension == 0 && sl_nil.admissible_count() == 2 && sl_nil.closed &&
                    sl_nil.fixes_plane,
                "stabilizer contrast");
        StabilizerFiber sl_ss = stabilizer_fiber(c.pair, ss, IsogenyType::SimplyConnected);
        c.check("SL2 semisimple plane: {±I}", sl_ss.elements.size() == 2 && sl_ss.identity_dimension == 0 && sl_ss.closed,
                "stabilizer contrast");
        StabilizerFiber pgl_nil = stabilizer_fiber(c.pair, nil, IsogenyType::Adjoint);
        c.check("PGL2 nilpotent plane: trivial", pgl_nil.elements.size() == 1 && pgl_nil.identity_dimension == 0,
                "stabilizer contrast");
    }
    if (s.family == Family::GlGl && s.n == 1) {
        StabilizerFiber gl = stabilizer_fiber(c.pair, nil, IsogenyType::SimplyConnected);
        c.check("GL2 nilpotent plane: a 1-dim torus", gl.identity_dimension == 1 && gl.elements.size() == 1, "stabilizer contrast");
    }

    CanonicalInvolution can = canonical_involution(c.pair, enumerate_split_borels(c.pair, r));
    std::vector<IsogenyType> types{IsogenyType::SimplyConnected};
    if (s.family != Family::GlGl) types.push_back(IsogenyType::Adjoint);
    for (auto type : types) {
        TorusLatticeModel m = lattice_model(c.pair, can, type);
        FixedTorus f = torus_fixed_points(m);
        std::size_t adm = 0;
        for (const auto& e : f.elements()) adm += admissible(m, f, e) ? 1 : 0;
        std::string label = to_string(type) + " T^θcan: free rank " + num(f.free_rank) + ", " + num(f.component_order()) +
                            " components, " + num(adm) + " admissible";
        bool expected = f.free_rank == can.fixed_dim;
        if (s.family == Family::SplitA && s.n == 1)
            expected = expected && f.component_order() == 2 && adm == (type == IsogenyType::SimplyConnected ? 2u : 1u);
        if (s.family == Family::Diag && s.n == 2) expected = expected && f.free_rank == 1 && f.torsion.empty();
        c.check(label, expected, "fixed torus");

        // Unimodular change of basis: upper unitriangular all-ones P, P^-1 = I - superdiagonal.
        const std::size_t n = m.theta.rows();
        IntMatrix p(n, n), pinv = IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) p(i, j) = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) pinv(i, i + 1) = -1;
        TorusLatticeModel moved = lattice_model(p * m.theta * pinv, m.roots, type);
        c.check(to_string(type) + " fixed torus invariant under change of basis", same_fixed_torus(f, torus_fixed_points(moved)),
                "fixed torus");
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
    if (!known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    static const std::map<std::string, std::function<void(Context&)>> suites{
        {"weyl", weyl_suite},     {"borels", borels_suite}, {"nilcone", nilcone_suite},
        {"slice", slice_suite},   {"fibers", fibers_suite}, {"stabilizers", stabilizers_suite}};
    std::vector<std::string> order;
    if (suite == "all") {
        for (const auto& name : suite_names())
            if (name != "all") order.push_back(name);
    } else {
        order.push_back(suite);
    }
    std::vector<CheckResult> out;
    for (const auto& spec : options.pairs) {
        SymmetricPair pair = SymmetricPair::realize(spec);
        SubgroupReport subgroups = compute_subgroups(pair);
        Context c{pair, subgroups, options.seed, subject_label(spec), out};
        for (const auto& name : order) suites.at(name)(c);
    }
    return out;
}

} // namespace thetapairs
