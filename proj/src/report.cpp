#include "thetapairs/report.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/involution.hpp"
#include "thetapairs/slice_fibers.hpp"
#include "thetapairs/stabilizer.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace thetapairs {

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

namespace {

Json word_json(const std::vector<int>& word) {
    Json out = Json::array();
    for (int s : word) out.push_back(s);
    return out;
}

Json subgroup_json(const SubgroupReport& r) {
    Json j;
    j["w_type"] = r.w_type;
    j["w_order"] = r.w_order;
    j["w_theta_type"] = r.w_theta_type;
    j["w_theta_order"] = r.w_theta_order;
    j["w0_type"] = r.w0_type;
    j["w0_order"] = r.w0_order;
    j["wa_type"] = r.wa_type;
    j["wa_order"] = r.wa_order;
    j["index_w_w_theta"] = r.index_w_w_theta;
    j["index_w_theta_w0"] = r.index_w_theta_w0;
    j["w0_realized"] = r.w0_realized ? Json(*r.w0_realized) : Json(nullptr);
    j["wa_realized"] = r.wa_realized ? Json(*r.wa_realized) : Json(nullptr);
    return j;
}

Json regular_json(const RegularBorelCensus& c) {
    Json j;
    Json classes = Json::array();
    for (const auto& cl : c.classes) {
        Json e;
        e["word"] = word_json(cl.borel.word);
        e["size"] = cl.borel.size;
        e["fast_path"] = cl.fast_path;
        e["semantic"] = cl.semantic ? Json(*cl.semantic) : Json(nullptr);
        e["regular"] = cl.regular();
        classes.push_back(e);
    }
    j["class_count"] = c.classes.size();
    j["regular_count"] = c.regular_count;
    j["fast_path_agrees"] = c.fast_path_agrees;
    j["classes"] = classes;
    return j;
}

Json fiber_json(const SymmetricPair& pair, const FiberReport& f) {
    Json j;
    j["ss_in_a"] = to_json(split_coordinates(pair, f.base.ss));
    j["nilpotent_part_zero"] = f.base.nil.is_zero();
    j["found"] = f.borels.size();
    j["wa_order"] = f.wa_order;
    j["stabilizer_order"] = f.stabilizer_order;
    j["expected"] = f.expected();
    j["borels_valid"] = f.borels_valid;
    j["single_g0_orbit"] = f.single_g0_orbit ? Json(*f.single_g0_orbit) : Json(nullptr);
    j["pass"] = f.borels.size() == f.expected() && f.borels_valid && f.single_g0_orbit.value_or(true);
    return j;
}

Json dimension_json(const SymmetricPair& pair, const DimensionAudit& a) {
    Json j;
    j["point"] = to_json(split_coordinates(pair, a.point));
    j["target"] = a.target;
    Json comps = Json::array();
    for (const auto& c : a.components) comps.push_back({{"dim_g0", c.dim_g0}, {"dim_b0", c.dim_b0}, {"dim_n1", c.dim_n1}, {"value", c.value()}});
    j["components"] = comps;
    j["pass"] = a.passed();
    return j;
}

Json tangent_json(const TangentAudit& t) {
    return {{"unknowns", t.unknowns},
            {"solution_dim", t.solution_dim},
            {"target", t.target},
            {"evaluation_rank", t.evaluation_rank},
            {"pass", t.passed()}};
}

Json stabilizer_json(const StabilizerFiber& f) {
    Json j;
    j["group"] = f.group;
    Json elems = Json::array();
    for (const auto& e : f.elements) elems.push_back(to_json(e));
    j["elements"] = elems;
    j["identity_dimension"] = f.identity_dimension;
    Json values = Json::array();
    for (const auto& v : f.character_values) values.push_back(to_json(Vec(v.begin(), v.end())));
    j["character_values"] = values;
    j["admissible_count"] = f.admissible_count();
    j["closed"] = f.closed;
    j["fixes_plane"] = f.fixes_plane;
    return j;
}

Json torus_json(const TorusLatticeModel& m) {
    FixedTorus f = torus_fixed_points(m);
    Json j;
    j["isogeny_type"] = to_string(m.type);
    j["lattice_rank"] = m.theta.rows();
    j["free_rank"] = f.free_rank;
    Json tors = Json::array();
    for (const auto& t : f.torsion) tors.push_back(t.get_str());
    j["torsion"] = tors;
    j["component_order"] = f.component_order();
    std::size_t adm = 0;
    for (const auto& e : f.elements()) adm += admissible(m, f, e) ? 1 : 0;
    j["admissible_components"] = adm;
    return j;
}

class Timer {
public:
    explicit Timer(Json& timing) : timing_(timing) {}
    template <class F>
    Json run(const char* name, F&& f) {
        auto start = std::chrono::steady_clock::now();
        Json out = f();
        auto stop = std::chrono::steady_clock::now();
        timing_[name] = std::chrono::duration<double, std::milli>(stop - start).count();
        return out;
    }

private:
    Json& timing_;
};

} // namespace

Json build_report(const PairSpec& spec, const ReportOptions& options) {
    const std::uint64_t seed = options.seed;
    Json timing = Json::object();
    Timer timer(timing);
    SymmetricPair pair = SymmetricPair::realize(spec);
    SubgroupReport subgroups;

    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["pair_id"] = pair.id();
    doc["rank"] = pair.rank();
    doc["r1"] = pair.r1();
    doc["matrix_level"] = pair.matrix_level();
    if (pair.matrix_level()) {
        doc["dims"] = {{"g", pair.dim()}, {"g0", pair.dim_g0()}, {"g1", pair.dim_g1()}};
    } else {
        doc["dims"] = nullptr;
    }
    doc["subgroup_report"] = timer.run("subgroup_report", [&] {
        subgroups = compute_subgroups(pair);
        return subgroup_json(subgroups);
    });
    doc["regular_class_census"] = timer.run("regular_class_census", [&] { return regular_json(detect_regular_borels(pair, seed)); });

    if (!pair.matrix_level()) {
        for (const char* key : {"borel_census", "kw_audit", "fiber_reports", "stabilizer_reports", "torus_reports"})
            doc[key] = nullptr;
        doc["timing_ms"] = timing;
        return doc;
    }

    CanonicalInvolution can;
    doc["borel_census"] = timer.run("borel_census", [&] {
        SplitBorelCensus census = enumerate_split_borels(pair, subgroups);
        can = canonical_involution(pair, census);
        Json j;
        j["examined"] = census.examined;
        j["theta_split"] = census.split.size();
        j["wa_order"] = subgroups.wa_order;
        j["root_test_agrees"] = census.root_test_agrees;
        j["torsor"] = census.torsor;
        j["canonical_involution"] = {{"matrix", to_json(can.matrix)},
                                     {"choices", can.choices},
                                     {"choice_independent", can.choice_independent},
                                     {"conjugate_agrees", can.conjugate_agrees},
                                     {"fixed_dim", can.fixed_dim},
                                     {"anti_dim", can.anti_dim}};
        return j;
    });

    KWSection kw;
    doc["kw_audit"] = timer.run("kw_audit", [&] {
        kw = build_kw_section(pair, seed);
        SliceAudit a = audit_kw_section(pair, kw, options.slice_samples, options.slice_targets, seed);
        Json j;
        j["e"] = to_json(kw.e);
        j["invariant_degrees"] = pair.invariant_degrees();
        j["samples"] = a.samples;
        j["regular_samples"] = a.regular_samples;
        j["injective"] = a.injective;
        j["targets"] = a.targets;
        j["round_trips"] = a.round_trips;
        j["triangular"] = a.triangular;
        j["triple_ok"] = a.triple_ok;
        j["kappa_zero_is_e"] = a.kappa_zero_is_e;
        j["e_regular_nilpotent"] = a.e_regular_nilpotent;
        j["chi1_wa_invariant"] = chi1_wa_invariant(pair, subgroups, 10, seed);
        j["chi1_g0_invariant"] = chi1_g0_invariant(pair, 5, seed);
        j["pass"] = a.passed() && j["chi1_wa_invariant"].get<bool>() && j["chi1_g0_invariant"].get<bool>();
        return j;
    });

    doc["fiber_reports"] = timer.run("fiber_reports", [&] {
        Json j;
        Matrix rs = regular_a_point(pair, subgroups, seed);
        j["regular_semisimple"] = fiber_json(pair, fiber_over_regular(pair, rs, subgroups));
        j["regular_nilpotent"] = fiber_json(pair, fiber_over_regular(pair, kw.e, subgroups));
        Matrix dg = degenerate_a_point(pair);
        Matrix mixed = dg + regular_nilpotent(pair, centralizer_pair(pair, dg, seed));
        j["degenerate"] = fiber_json(pair, fiber_over_regular(pair, mixed, subgroups));
        ComponentCensus cc = component_census(pair, rs);
        std::size_t w_order = subgroups.w_order;
        bool sizes = std::all_of(cc.group_sizes.begin(), cc.group_sizes.end(),
                                 [&](std::size_t s) { return s == subgroups.wa_order; });
        j["component_census"] = {{"points", cc.points},
                                 {"groups", cc.group_sizes.size()},
                                 {"group_sizes", cc.group_sizes},
                                 {"unique_membership", cc.unique_membership},
                                 {"pass", cc.points == w_order && cc.group_sizes.size() == w_order / subgroups.wa_order &&
                                              sizes && cc.unique_membership}};
        Json dims = Json::array();
        dims.push_back(dimension_json(pair, fiber_component_dimensions(pair, Matrix(pair.n(), pair.n()), seed)));
        dims.push_back(dimension_json(pair, fiber_component_dimensions(pair, dg, seed)));
        j["dimension_audits"] = dims;
        if (pair.spec().family == Family::Diag) {
            DiagonalAudit d = diagonal_isomorphism_check(pair, subgroups, options.diagonal_samples, seed);
            j["diagonal_isomorphism"] = {{"samples", d.samples},
                                         {"passed", d.passed},
                                         {"fiber_points", d.fiber_points},
                                         {"pass", d.samples > 0 && d.passed == d.samples}};
        } else {
            j["diagonal_isomorphism"] = nullptr;
        }
        return j;
    });

    doc["stabilizer_reports"] = timer.run("stabilizer_reports", [&] {
        Json j;
        std::vector<std::size_t> dims, ranks;
        std::size_t passed = 0;
        for (std::size_t k = 0; k < options.tangent_planes; ++k) {
            TangentAudit t = tangent_space_solver(pair, centralizer_plane(pair, regular_a_point(pair, subgroups, seed + k)));
            passed += t.passed() ? 1 : 0;
            dims.push_back(t.solution_dim);
            ranks.push_back(t.evaluation_rank);
        }
        j["tangent_regular_planes"] = {{"planes", options.tangent_planes},
                                       {"target", pair.dim_g1() - pair.r1()},
                                       {"solution_dims", dims},
                                       {"evaluation_ranks", ranks},
                                       {"passed", passed}};
        AbelianPlane nil_plane = centralizer_plane(pair, kw.e);
        j["tangent_nilpotent_plane"] = tangent_json(tangent_space_solver(pair, nil_plane));
        Matrix dg = degenerate_a_point(pair);
        Matrix mixed = dg + regular_nilpotent(pair, centralizer_pair(pair, dg, seed));
        j["tangent_mixed_plane"] = tangent_json(tangent_space_solver(pair, centralizer_plane(pair, mixed)));

        Json fibers = Json::array();
        const PairSpec& s = pair.spec();
        if ((s.family == Family::SplitA || s.family == Family::GlGl) && s.n == 1) {
            AbelianPlane ss_plane = centralizer_plane(pair, regular_a_point(pair, subgroups, seed));
            std::vector<IsogenyType> types{IsogenyType::SimplyConnected};
            if (s.family == Family::SplitA) types.push_back(IsogenyType::Adjoint);
            for (auto type : types)
                for (const auto& [name, plane] : {std::pair<const char*, const AbelianPlane&>{"nilpotent", nil_plane},
                                                  std::pair<const char*, const AbelianPlane&>{"semisimple", ss_plane}}) {
                    Json f = stabilizer_json(stabilizer_fiber(pair, plane, type));
                    f["plane"] = name;
                    fibers.push_back(f);
                }
        }
        j["stabilizer_fibers"] = fibers;
        return j;
    });

    doc["torus_reports"] = timer.run("torus_reports", [&] {
        Json j = Json::array();
        std::vector<IsogenyType> types{IsogenyType::SimplyConnected};
        if (pair.spec().family != Family::GlGl) types.push_back(IsogenyType::Adjoint);
        for (auto type : types) j.push_back(torus_json(lattice_model(pair, can, type)));
        return j;
    });

    doc["timing_ms"] = timing;
    return doc;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(1) << v.get<double>();
        return os.str();
    }
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
        return out + "]";
    }
    return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, scalar_text(v));
    }
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : body) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "  " : "  ") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : body) line(row);
    return os.str();
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    os << "pair " << report["pair_id"].get<std::string>() << "  rank " << report["rank"] << "  r1 " << report["r1"];
    if (!report["dims"].is_null())
        os << "  dim g/g0/g1 " << report["dims"]["g"] << "/" << report["dims"]["g0"] << "/" << report["dims"]["g1"];
    os << "\n\n";

    const Json& s = report["subgroup_report"];
    os << "Weyl groups\n"
       << table({"W", "W^theta", "W0", "W_a", "[W:W^theta]", "[W^theta:W0]"},
                {{s["w_type"].get<std::string>() + " " + std::to_string(s["w_order"].get<std::size_t>()),
                  s["w_theta_type"].get<std::string>() + " " + std::to_string(s["w_theta_order"].get<std::size_t>()),
                  s["w0_type"].get<std::string>() + " " + std::to_string(s["w0_order"].get<std::size_t>()),
                  s["wa_type"].get<std::string>() + " " + std::to_string(s["wa_order"].get<std::size_t>()),
                  std::to_string(s["index_w_w_theta"].get<std::size_t>()),
                  std::to_string(s["index_w_theta_w0"].get<std::size_t>())}});

    const Json& rc = report["regular_class_census"];
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : rc["classes"])
        rows.push_back({scalar_text(c["word"]), scalar_text(c["size"]), scalar_text(c["fast_path"]), scalar_text(c["semantic"]),
                        scalar_text(c["regular"])});
    os << "\nTheta-stable Borel classes (" << rc["regular_count"] << " regular)\n"
       << table({"word", "size", "fast path", "semantic", "regular"}, rows);

    for (const char* section : {"borel_census", "kw_audit", "fiber_reports", "stabilizer_reports", "torus_reports"}) {
        if (report[section].is_null()) continue;
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(report[section], "", kv);
        std::vector<std::vector<std::string>> body;
        for (auto& [k, v] : kv) body.push_back({k, v});
        os << "\n" << section << "\n" << table({"field", "value"}, body);
    }
    return os.str();
}

} // namespace thetapairs
