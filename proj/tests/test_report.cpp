#include "thetapairs/report.hpp"
#include "thetapairs/verify.hpp"

#include <doctest.h>

using namespace thetapairs;

namespace {

std::string without_timing(Json doc) {
    doc.erase("timing_ms");
    return doc.dump();
}

} // namespace

TEST_CASE("report document for splitA:n=2") {
    Json doc = build_report(PairSpec::parse("splitA:n=2"), {});
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["pair_id"] == "splitA:n=2");
    CHECK(doc["subgroup_report"]["wa_order"] == 6);
    CHECK(doc["regular_class_census"]["regular_count"] == 1);
    CHECK(doc["kw_audit"]["pass"] == true);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys.front() == "schema_version");
    CHECK(keys.back() == "timing_ms");
}

TEST_CASE("report is deterministic apart from timing") {
    for (std::string s : {"splitA:n=1", "g2split"}) {
        PairSpec spec = PairSpec::parse(s);
        CHECK(without_timing(build_report(spec, {})) == without_timing(build_report(spec, {})));
    }
}

TEST_CASE("root-level report has null matrix sections") {
    Json doc = build_report(PairSpec::parse("g2split"), {});
    CHECK(doc["kw_audit"].is_null());
    CHECK(doc["fiber_reports"].is_null());
    CHECK(doc["subgroup_report"]["w_order"] == 12);
}

TEST_CASE("text rendering of e6qs") {
    std::string text = render_text(build_report(PairSpec::parse("e6qs"), {}));
    for (std::string s : {"51840", "1152", "384", "45"}) CHECK(text.find(s) != std::string::npos);
}

TEST_CASE("diag:sl2 report includes a passing isomorphism audit") {
    Json doc = build_report(PairSpec::parse("diag:sl2"), {});
    const Json& d = doc["fiber_reports"]["diagonal_isomorphism"];
    REQUIRE(d.is_object());
    CHECK(d["pass"] == true);
}

TEST_CASE("verify suites") {
    CHECK(known_suite("all"));
    CHECK_FALSE(known_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    VerifyOptions empty;
    empty.pairs.clear();
    CHECK(run_suite("borels", empty).empty());
    VerifyOptions one;
    one.pairs = {PairSpec::parse("e6qs")};
    bool found = false;
    for (const auto& r : run_suite("weyl", one)) {
        CHECK(r.pass);
        found = found || format_check(r).find("E6: [W:W^θ]=45 PASS") != std::string::npos;
    }
    CHECK(found);
}
