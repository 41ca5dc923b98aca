#include "thetapairs/errors.hpp"
#include "thetapairs/report.hpp"
#include "thetapairs/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace thetapairs;

namespace {

std::vector<PairSpec> parse_pair_list(const std::string& list) {
    std::vector<PairSpec> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(PairSpec::parse(item));
    return out;
}

int run_report(const std::string& spec_text, bool json, std::uint64_t seed) {
    PairSpec spec = PairSpec::parse(spec_text);
    ReportOptions options;
    options.seed = seed;
    Json doc = build_report(spec, options);
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << render_text(doc);
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::optional<std::string>& pairs) {
    if (!known_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; expected one of:";
        for (const auto& n : suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    }
    VerifyOptions options;
    options.seed = seed;
    if (pairs) options.pairs = parse_pair_list(*pairs);
    std::size_t failed = 0;
    auto results = run_suite(suite, options);
    for (const auto& r : results) {
        std::cout << format_check(r) << "\n";
        failed += r.pass ? 0 : 1;
    }
    std::cout << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric pairs: Weyl data, θ-stable Borels, slices, fibers and stabilizers"};
    app.require_subcommand(1);

    std::string spec_text;
    bool json = false;
    std::uint64_t report_seed = 1;
    auto* report = app.add_subcommand("report", "Run every applicable computation for one pair");
    report->add_option("spec", spec_text, "splitA:n=<k>, glgl:n=<k>, diag:<sl2|sl3>, g2split or e6qs")->required();
    report->add_flag("--json", json, "Emit the JSON document instead of text tables");
    report->add_option("--seed", report_seed, "Seed for sampled witnesses");

    std::string suite;
    std::uint64_t verify_seed = 1;
    std::string pairs_text;
    auto* verify = app.add_subcommand("verify", "Run property suites across the catalog");
    verify->add_option("suite", suite, "weyl, borels, nilcone, slice, fibers, stabilizers or all")->required();
    verify->add_option("--seed", verify_seed, "Seed for sampled witnesses");
    auto* pairs_opt = verify->add_option("--pairs", pairs_text, "Comma-separated pair specs replacing the default catalog; empty runs nothing")
                          ->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return run_report(spec_text, json, report_seed);
        std::optional<std::string> pairs;
        if (pairs_opt->count() > 0) pairs = pairs_text;
        return run_verify(suite, verify_seed, pairs);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error in " << e.operation() << ": " << e.what() << "\n";
        return 3;
    }
}
